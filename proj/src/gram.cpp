#include "tlq/gram.hpp"

#include "tlq/errors.hpp"

namespace tlq {

Matrix build_gram(const TLInstance& inst, const FieldElement& c) {
    int n = inst.n;
    PairingContext ctx(inst, c);
    Matrix g(inst.field, size_t(n) * n, size_t(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    FieldElement v = ctx.pair_generators(i, j, k, l);
                    if (v.is_zero()) continue;
                    bool transposed = k == j && l == i;
                    bool skew = i + k == n + 1 && j + l == n + 1;
                    if (!transposed && !skew)
                        throw GuardError("support outside the two allowed channels");
                    g.set(size_t(i - 1) * n + (j - 1), size_t(k - 1) * n + (l - 1), v);
                }
    return g;
}

GramBlocks block_decompose(const TLInstance& inst, const FieldElement& c) {
    int n = inst.n;
    Matrix g = build_gram(inst, c);
    GramBlocks out;
    std::vector<bool> seen(size_t(n) * n, false);

    for (int i = 1; i <= n; ++i) {
        int j = n + 1 - i;
        int row = (i - 1) * n + (j - 1), col = (j - 1) * n + (i - 1);
        out.singles.push_back(g.at(row, col));
        out.row_order.push_back(row);
        out.col_order.push_back(col);
        seen[row] = true;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j == n + 1) continue;
            int row1 = (i - 1) * n + (j - 1);
            if (seen[row1]) continue;
            int i2 = n + 1 - j, j2 = n + 1 - i;
            int row2 = (i2 - 1) * n + (j2 - 1);
            int col1 = (j - 1) * n + (i - 1);
            int col2 = (j2 - 1) * n + (i2 - 1);
            seen[row1] = seen[row2] = true;
            Matrix b(inst.field, 2, 2);
            b.set(0, 0, g.at(row1, col1));
            b.set(0, 1, g.at(row1, col2));
            b.set(1, 0, g.at(row2, col1));
            b.set(1, 1, g.at(row2, col2));
            out.doubles.push_back({i, j, b});
            out.row_order.push_back(row1);
            out.row_order.push_back(row2);
            out.col_order.push_back(col1);
            out.col_order.push_back(col2);
        }

    // every off-block entry must be zero
    for (size_t bi = 0; bi < out.row_order.size(); ++bi)
        for (size_t bj = 0; bj < out.col_order.size(); ++bj) {
            size_t block_i = bi < size_t(n) ? bi : n + (bi - n) / 2;
            size_t block_j = bj < size_t(n) ? bj : n + (bj - n) / 2;
            if (block_i == block_j) continue;
            if (!g.at(out.row_order[bi], out.col_order[bj]).is_zero())
                throw GuardError("entry outside the block pattern");
        }
    return out;
}

FieldElement gram_det(const TLInstance& inst, const FieldElement& c) {
    return build_gram(inst, c).det();
}

FieldElement closed_form_det_sq(const TLInstance& inst, const FieldElement& c) {
    int n = inst.n;
    FieldElement out = c.pow(2L * n * n);
    for (int i = 1; i <= n; ++i) {
        FieldElement d = inst.q - inst.z[i - 1];
        out *= d * d;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j == n + 1) continue;
            out *= inst.q * inst.q - inst.z[n - i] * inst.z[j - 1];
        }
    return out;
}

ClosedFormCheck closed_form_check(const TLInstance& inst, const FieldElement& c) {
    ClosedFormCheck res;
    int n = inst.n;
    FieldElement det = gram_det(inst, c);
    res.det_sq_ok = det * det == closed_form_det_sq(inst, c);

    GramBlocks blocks = block_decompose(inst, c);
    res.singles_ok = true;
    for (int i = 1; i <= n; ++i)
        if (blocks.singles[i - 1] != c * (inst.q - inst.z[n - i]))
            res.singles_ok = false;
    res.doubles_ok = true;
    for (const auto& b : blocks.doubles) {
        FieldElement want = c * c * (inst.q * inst.q - inst.z[n - b.i] * inst.z[b.j - 1]);
        if (b.block.det() != want) res.doubles_ok = false;
    }
    return res;
}

std::vector<DegeneracyFactor> degeneracy_factors(const TLInstance& inst) {
    std::vector<DegeneracyFactor> out;
    int n = inst.n;
    if (inst.q.is_zero() || inst.q.is_one()) out.push_back({"q_special", 0, 0});
    for (int i = 1; i <= n; ++i)
        if (inst.q == inst.z[i - 1]) out.push_back({"z_eq_q", i, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i + j == n + 1) continue;
            if (inst.q * inst.q == inst.z[n - i] * inst.z[j - 1])
                out.push_back({"pair_product", i, j});
        }
    return out;
}

bool gram_det_vanishes_at(const TLInstance& inst, const FieldElement& c,
                          const Rational& sigma0) {
    return vanishes_at(gram_det(inst, c), sigma0);
}

}  // namespace tlq
