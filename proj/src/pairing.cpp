#include "tlq/pairing.hpp"

#include <sstream>

#include "tlq/errors.hpp"

namespace tlq {

bool WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

LinComb LinComb::unit(Field f) {
    LinComb x(f);
    x.add_term(Word{}, f.one());
    return x;
}

LinComb LinComb::generator(Field f, int i, int j) {
    LinComb x(f);
    x.add_term(Word{{i, j}}, f.one());
    return x;
}

void LinComb::add_term(const Word& w, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

LinComb LinComb::operator+(const LinComb& o) const {
    LinComb out(*this);
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

LinComb LinComb::operator-(const LinComb& o) const {
    LinComb out(*this);
    for (const auto& [w, c] : o.terms_) out.add_term(w, -c);
    return out;
}

LinComb LinComb::scaled(const FieldElement& c) const {
    LinComb out(field_);
    if (c.is_zero()) return out;
    for (const auto& [w, x] : terms_) out.add_term(w, x * c);
    return out;
}

LinComb LinComb::operator*(const LinComb& o) const {
    LinComb out(field_);
    for (const auto& [wa, ca] : terms_) {
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

bool LinComb::operator==(const LinComb& o) const {
    return (*this - o).is_zero();
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t t = 0; t < w.size(); ++t) {
        if (t) os << "*";
        os << "t[" << w[t].first << "," << w[t].second << "]";
    }
    return os.str();
}

std::string LinComb::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (!w.empty()) os << "*" << word_str(w);
    }
    return os.str();
}

namespace {

uint64_t pack_lower(const std::vector<int>& lower) {
    uint64_t key = lower.size();
    for (size_t t = 0; t < lower.size(); ++t)
        key |= uint64_t(lower[t] - 1) << (4 + 6 * t);
    return key;
}

}  // namespace

PairingContext::PairingContext(const TLInstance& inst, FieldElement c)
    : PairingContext(inst.field, build_S(inst), std::move(c)) {}

PairingContext::PairingContext(Field f, const TensorOperator& s, FieldElement c)
    : field_(std::move(f)), n_(s.local_dim()), s_(s), c_(std::move(c)) {
    if (s.arity() != 2) throw GuardError("pairing needs an arity-2 operator");
    size_t dim = size_t(n_) * size_t(n_);
    rows_.resize(dim);
    cols_.resize(dim);
    for (const auto& [key, val] : s_.raw()) {
        uint64_t in = key >> 32, out = key & 0xffffffffu;
        rows_[in].emplace_back(out, val);
        cols_[out].emplace_back(in, val);
    }
}

FieldElement PairingContext::pair_generators(int i, int j, int k, int l) const {
    return c_ * s_.coeff({k - 1, i - 1}, {j - 1, l - 1});
}

uint64_t PairingContext::pack_word(const Word& w) const {
    if (w.size() > 9) throw GuardError("word too long to pair");
    uint64_t key = w.size();
    for (size_t t = 0; t < w.size(); ++t) {
        uint64_t code = uint64_t(w[t].first - 1) * n_ + uint64_t(w[t].second - 1);
        key |= code << (4 + 6 * t);
    }
    return key;
}

const PairingContext::Dist& PairingContext::upper_dist(int x, int y,
                                                       const std::vector<int>& lower) {
    uint64_t code = uint64_t(x - 1) * n_ + uint64_t(y - 1);
    uint64_t key = code | (pack_lower(lower) << 6);
    auto found = dist_memo_.find(key);
    if (found != dist_memo_.end()) return found->second;

    Dist dist;
    size_t r = lower.size();
    if (r == 1) {
        for (const auto& [out, val] : rows_[uint64_t(lower[0] - 1) * n_ + (x - 1)]) {
            if (int(out / n_) != y - 1) continue;
            uint64_t p = out % n_;
            auto it = dist.find(p);
            if (it == dist.end()) dist.emplace(p, c_ * val);
            else it->second += c_ * val;
        }
    } else {
        std::vector<int> tail(lower.begin() + 1, lower.end());
        uint64_t shift = 1;
        for (size_t t = 1; t < r; ++t) shift *= n_;
        for (int s = 1; s <= n_; ++s) {
            // heads: p1 with <<t_s^y, t_{k1}^{p1}>> nonzero
            std::vector<std::pair<uint64_t, FieldElement>> heads;
            for (const auto& [out, val] : rows_[uint64_t(lower[0] - 1) * n_ + (s - 1)])
                if (int(out / n_) == y - 1) heads.emplace_back(out % n_, c_ * val);
            if (heads.empty()) continue;
            // std::map nodes are stable, so the reference survives recursion
            const Dist& tail_dist = upper_dist(x, s, tail);
            for (const auto& [pt, v1] : tail_dist) {
                for (const auto& [p1, v0] : heads) {
                    uint64_t idx = p1 * shift + pt;
                    FieldElement term = v0 * v1;
                    auto it = dist.find(idx);
                    if (it == dist.end()) dist.emplace(idx, std::move(term));
                    else it->second += term;
                }
            }
        }
    }
    for (auto it = dist.begin(); it != dist.end();)
        it = it->second.is_zero() ? dist.erase(it) : std::next(it);
    return dist_memo_.emplace(key, std::move(dist)).first->second;
}

FieldElement PairingContext::pair_letter_word(int x, int y, const Word& b) {
    std::vector<int> lower(b.size());
    for (size_t t = 0; t < b.size(); ++t) lower[t] = b[t].first;
    uint64_t target = 0;
    for (size_t t = 0; t < b.size(); ++t)
        target = target * n_ + uint64_t(b[t].second - 1);
    const Dist& dist = upper_dist(x, y, lower);
    auto it = dist.find(target);
    return it == dist.end() ? field_.zero() : it->second;
}

FieldElement PairingContext::counit(const Word& w) const {
    for (const auto& [i, j] : w)
        if (i != j) return field_.zero();
    return field_.one();
}

FieldElement PairingContext::counit(const LinComb& x) const {
    FieldElement out = field_.zero();
    for (const auto& [w, c] : x.terms())
        if (counit(w).is_one()) out += c;
    return out;
}

FieldElement PairingContext::pair_words(const Word& a, const Word& b) {
    if (a.empty()) return counit(b);
    if (b.empty()) return counit(a);
    if (a.size() == 1) return pair_letter_word(a[0].first, a[0].second, b);

    auto key = std::make_pair(pack_word(a), pack_word(b));
    auto found = word_memo_.find(key);
    if (found != word_memo_.end()) return found->second;

    std::vector<int> lower(b.size());
    for (size_t t = 0; t < b.size(); ++t) lower[t] = b[t].first;
    Word rest(a.begin() + 1, a.end());
    const Dist& dist = upper_dist(a[0].first, a[0].second, lower);
    FieldElement out = field_.zero();
    for (const auto& [pvec, v] : dist) {
        Word low(b.size(), {0, 0});
        uint64_t p = pvec;
        for (size_t t = b.size(); t-- > 0;) {
            low[t] = {int(p % n_) + 1, b[t].second};
            p /= n_;
        }
        out += v * pair_words(rest, low);
    }
    word_memo_.emplace(key, out);
    return out;
}

FieldElement PairingContext::pair(const LinComb& a, const LinComb& b) {
    FieldElement out = field_.zero();
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            out += ca * cb * pair_words(wa, wb);
    return out;
}

LinComb PairingContext::rtt_relator(int i, int j, int p, int r) const {
    LinComb out(field_);
    for (const auto& [o, val] : rows_[uint64_t(i - 1) * n_ + (j - 1)]) {
        int m = int(o / n_) + 1, nn = int(o % n_) + 1;
        out.add_term({{m, p}, {nn, r}}, val);
    }
    for (const auto& [in, val] : cols_[uint64_t(p - 1) * n_ + (r - 1)]) {
        int u = int(in / n_) + 1, v = int(in % n_) + 1;
        out.add_term({{i, u}, {j, v}}, -val);
    }
    return out;
}

std::vector<std::array<int, 4>> PairingContext::nonzero_relator_indices() const {
    std::vector<std::array<int, 4>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            for (int p = 1; p <= n_; ++p)
                for (int r = 1; r <= n_; ++r)
                    if (!rtt_relator(i, j, p, r).is_zero())
                        out.push_back({i, j, p, r});
    return out;
}

WellDefResult PairingContext::well_definedness_check(int L) {
    if (L < 0) throw GuardError("well-definedness degree must be nonnegative");
    auto rels = nonzero_relator_indices();
    const FieldElement zero = field_.zero();
    int letters = n_ * n_;

    auto letter_of = [&](int code) {
        return Letter{code / n_ + 1, code % n_ + 1};
    };
    auto fail = [&](const std::array<int, 4>& ridx, Word w, bool word_left,
                    const FieldElement& v) {
        WellDefResult res;
        res.ok = false;
        res.witness = WellDefWitness{ridx, std::move(w), word_left, v.str()};
        return res;
    };

    // transposed single-letter tables: for each upper pair, p-vector -> hits
    std::map<uint64_t, std::map<uint64_t, std::vector<std::pair<int, FieldElement>>>>
        by_upper;
    if (L >= 2) {
        for (int a2 = 0; a2 < letters; ++a2) {
            auto [x, y] = letter_of(a2);
            for (int p1 = 1; p1 <= n_; ++p1)
                for (int p2 = 1; p2 <= n_; ++p2) {
                    const Dist& d = upper_dist(x, y, {p1, p2});
                    for (const auto& [up, v] : d)
                        by_upper[up][uint64_t(p1 - 1) * n_ + (p2 - 1)].emplace_back(a2, v);
                }
        }
    }

    for (const auto& ridx : rels) {
        LinComb rel = rtt_relator(ridx[0], ridx[1], ridx[2], ridx[3]);

        FieldElement eps = counit(rel);
        if (!eps.is_zero()) return fail(ridx, Word{}, true, eps);

        if (L >= 1) {
            for (int e = 0; e < letters; ++e) {
                Word w{letter_of(e)};
                FieldElement left = zero, right = zero;
                for (const auto& [wt, gamma] : rel.terms()) {
                    left += gamma * pair_words(w, wt);
                    right += gamma * pair_words(wt, w);
                }
                if (!left.is_zero()) return fail(ridx, w, true, left);
                if (!right.is_zero()) return fail(ridx, w, false, right);
            }
        }

        if (L >= 2) {
            // pair(w, rel) over all length-2 words w = (a1, a2)
            std::map<uint32_t, FieldElement> acc;
            auto bump = [&](uint32_t k, FieldElement v) {
                auto it = acc.find(k);
                if (it == acc.end()) acc.emplace(k, std::move(v));
                else it->second += v;
            };
            for (const auto& [wt, gamma] : rel.terms()) {
                auto [k1, l1] = wt[0];
                auto [k2, l2] = wt[1];
                uint64_t up = uint64_t(l1 - 1) * n_ + (l2 - 1);
                auto upit = by_upper.find(up);
                for (int a1 = 0; a1 < letters; ++a1) {
                    auto [x, y] = letter_of(a1);
                    const Dist& d1 = upper_dist(x, y, {k1, k2});
                    for (const auto& [pv, v1] : d1) {
                        if (upit == by_upper.end()) continue;
                        auto hit = upit->second.find(pv);
                        if (hit == upit->second.end()) continue;
                        FieldElement gv = gamma * v1;
                        for (const auto& [a2, v2] : hit->second)
                            bump(uint32_t(a1) * letters + a2, gv * v2);
                    }
                }
            }
            for (const auto& [k, v] : acc) {
                if (v.is_zero()) continue;
                Word w{letter_of(int(k) / letters), letter_of(int(k) % letters)};
                return fail(ridx, w, true, v);
            }

            // pair(rel, w) over all length-2 words w with lowers m, uppers nn
            acc.clear();
            for (const auto& [wt, gamma] : rel.terms()) {
                auto [x1, y1] = wt[0];
                auto [x2, y2] = wt[1];
                for (int m1 = 1; m1 <= n_; ++m1)
                    for (int m2 = 1; m2 <= n_; ++m2) {
                        const Dist& d1 = upper_dist(x1, y1, {m1, m2});
                        for (const auto& [pv, v1] : d1) {
                            int p1 = int(pv / n_) + 1, p2 = int(pv % n_) + 1;
                            const Dist& d2 = upper_dist(x2, y2, {p1, p2});
                            FieldElement gv = gamma * v1;
                            for (const auto& [nv, v2] : d2)
                                bump(uint32_t(((m1 - 1) * n_ + (m2 - 1)) * letters + nv),
                                     gv * v2);
                        }
                    }
            }
            for (const auto& [k, v] : acc) {
                if (v.is_zero()) continue;
                int mcode = int(k) / letters, ncode = int(k) % letters;
                Word w{{mcode / n_ + 1, ncode / n_ + 1},
                       {mcode % n_ + 1, ncode % n_ + 1}};
                return fail(ridx, w, false, v);
            }
        }

        // longer words: generic recursion, only viable for small n and L
        for (int len = 3; len <= L; ++len) {
            uint64_t count = 1;
            for (int t = 0; t < 2 * len; ++t) {
                count *= uint64_t(n_);
                if (count > (1u << 24)) throw GuardError("well-definedness degree too large");
            }
            for (uint64_t wi = 0; wi < count; ++wi) {
                Word w(len);
                uint64_t x = wi;
                for (int t = len; t-- > 0;) {
                    int up = int(x % n_) + 1;
                    x /= n_;
                    int lo = int(x % n_) + 1;
                    x /= n_;
                    w[t] = {lo, up};
                }
                FieldElement left = zero, right = zero;
                for (const auto& [wt, gamma] : rel.terms()) {
                    left += gamma * pair_words(w, wt);
                    right += gamma * pair_words(wt, w);
                }
                if (!left.is_zero()) return fail(ridx, w, true, left);
                if (!right.is_zero()) return fail(ridx, w, false, right);
            }
        }
    }
    WellDefResult res;
    res.ok = true;
    return res;
}

bool PairingContext::axiom_iii_check() const {
    if (c_.is_zero())
        throw GuardError("normalization c is zero, the compatibility check is vacuous");
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            for (int k = 1; k <= n_; ++k)
                for (int l = 1; l <= n_; ++l) {
                    LinComb lhs(field_);
                    for (const auto& [o, val] : rows_[uint64_t(k - 1) * n_ + (i - 1)]) {
                        int p = int(o / n_) + 1, r = int(o % n_) + 1;
                        lhs.add_term({{p, j}, {r, l}}, c_ * val);
                    }
                    for (const auto& [in, val] : cols_[uint64_t(j - 1) * n_ + (l - 1)]) {
                        int r = int(in / n_) + 1, p = int(in % n_) + 1;
                        lhs.add_term({{k, r}, {i, p}}, -(c_ * val));
                    }
                    LinComb want = rtt_relator(k, i, j, l).scaled(c_);
                    if (!(lhs == want)) return false;
                }
    return true;
}

SparseVec PairingContext::act(const LinComb& a, const SparseVec& xi, int m) {
    if (m < 0) throw GuardError("tensor degree must be nonnegative");
    uint64_t count = 1;
    for (int t = 0; t < m; ++t) {
        count *= uint64_t(n_);
        if (count > (1u << 20)) throw GuardError("tensor degree too large to act on");
    }
    SparseVec out;
    for (uint64_t jv = 0; jv < count; ++jv) {
        FieldElement coeff = field_.zero();
        std::vector<int> jd = unpack_index(jv, n_, m);
        for (const auto& [kv, xval] : xi.terms) {
            std::vector<int> kd = unpack_index(kv, n_, m);
            Word w(m);
            for (int t = 0; t < m; ++t) w[t] = {kd[t] + 1, jd[t] + 1};
            for (const auto& [wa, ca] : a.terms())
                coeff += xval * ca * pair_words(w, wa);
        }
        if (!coeff.is_zero()) out.terms.emplace_back(jv, coeff);
    }
    return out;
}

}  // namespace tlq
