#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlq/linalg.hpp"
#include "tlq/tlhecke.hpp"

namespace tlq {

/// One generator t_i^j as the index pair (lower i, upper j), 1-based.
using Letter = std::pair<int, int>;
/// A monomial t_{i1}^{j1} ... t_{ir}^{jr}; the empty word is the unit.
using Word = std::vector<Letter>;

/// Shortlex order: length first, then letters.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

/// Finite linear combination of words; zero coefficients are never stored.
class LinComb {
public:
    explicit LinComb(Field f) : field_(std::move(f)) {}

    static LinComb unit(Field f);
    static LinComb generator(Field f, int i, int j);

    const Field& field() const { return field_; }
    const std::map<Word, FieldElement, WordLess>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const FieldElement& c);

    LinComb operator+(const LinComb& o) const;
    LinComb operator-(const LinComb& o) const;
    LinComb scaled(const FieldElement& c) const;
    /// Concatenation product of the free algebra.
    LinComb operator*(const LinComb& o) const;
    bool operator==(const LinComb& o) const;

    /// Canonical text form, e.g. "(q)*t[1,1]*t[2,2] + (-1)*t[1,2]*t[2,1]".
    std::string str() const;

private:
    Field field_;
    std::map<Word, FieldElement, WordLess> terms_;
};

std::string word_str(const Word& w);

struct WellDefWitness {
    std::array<int, 4> relator_index;
    Word word;
    bool word_on_left = false;
    std::string value;
};

struct WellDefResult {
    bool ok = false;
    std::optional<WellDefWitness> witness;
};

/// Evaluator for the bilinear form on words generated by
/// <<t_i^j, t_k^l>> = c * S_{ki}^{jl} and extended by the comultiplication
/// splitting rules; memoized per context. The left argument couples against
/// the opposite algebra, which reverses factor order when the right word is
/// split.
class PairingContext {
public:
    PairingContext(const TLInstance& inst, FieldElement c);
    /// Verification entry point for an arbitrary arity-2 operator.
    PairingContext(Field f, const TensorOperator& s, FieldElement c);

    const Field& field() const { return field_; }
    int n() const { return n_; }
    const FieldElement& c() const { return c_; }
    const TensorOperator& s() const { return s_; }

    FieldElement pair_generators(int i, int j, int k, int l) const;
    FieldElement pair_words(const Word& a, const Word& b);
    FieldElement pair(const LinComb& a, const LinComb& b);

    FieldElement counit(const Word& w) const;
    FieldElement counit(const LinComb& x) const;

    /// S_{ij}^{mn} t_m^p t_n^r - t_i^u t_j^v S_{uv}^{pr} as a free element.
    LinComb rtt_relator(int i, int j, int p, int r) const;
    /// All index tuples whose relator is not identically zero.
    std::vector<std::array<int, 4>> nonzero_relator_indices() const;

    /// pair(r, w) = pair(w, r) = 0 for every relator r and word |w| <= L.
    WellDefResult well_definedness_check(int L);

    /// For generators a, b the splitting-rule combination
    /// <<a_(1), b_(1)>> a_(2) b_(2) - b_(1) a_(1) <<a_(2), b_(2)>> must equal
    /// c times the matching relator, for all index choices.
    bool axiom_iii_check() const;

    /// Right action on V^{tensor m}: coefficients pair the basis word of the
    /// in/out indices against a. Indices packed base-n, most significant
    /// first.
    SparseVec act(const LinComb& a, const SparseVec& xi, int m);

private:
    Field field_;
    int n_;
    TensorOperator s_;
    FieldElement c_;

    // S by rows and columns: packed 2-index -> list of (partner packed, value).
    std::vector<std::vector<std::pair<uint64_t, FieldElement>>> rows_, cols_;

    // dist(letter a, lower indices kvec) = sparse map over upper vectors pvec
    // of pair(a, t_{k1}^{p1}...t_{kr}^{pr}).
    using Dist = std::map<uint64_t, FieldElement>;
    std::map<uint64_t, Dist> dist_memo_;
    std::map<std::pair<uint64_t, uint64_t>, FieldElement> word_memo_;

    const Dist& upper_dist(int x, int y, const std::vector<int>& lower);
    uint64_t pack_word(const Word& w) const;
    FieldElement pair_letter_word(int x, int y, const Word& b);
};

}  // namespace tlq
