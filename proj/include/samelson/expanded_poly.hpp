#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "samelson/scalar.hpp"

namespace samelson {

// Exponent vector over anonymous variables y_1, ..., y_n.
using ExpMonomial = std::vector<int>;

// Lexicographically larger exponent vector first, so begin() is the
// lex-leading term (the one greedy symmetrization peels off).
struct LexDesc {
    bool operator()(const ExpMonomial& a, const ExpMonomial& b) const { return a > b; }
};

// A polynomial in F_p[y_1, ..., y_n] with plain numbered variables.
// This is the fully expanded representation: elementary-symmetric
// images and the brute-force oracle live here.
class ExpandedPoly {
public:
    using TermMap = std::map<ExpMonomial, std::uint64_t, LexDesc>;

    ExpandedPoly(std::uint64_t p, int nvars);
    static ExpandedPoly monomial(std::uint64_t p, int nvars, ExpMonomial m, long long c);
    static ExpandedPoly variable(std::uint64_t p, int nvars, int j);
    // e_i(y_1, ..., y_n) expanded as a sum of squarefree monomials.
    static ExpandedPoly elementary(std::uint64_t p, int nvars, int i);
    // y_1^m + ... + y_n^m summed directly (no recurrences).
    static ExpandedPoly power_sum_direct(std::uint64_t p, int nvars, int m);

    std::uint64_t prime() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    ExpandedPoly& operator+=(const ExpandedPoly& o);
    ExpandedPoly& operator-=(const ExpandedPoly& o);
    ExpandedPoly operator+(const ExpandedPoly& o) const;
    ExpandedPoly operator-(const ExpandedPoly& o) const;
    ExpandedPoly operator*(const ExpandedPoly& o) const;
    ExpandedPoly times(long long c) const;
    bool operator==(const ExpandedPoly& o) const;
    bool operator!=(const ExpandedPoly& o) const { return !(*this == o); }

    Scalar coefficient(const ExpMonomial& m) const;
    // The polynomial with variables a and b exchanged.
    ExpandedPoly swap_vars(int a, int b) const;

    // Diagnostic rendering (y1^2*y2 style), same conventions as ModPoly.
    std::string str() const;

private:
    void add_term(const ExpMonomial& m, std::uint64_t c);
    void check_compatible(const ExpandedPoly& o, const char* op) const;

    std::uint64_t p_;
    int nvars_;
    TermMap terms_;
};

// Extend y_j -> lambda * y_j^m to a derivation and apply it. This is
// the monomial-by-monomial product rule; it is the oracle's analogue
// of the elementary-basis Steenrod formulas and shares no recurrence
// with them.
ExpandedPoly apply_derivation(const ExpandedPoly& f, int m, long long lambda);

}  // namespace samelson
