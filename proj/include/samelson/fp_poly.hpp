#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "samelson/scalar.hpp"

namespace samelson {

// A named polynomial generator together with half its cohomological
// degree. Every class handled here sits in even degree, so halfdeg
// determines the grading exactly: |x| = 2 * halfdeg.
struct Generator {
    std::string name;
    int halfdeg = 0;
};

class GenContext;
using GenContextPtr = std::shared_ptr<const GenContext>;

// An ordered list of generators over a fixed odd prime. Polynomials
// carry a shared pointer to their context; mixing contexts is an error.
class GenContext {
public:
    static GenContextPtr make(std::uint64_t p, std::vector<Generator> gens);

    std::uint64_t prime() const { return p_; }
    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const;
    const std::vector<Generator>& gens() const { return gens_; }
    // Index of the generator with this name, or -1 if absent.
    int index_of(std::string_view name) const;
    bool same_as(const GenContext& o) const;

private:
    GenContext(std::uint64_t p, std::vector<Generator> gens) : p_(p), gens_(std::move(gens)) {}
    std::uint64_t p_;
    std::vector<Generator> gens_;
};

// Exponent vector, one entry per context generator.
using Monomial = std::vector<int>;

// Graded-lexicographic term order: higher halfdeg first; within a
// degree, lexicographically larger exponent vector first. Map iteration
// order is therefore the canonical rendering order (leading term first).
struct TermOrder {
    GenContextPtr ctx;
    bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_halfdeg(const GenContext& ctx, const Monomial& m);

// An element of F_p[x_1, ..., x_k] with graded named generators.
// Terms are kept normalized: no zero coefficients, exponents >= 0.
class ModPoly {
public:
    using TermMap = std::map<Monomial, std::uint64_t, TermOrder>;

    static ModPoly zero(GenContextPtr ctx);
    static ModPoly constant(GenContextPtr ctx, long long c);
    static ModPoly generator(GenContextPtr ctx, std::size_t i);
    static ModPoly monomial(GenContextPtr ctx, Monomial m, long long c);

    const GenContextPtr& context() const { return ctx_; }
    std::uint64_t prime() const;
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    ModPoly& operator+=(const ModPoly& o);
    ModPoly& operator-=(const ModPoly& o);
    ModPoly operator+(const ModPoly& o) const;
    ModPoly operator-(const ModPoly& o) const;
    ModPoly operator*(const ModPoly& o) const;
    ModPoly operator-() const;
    // Multiply every coefficient by c (reduced mod p).
    ModPoly times(long long c) const;
    bool operator==(const ModPoly& o) const;
    bool operator!=(const ModPoly& o) const { return !(*this == o); }

    // Coefficient of an explicit monomial (zero Scalar when absent).
    Scalar coefficient(const Monomial& m) const;
    // Coefficient of x_i * x_j (i == j means x_i^2). Symmetric in i, j.
    Scalar coefficient_of(std::size_t i, std::size_t j) const;
    // Terms of total exponent exactly one.
    ModPoly linear_part() const;

    // Replace generator i by g (a polynomial over the target context)
    // and transport every other generator to the target by name. g must
    // be homogeneous of the same halfdeg as x_i, or zero.
    ModPoly substitute(std::size_t i, const ModPoly& g) const;

    // Reinterpret the exponent vectors over another context with the
    // same prime and generator count (pure relabelling; degrees may
    // differ between contexts). The term map is rebuilt under the new
    // order.
    ModPoly with_context(GenContextPtr target) const;

    // True for zero and for polynomials whose terms share one halfdeg.
    bool is_homogeneous() const;
    // The common halfdeg, or nullopt when zero or inhomogeneous.
    std::optional<int> homogeneous_halfdeg() const;

    // Canonical rendering: terms in map order, every coefficient
    // explicit, '*' between factors, '^' for powers, " + " joins.
    // signed_coeffs displays symmetric residues, e.g. "2*q1^3 - 1*q2".
    std::string str(bool signed_coeffs = false) const;

private:
    explicit ModPoly(GenContextPtr ctx);
    void add_term(const Monomial& m, std::uint64_t c);
    void check_same_context(const ModPoly& o, const char* op) const;

    GenContextPtr ctx_;
    TermMap terms_;
};

}  // namespace samelson
