#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rdu/context.hpp"

namespace rdu {

using Rational = mpq_class;
using Exponents = std::vector<std::uint32_t>;

struct Term {
    Exponents exp;
    Rational coef;
};

// Graded lex, ties broken from the highest slot down.  Returns <0, 0, >0.
int grlex_compare(const Exponents& a, const Exponents& b);
// Pure lex with the highest slot most significant.
int lex_compare(const Exponents& a, const Exponents& b);

// Sparse polynomial over Q.  Terms are kept sorted in descending grlex
// order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    explicit Polynomial(ContextPtr ctx);
    // Sorts, combines like terms and drops zeros.
    Polynomial(ContextPtr ctx, std::vector<Term> terms);

    static Polynomial constant(ContextPtr ctx, const Rational& c);
    static Polynomial monomial(ContextPtr ctx, std::size_t slot, unsigned power = 1,
                               const Rational& c = 1);

    const ContextPtr& context() const { return ctx_; }
    const Context& ctx() const { return *ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the constant monomial.
    Rational constant_term() const;
    // Leading term w.r.t. grlex; precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }
    // Leading term w.r.t. lex (highest slot first); precondition: nonzero.
    const Term& lex_leading_term() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;

    bool operator==(const Polynomial& o) const;

    // Canonical text form, recursive in the highest present indeterminate.
    std::string str() const;

    // Internal: adopt already-canonical terms without checking.
    static Polynomial from_sorted(ContextPtr ctx, std::vector<Term> terms);

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

// Total order used for canonical set ordering.
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);
inline bool canonical_less(const Polynomial& a, const Polynomial& b) {
    return canonical_compare(a, b) < 0;
}

// Multiplication kernels.  `multiply` picks one by size.
Polynomial multiply_serial(const Polynomial& a, const Polynomial& b);
Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b);
// Product size (terms(a) * terms(b)) at which `multiply` goes parallel.
inline constexpr std::size_t kParallelMulThreshold = 1u << 14;

// ---- structure in one indeterminate ----

unsigned degree(const Polynomial& f, std::size_t slot);
unsigned total_degree(const Polynomial& f);
bool involves(const Polynomial& f, std::size_t slot);
// Highest slot with positive degree, or -1 for constants.
int top_slot(const Polynomial& f);

// Class in [0, n]; throws on the zero polynomial.
std::size_t cls(const Polynomial& f);
// Slot of x_cls(f); throws when cls(f) == 0.
std::size_t mvar(const Polynomial& f);

struct Rank {
    std::size_t cls = 0;
    unsigned degree = 0;
    auto operator<=>(const Rank&) const = default;
};
// Class-0 polynomials have rank {0, 0}.
Rank rank(const Polynomial& f);
std::string rank_str(const Context& ctx, const Rank& r);

// Coefficients c_0..c_m with f = sum c_k * x^k, x = slot.
std::vector<Polynomial> coefficients(const Polynomial& f, std::size_t slot);
Polynomial from_coefficients(const ContextPtr& ctx, const std::vector<Polynomial>& c,
                             std::size_t slot);
Polynomial coefficient(const Polynomial& f, std::size_t slot, unsigned k);
Polynomial leading_coefficient(const Polynomial& f, std::size_t slot);
// Leading coefficient w.r.t. mvar; throws for class 0.
Polynomial initial(const Polynomial& f);

Polynomial derivative(const Polynomial& f, std::size_t slot);
Polynomial substitute(const Polynomial& f, std::size_t slot, const Rational& v);
// Exact value at a point covering every slot.
Rational evaluate(const Polynomial& f, std::span<const Rational> values);

// ---- pseudo-division ----

struct PseudoDivision {
    Polynomial quotient;
    Polynomial remainder;
    unsigned exponent;  // lc(p)^exponent * f = quotient * p + remainder
};

// Classical pseudo-division with exponent max(deg f - deg p + 1, 0).
PseudoDivision pseudo_divide(const Polynomial& f, const Polynomial& p, std::size_t slot);
Polynomial prem(const Polynomial& f, const Polynomial& p, std::size_t slot);
Polynomial pquo(const Polynomial& f, const Polynomial& p, std::size_t slot);

// Successive pseudo-remainder w.r.t. a triangular set given in increasing
// class order.
Polynomial sprem(const Polynomial& f, std::span<const Polynomial> chain);
bool is_reduced(const Polynomial& f, std::span<const Polynomial> chain);

// ---- specialization ----

using ParameterPoint = std::vector<Rational>;

// Substitutes the parameters; the result lives in `target`, which must have
// the same variables and no parameters.
Polynomial specialize(const Polynomial& f, const ParameterPoint& a, const ContextPtr& target);
Polynomial specialize(const Polynomial& f, const ParameterPoint& a);

// Re-homes a polynomial into a context with the same slot layout.
Polynomial rehome(const Polynomial& f, const ContextPtr& ctx);

std::string point_str(const ParameterPoint& a);

}  // namespace rdu
