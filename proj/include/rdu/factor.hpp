#pragma once

#include <optional>
#include <vector>

#include "rdu/polynomial.hpp"

namespace rdu {

// f / g when g divides f exactly over Q, otherwise nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);
// Throws std::domain_error when the division is not exact.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

// Integer coefficients with gcd 1 and positive lex-leading coefficient.
// Zero maps to zero.
Polynomial canonical_associate(const Polynomial& f);

// Canonical associate of the gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Content w.r.t. one indeterminate, as a canonical associate (1 if all
// coefficients are constants).  Zero for the zero polynomial.
Polynomial content(const Polynomial& f, std::size_t slot);
Polynomial primitive_part(const Polynomial& f, std::size_t slot);

// Pairwise coprime, squarefree, primitive, non-constant factors whose
// product equals f up to a rational unit and multiplicities.  Constants
// give the empty set.  Sorted canonically.
std::vector<Polynomial> squarefree_primitive_factors(const Polynomial& f);

// Product of squarefree_primitive_factors(f), or 1 for constants.
Polynomial squarefree_part(const Polynomial& f);

// Deduplicated set of pairwise coprime squarefree canonical factors.
// Inserting a polynomial splits it and refines against existing members
// by gcd, so the product of the set always has the same zero set as the
// product of everything inserted.
class FactorSet {
public:
    explicit FactorSet(ContextPtr ctx);

    // Throws std::domain_error for the zero polynomial.
    void insert(const Polynomial& f);
    void merge(const FactorSet& other);

    const std::vector<Polynomial>& factors() const { return factors_; }
    const ContextPtr& context() const { return ctx_; }
    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    Polynomial product() const;
    bool contains(const Polynomial& f) const;
    // True when some factor vanishes at the parameter point (factors must
    // be class 0).
    bool vanishes_at(const ParameterPoint& a) const;

private:
    void add_coprime(Polynomial q);

    ContextPtr ctx_;
    std::vector<Polynomial> factors_;
};

}  // namespace rdu
