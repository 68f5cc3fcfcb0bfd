#pragma once

#include <span>
#include <string>
#include <vector>

#include "rdu/polynomial.hpp"

namespace rdu {

// Nonempty sequence with 0 < cls(T_1) < ... < cls(T_r).
class TriangularSet {
public:
    explicit TriangularSet(std::vector<Polynomial> polys);

    std::size_t size() const { return polys_.size(); }
    const Polynomial& operator[](std::size_t i) const { return polys_[i]; }
    const std::vector<Polynomial>& polys() const { return polys_; }
    auto begin() const { return polys_.begin(); }
    auto end() const { return polys_.end(); }
    operator std::span<const Polynomial>() const { return polys_; }
    const ContextPtr& context() const { return polys_.front().context(); }

    // Main variables cover x_1..x_n of the context.
    bool is_zero_dimensional() const;
    std::vector<std::string> strs() const;

    bool operator==(const TriangularSet&) const = default;

private:
    std::vector<Polynomial> polys_;
};

bool is_triangular(std::span<const Polynomial> polys);

struct AscendingChain {
    bool contradictory = false;
    // Contradictory: one nonzero class-0 polynomial.
    std::vector<Polynomial> polys;

    TriangularSet as_triangular() const;
    std::vector<std::string> strs() const;
};

// Zero-dimensional regular chain: mvar(T_i) = x_i for i = 1..n and every
// initial has nonzero successive resultant w.r.t. the chain below it.
class RegularChainZD {
public:
    // Verifies regularity exactly; throws std::invalid_argument otherwise.
    static RegularChainZD checked(TriangularSet t);
    // For algorithm internals whose invariants already guarantee regularity.
    static RegularChainZD trusted(TriangularSet t);

    const TriangularSet& set() const { return set_; }
    operator const TriangularSet&() const { return set_; }
    operator std::span<const Polynomial>() const { return set_.polys(); }
    std::size_t size() const { return set_.size(); }
    const Polynomial& operator[](std::size_t i) const { return set_[i]; }
    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }
    std::vector<std::string> strs() const { return set_.strs(); }

    bool operator==(const RegularChainZD&) const = default;

private:
    explicit RegularChainZD(TriangularSet t) : set_(std::move(t)) {}
    TriangularSet set_;
};

bool is_regular_chain(const TriangularSet& t);

std::vector<Rank> rank_set(std::span<const Polynomial> t);

// Product over i of successive_resultant(initial(T_i), T); nonzero class-0
// polynomial for a regular chain.  Throws if the result involves a variable.
Polynomial iterated_initial_resultant(const TriangularSet& t);

// Each polynomial specialized; the result may no longer be triangular.
std::vector<Polynomial> specialize_all(std::span<const Polynomial> t, const ParameterPoint& a);

// Resultant criterion, cross-checked against the direct rank/regularity test.
bool specializes_well(const RegularChainZD& t, const ParameterPoint& a);
// Direct route alone: T(a) is a regular chain with the same rank as T.
bool specializes_well_direct(const TriangularSet& t, const ParameterPoint& a);

// Each element made primitive w.r.t. its main variable with canonical
// integer normalization.
TriangularSet normalize_chain(const TriangularSet& t);

// Canonical ordering of chains (by element-wise canonical order).
bool chain_less(std::span<const Polynomial> a, std::span<const Polynomial> b);

}  // namespace rdu
