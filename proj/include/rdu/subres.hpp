#pragma once

#include <span>
#include <vector>

#include "rdu/polynomial.hpp"

namespace rdu {

// Subresultant chain of f, g w.r.t. the indeterminate at `slot`, with
// m = deg f > l = deg g > 0.  S[m] = f, S[m-1] = g, and S[j] for j < m-1
// are the determinantal subresultants (rows of f first).
struct SubresultantChain {
    std::size_t slot = 0;
    std::vector<Polynomial> S;

    unsigned m() const { return static_cast<unsigned>(S.size() - 1); }
    unsigned mu() const { return m() - 1; }
    // Principal subresultant coefficient: coefficient of x^j in S_j.
    Polynomial R(unsigned j) const { return coefficient(S.at(j), slot, j); }
    const Polynomial& resultant() const { return S.front(); }
};

SubresultantChain subresultant_chain(const Polynomial& f, const Polynomial& g, std::size_t slot);

// d_0 = 0 < d_1 < ... < d_v, where d_i (i >= 1) are the j in [1, m-1] with
// deg(S_j) = j exactly.
struct RegularSubresultantChain {
    SubresultantChain chain;
    std::vector<unsigned> indices;

    std::size_t upsilon() const { return indices.size() - 1; }
    const Polynomial& S(std::size_t i) const { return chain.S.at(indices.at(i)); }
    Polynomial R(std::size_t i) const { return chain.R(indices.at(i)); }
};

RegularSubresultantChain regular_indices(SubresultantChain c);

// Sylvester resultant (rows of f first).  Both degrees must be positive.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t slot);

// res(...res(res(f, T_r), T_{r-1})..., T_1), skipping levels whose main
// variable the intermediate result does not involve.
Polynomial successive_resultant(const Polynomial& f, std::span<const Polynomial> chain);

}  // namespace rdu
