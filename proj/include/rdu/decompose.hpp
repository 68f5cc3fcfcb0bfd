#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rdu/chains.hpp"
#include "rdu/factor.hpp"
#include "rdu/wu.hpp"

namespace rdu {

// A non-contradictory Wu chain is not zero-dimensional.
class NonGenericInput : public std::runtime_error {
public:
    NonGenericInput(const std::string& what, AscendingChain chain)
        : std::runtime_error(what), chain_(std::move(chain)) {}
    const AscendingChain& chain() const { return chain_; }

private:
    AscendingChain chain_;
};

using Trace = std::vector<std::string>;

struct ZdToRcResult {
    std::vector<RegularChainZD> chains;
    FactorSet factors;
    std::vector<Trace> traces;  // parallel to chains
};

// Splits a triangular set with mvar(T) = X into zero-dimensional regular
// chains covering V(T \ I_T), with stability factors in the parameters.
ZdToRcResult zd_to_rc(const TriangularSet& t);

struct Decomposition {
    std::vector<RegularChainZD> chains;  // normalized, sorted, distinct
    FactorSet rdu_factors;
    std::vector<Trace> provenance;  // parallel to chains
};

// Generic regular decomposition and RDU factors of a generic
// zero-dimensional system.  Throws NonGenericInput otherwise.
Decomposition rdu_for_zd(const std::vector<Polynomial>& polys);

struct NonredundantWu {
    std::vector<AscendingChain> chains;
    FactorSet rdu_factors;
};

// Wu chains whose zd_to_rc output is nonempty, with the same factors as
// rdu_for_zd.
NonredundantWu nonredundant_wu(const std::vector<Polynomial>& polys);

// Throws NonGenericInput naming the first positive-dimensional chain.
void require_generic(const WuDecomposition& w);

}  // namespace rdu
