#pragma once

#include <vector>

#include "rdu/chains.hpp"

namespace rdu {

// Ritt order on polynomials: (cls, degree in mvar), then fewer terms, then
// canonical order.
bool ritt_less(const Polynomial& a, const Polynomial& b);
// Ritt order on chains: first differing rank decides; a proper extension
// of a chain is lower than the chain.  Contradictory chains are lowest.
int compare_chain_rank(const AscendingChain& a, const AscendingChain& b);

// Minimal-rank ascending chain contained in `polys` (zero polynomials are
// not allowed).
AscendingChain basic_set(const std::vector<Polynomial>& polys);

struct CharacteristicSet {
    AscendingChain chain;
    // The enlarged system the chain was computed from; every member
    // pseudo-reduces to zero w.r.t. a non-contradictory chain.
    std::vector<Polynomial> system;
};

// Plain characteristic set: nonzero remainders are replaced by their
// squarefree part and added until all remainders vanish.
CharacteristicSet characteristic_set(const std::vector<Polynomial>& polys);

struct WuBranch {
    AscendingChain chain;
    std::vector<Polynomial> system;  // branch system the chain came from
};

struct WuDecomposition {
    std::vector<Polynomial> source;
    std::vector<WuBranch> branches;  // distinct chains, in discovery order

    std::vector<AscendingChain> chains() const;
};

// Wu decomposition with factor splitting of remainders and chain elements
// and branching on non-constant initials.
WuDecomposition wu_decompose(const std::vector<Polynomial>& polys);

bool is_generic_zero_dimensional(const WuDecomposition& w);

// Drops zeros, rejects mixed contexts; canonical associates, deduplicated
// and sorted.
std::vector<Polynomial> prepare_system(const std::vector<Polynomial>& polys);

}  // namespace rdu
