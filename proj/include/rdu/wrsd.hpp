#pragma once

#include <cstdint>
#include <vector>

#include "rdu/chains.hpp"
#include "rdu/factor.hpp"

namespace rdu {

struct WrsdResult {
    std::vector<RegularChainZD> H;
    std::vector<RegularChainZD> G;
    FactorSet F;
};

// Weakly relatively simplicial decomposition of T w.r.t. P.
WrsdResult wrsd(const RegularChainZD& t, const Polynomial& p);

// Same algorithm on a regular chain T_1..T_r with mvar(T_i) = x_i, r <= n
// (zero-dimensional in x_1..x_r).  Used by zd_to_rc on chain prefixes.
struct WrsdRaw {
    std::vector<std::vector<Polynomial>> H;
    std::vector<std::vector<Polynomial>> G;
    FactorSet F;
};
WrsdRaw wrsd_prefix(const std::vector<Polynomial>& t, const Polynomial& p);

// Numeric check of both variety identities at `samples` parameter points
// drawn off the stability factors of T, P, H and G.
bool is_wrsd_valid(const RegularChainZD& t, const Polynomial& p, const std::vector<RegularChainZD>& h,
                   const std::vector<RegularChainZD>& g, std::size_t samples, std::uint64_t seed,
                   unsigned height = 50);

}  // namespace rdu
