#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rdu/decompose.hpp"

namespace rdu {

struct PointCheck {
    ParameterPoint point;
    bool varieties_equal = false;   // V(P(a)) = union of V(T(a))
    bool specializes_well = false;  // every chain
    bool ranks_preserved = false;   // rank_set(T(a)) = rank_set(T)
    std::size_t system_points = 0;
    std::size_t chain_points = 0;
    std::string error;  // oracle failure, if any

    bool passed() const { return error.empty() && varieties_equal && specializes_well && ranks_preserved; }
    bool operator==(const PointCheck&) const = default;
};

struct CampaignReport {
    std::vector<PointCheck> checks;

    bool passed() const;
    std::size_t failures() const;
};

PointCheck check_point(const std::vector<Polynomial>& system, const Decomposition& d, const ParameterPoint& a);

// Samples points off V(rdu_factors) and checks each; points run in
// parallel with OpenMP.
CampaignReport verify_decomposition(const std::vector<Polynomial>& system, const Decomposition& d,
                                    std::size_t samples, std::uint64_t seed, unsigned height = 50);
// Single-threaded reference with identical output.
CampaignReport verify_decomposition_serial(const std::vector<Polynomial>& system, const Decomposition& d,
                                           std::size_t samples, std::uint64_t seed, unsigned height = 50);

}  // namespace rdu
