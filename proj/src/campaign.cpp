#include "rdu/campaign.hpp"

#include <algorithm>
#include <exception>

#include "rdu/oracle.hpp"

namespace rdu {

PointCheck check_point(const std::vector<Polynomial>& system, const Decomposition& d, const ParameterPoint& a) {
    PointCheck pc;
    pc.point = a;
    try {
        pc.specializes_well = std::all_of(d.chains.begin(), d.chains.end(),
                                          [&](const RegularChainZD& t) { return specializes_well(t, a); });
        pc.ranks_preserved = std::all_of(d.chains.begin(), d.chains.end(), [&](const RegularChainZD& t) {
            return rank_set(specialize_all(t, a)) == rank_set(t);
        });
        if (!pc.specializes_well || !pc.ranks_preserved)
            return pc;

        std::vector<Polynomial> pa;
        const ContextPtr target = variables_only(system.front().ctx());
        for (const auto& p : system)
            pa.push_back(specialize(p, a, target));
        NumericSolutionSet direct = solve_system(pa);
        NumericSolutionSet from_chains;
        for (const auto& t : d.chains)
            from_chains.merge(solve_chain(specialize_all(t, a)));
        pc.system_points = direct.size();
        pc.chain_points = from_chains.size();
        pc.varieties_equal = sets_equal(direct, from_chains, kMembershipTol);
    } catch (const std::exception& e) {
        pc.error = e.what();
    }
    return pc;
}

bool CampaignReport::passed() const {
    return failures() == 0;
}

std::size_t CampaignReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const PointCheck& c) { return !c.passed(); }));
}

CampaignReport verify_decomposition(const std::vector<Polynomial>& system, const Decomposition& d,
                                    std::size_t samples, std::uint64_t seed, unsigned height) {
    const auto points = sample_stable_points(d.rdu_factors, samples, seed, height);
    CampaignReport r;
    r.checks.resize(points.size());
    const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        r.checks[static_cast<std::size_t>(i)] = check_point(system, d, points[static_cast<std::size_t>(i)]);
    return r;
}

CampaignReport verify_decomposition_serial(const std::vector<Polynomial>& system, const Decomposition& d,
                                           std::size_t samples, std::uint64_t seed, unsigned height) {
    CampaignReport r;
    for (const auto& a : sample_stable_points(d.rdu_factors, samples, seed, height))
        r.checks.push_back(check_point(system, d, a));
    return r;
}

}  // namespace rdu
