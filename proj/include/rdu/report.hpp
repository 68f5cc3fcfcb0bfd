#pragma once

#include <cstdint>
#include <string>

#include "rdu/campaign.hpp"
#include "rdu/decompose.hpp"
#include "rdu/wrsd.hpp"
#include "rdu/wu.hpp"

namespace rdu {

enum class Format { Text, Json };

struct SampleSettings {
    std::size_t samples = 5;
    std::uint64_t seed = 0;
    unsigned height = 50;
};

// Output is a pure function of the arguments.
std::string report_decomposition(const Decomposition& d, const CampaignReport& checks, const SampleSettings& s,
                                 Format f);
std::string report_wu(const WuDecomposition& w, Format f);
std::string report_nonredundant(const NonredundantWu& n, Format f);
std::string report_wrsd(const WrsdResult& w, bool valid, const SampleSettings& s, Format f);
std::string report_verify(const CampaignReport& r, const SampleSettings& s, Format f);

}  // namespace rdu
