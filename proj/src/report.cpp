#include "rdu/report.hpp"

#include <json.hpp>

namespace rdu {

namespace {

using nlohmann::ordered_json;

ordered_json strings(const std::vector<std::string>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& s : v)
        a.push_back(s);
    return a;
}

std::vector<std::string> factor_strs(const FactorSet& f) {
    std::vector<std::string> out;
    for (const auto& p : f.factors())
        out.push_back(p.str());
    return out;
}

std::vector<std::string> point_strs(const ParameterPoint& a) {
    std::vector<std::string> out;
    for (const auto& q : a)
        out.push_back(q.get_str());
    return out;
}

std::string pass(bool ok) {
    return ok ? "pass" : "FAIL";
}

std::string bullet_chain(const std::vector<std::string>& polys) {
    std::string out = "  [";
    for (std::size_t i = 0; i < polys.size(); ++i)
        out += (i ? ", " : "") + polys[i];
    return out + "]\n";
}

std::string factor_line(const FactorSet& f) {
    std::string out = "rdu factors (" + std::to_string(f.size()) + "):";
    for (const auto& p : f.factors())
        out += "\n  " + p.str();
    return out + "\n";
}

ordered_json checks_json(const CampaignReport& r, const SampleSettings& s) {
    ordered_json points = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json p;
        p["point"] = strings(point_strs(c.point));
        p["varieties_equal"] = c.varieties_equal;
        p["specializes_well"] = c.specializes_well;
        p["ranks_preserved"] = c.ranks_preserved;
        p["system_points"] = c.system_points;
        p["chain_points"] = c.chain_points;
        if (!c.error.empty())
            p["error"] = c.error;
        points.push_back(std::move(p));
    }
    ordered_json out;
    out["samples"] = s.samples;
    out["seed"] = s.seed;
    out["height"] = s.height;
    out["passed"] = r.passed();
    out["points"] = std::move(points);
    return out;
}

std::string checks_text(const CampaignReport& r) {
    std::size_t ve = 0, sw = 0, rp = 0;
    for (const auto& c : r.checks) {
        ve += c.varieties_equal;
        sw += c.specializes_well;
        rp += c.ranks_preserved;
    }
    const std::string n = std::to_string(r.checks.size());
    std::string out;
    out += "V(P(a)) = union V(T(a)): " + pass(ve == r.checks.size()) + " (" + std::to_string(ve) + "/" + n + ")\n";
    out += "specializes well:        " + pass(sw == r.checks.size()) + " (" + std::to_string(sw) + "/" + n + ")\n";
    out += "ranks preserved:         " + pass(rp == r.checks.size()) + " (" + std::to_string(rp) + "/" + n + ")\n";
    for (const auto& c : r.checks) {
        if (c.passed())
            continue;
        out += "  failed at " + point_str(c.point);
        if (!c.error.empty())
            out += ": " + c.error;
        out += "\n";
    }
    return out;
}

}  // namespace

std::string report_decomposition(const Decomposition& d, const CampaignReport& checks, const SampleSettings& s,
                                 Format f) {
    if (f == Format::Json) {
        ordered_json j;
        ordered_json chains = ordered_json::array();
        for (const auto& t : d.chains)
            chains.push_back(strings(t.strs()));
        j["chains"] = std::move(chains);
        j["rdu_factors"] = strings(factor_strs(d.rdu_factors));
        j["stable_sample_checks"] = checks_json(checks, s);
        ordered_json prov = ordered_json::array();
        for (const auto& tr : d.provenance)
            prov.push_back(strings(tr));
        j["provenance"] = std::move(prov);
        return j.dump(2) + "\n";
    }
    std::string out = "chains (" + std::to_string(d.chains.size()) + "):\n";
    for (const auto& t : d.chains)
        out += bullet_chain(t.strs());
    out += factor_line(d.rdu_factors);
    out += "stable sample checks (samples " + std::to_string(s.samples) + ", seed " + std::to_string(s.seed) + "):\n";
    out += checks_text(checks);
    return out;
}

std::string report_wu(const WuDecomposition& w, Format f) {
    if (f == Format::Json) {
        ordered_json branches = ordered_json::array();
        for (const auto& b : w.branches) {
            ordered_json o;
            o["chain"] = strings(b.chain.strs());
            o["contradictory"] = b.chain.contradictory;
            branches.push_back(std::move(o));
        }
        ordered_json j;
        j["wu_chains"] = std::move(branches);
        return j.dump(2) + "\n";
    }
    std::string out = "wu chains (" + std::to_string(w.branches.size()) + "):\n";
    for (const auto& b : w.branches) {
        out += bullet_chain(b.chain.strs());
        if (b.chain.contradictory)
            out.insert(out.size() - 1, "  (contradictory)");
    }
    return out;
}

std::string report_nonredundant(const NonredundantWu& n, Format f) {
    if (f == Format::Json) {
        ordered_json chains = ordered_json::array();
        for (const auto& c : n.chains)
            chains.push_back(strings(c.strs()));
        ordered_json j;
        j["chains"] = std::move(chains);
        j["rdu_factors"] = strings(factor_strs(n.rdu_factors));
        return j.dump(2) + "\n";
    }
    std::string out = "non-redundant wu chains (" + std::to_string(n.chains.size()) + "):\n";
    for (const auto& c : n.chains)
        out += bullet_chain(c.strs());
    return out + factor_line(n.rdu_factors);
}

std::string report_wrsd(const WrsdResult& w, bool valid, const SampleSettings& s, Format f) {
    if (f == Format::Json) {
        ordered_json h = ordered_json::array(), g = ordered_json::array();
        for (const auto& c : w.H)
            h.push_back(strings(c.strs()));
        for (const auto& c : w.G)
            g.push_back(strings(c.strs()));
        ordered_json j;
        j["H"] = std::move(h);
        j["G"] = std::move(g);
        j["F"] = strings(factor_strs(w.F));
        ordered_json chk;
        chk["samples"] = s.samples;
        chk["seed"] = s.seed;
        chk["height"] = s.height;
        chk["valid"] = valid;
        j["stable_sample_checks"] = std::move(chk);
        return j.dump(2) + "\n";
    }
    std::string out = "H (" + std::to_string(w.H.size()) + "):\n";
    for (const auto& c : w.H)
        out += bullet_chain(c.strs());
    out += "G (" + std::to_string(w.G.size()) + "):\n";
    for (const auto& c : w.G)
        out += bullet_chain(c.strs());
    out += "F (" + std::to_string(w.F.size()) + "):";
    for (const auto& p : w.F.factors())
        out += "\n  " + p.str();
    out += "\nsampled validity: " + pass(valid) + "\n";
    return out;
}

std::string report_verify(const CampaignReport& r, const SampleSettings& s, Format f) {
    if (f == Format::Json) {
        ordered_json j;
        j["stable_sample_checks"] = checks_json(r, s);
        return j.dump(2) + "\n";
    }
    return checks_text(r);
}

}  // namespace rdu
