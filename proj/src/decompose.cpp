#include "rdu/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "rdu/wrsd.hpp"

namespace rdu {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out = "[";
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? ", " : "") + parts[i];
    return out + "]";
}

bool prefix_regular(const std::vector<Polynomial>& t, std::size_t k) {
    return is_regular_chain(TriangularSet(std::vector<Polynomial>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k))));
}

void run_zd_to_rc(const std::vector<Polynomial>& t, std::size_t prev_k, const Trace& trace, ZdToRcResult& out) {
    TriangularSet ts(t);
    if (is_regular_chain(ts)) {
        out.factors.insert(iterated_initial_resultant(ts));
        Trace tr = trace;
        tr.push_back("regular");
        out.chains.push_back(RegularChainZD::trusted(std::move(ts)));
        out.traces.push_back(std::move(tr));
        return;
    }
    std::size_t k = 1;
    while (k < t.size() && prefix_regular(t, k + 1))
        ++k;
    if (k >= t.size())
        throw std::logic_error("zd_to_rc: no irregular prefix in an irregular chain");
    if (k <= prev_k)
        throw std::logic_error("zd_to_rc: regular prefix length did not increase");

    const std::vector<Polynomial> prefix(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(k));
    WrsdRaw w = wrsd_prefix(prefix, initial(t[k]));
    out.factors.merge(w.F);
    for (std::size_t i = 0; i < w.G.size(); ++i) {
        std::vector<Polynomial> r = w.G[i];
        r.insert(r.end(), t.begin() + static_cast<std::ptrdiff_t>(k), t.end());
        Trace tr = trace;
        tr.push_back("wrsd split at k=" + std::to_string(k) + ", G[" + std::to_string(i) + "] = " +
                     join(TriangularSet(w.G[i]).strs()));
        run_zd_to_rc(r, k, tr, out);
    }
}

struct Assembly {
    WuDecomposition wu;
    std::vector<std::size_t> nonempty_branches;
    Decomposition result;
};

Assembly assemble(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> sys = prepare_system(polys);
    if (sys.empty())
        throw std::invalid_argument("rdu_for_zd: empty system");
    Assembly a{wu_decompose(sys), {}, {{}, FactorSet(sys.front().context()), {}}};
    require_generic(a.wu);

    std::vector<RegularChainZD> chains;
    std::vector<Trace> traces;
    for (std::size_t i = 0; i < a.wu.branches.size(); ++i) {
        const AscendingChain& c = a.wu.branches[i].chain;
        if (c.contradictory) {
            a.result.rdu_factors.insert(c.polys.front());
            continue;
        }
        ZdToRcResult r = zd_to_rc(c.as_triangular());
        a.result.rdu_factors.merge(r.factors);
        if (!r.chains.empty())
            a.nonempty_branches.push_back(i);
        for (std::size_t j = 0; j < r.chains.size(); ++j) {
            TriangularSet norm = normalize_chain(r.chains[j].set());
            a.result.rdu_factors.insert(iterated_initial_resultant(norm));
            Trace tr{"wu branch " + std::to_string(i) + ": " + join(c.strs())};
            tr.insert(tr.end(), r.traces[j].begin(), r.traces[j].end());
            chains.push_back(RegularChainZD::trusted(std::move(norm)));
            traces.push_back(std::move(tr));
        }
    }

    std::vector<std::size_t> order(chains.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return chain_less(chains[x], chains[y]);
    });
    for (std::size_t idx : order) {
        if (!a.result.chains.empty() && a.result.chains.back() == chains[idx]) {
            a.result.provenance.back().push_back("also from: " + traces[idx].front());
            continue;
        }
        a.result.chains.push_back(chains[idx]);
        a.result.provenance.push_back(traces[idx]);
    }
    return a;
}

}  // namespace

void require_generic(const WuDecomposition& w) {
    for (const auto& b : w.branches)
        if (!b.chain.contradictory && !b.chain.as_triangular().is_zero_dimensional())
            throw NonGenericInput("system is not generic zero-dimensional: Wu chain " + join(b.chain.strs()) +
                                      " is positive-dimensional",
                                  b.chain);
}

ZdToRcResult zd_to_rc(const TriangularSet& t) {
    if (!t.is_zero_dimensional())
        throw std::invalid_argument("zd_to_rc: main variables must be x_1..x_n");
    ZdToRcResult out{{}, FactorSet(t.context()), {}};
    run_zd_to_rc(t.polys(), 0, {}, out);
    return out;
}

Decomposition rdu_for_zd(const std::vector<Polynomial>& polys) {
    return assemble(polys).result;
}

NonredundantWu nonredundant_wu(const std::vector<Polynomial>& polys) {
    Assembly a = assemble(polys);
    NonredundantWu out{{}, std::move(a.result.rdu_factors)};
    for (std::size_t i : a.nonempty_branches)
        out.chains.push_back(a.wu.branches[i].chain);
    return out;
}

}  // namespace rdu
