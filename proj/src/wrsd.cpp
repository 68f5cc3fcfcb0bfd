#include "rdu/wrsd.hpp"

#include <stdexcept>

#include "rdu/oracle.hpp"
#include "rdu/subres.hpp"

namespace rdu {

namespace {

using Chain = std::vector<Polynomial>;

Chain extended(Chain base, std::span<const Polynomial> tail) {
    base.insert(base.end(), tail.begin(), tail.end());
    return base;
}

class Wrsd {
public:
    explicit Wrsd(int depth_limit) : limit_(depth_limit) {}

    WrsdRaw run(const Chain& t, const Polynomial& p, int depth) {
        if (depth > limit_)
            throw std::logic_error("wrsd: recursion depth bound exceeded");
        const ContextPtr& ctx = t.front().context();
        const std::size_t r = t.size();

        WrsdRaw out{{}, {}, FactorSet(ctx)};
        out.F.insert(iterated_initial_resultant(TriangularSet(t)));

        if (!is_reduced(p, t))
            return run(t, sprem(p, t), depth + 1);
        if (p.is_zero()) {
            out.H.push_back(t);
            return out;
        }
        const std::size_t c = cls(p);
        if (c == 0) {
            out.F.insert(p);
            out.G.push_back(t);
            return out;
        }
        if (c < r) {
            std::span<const Polynomial> tail(t.data() + c, r - c);
            WrsdRaw w = run(Chain(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(c)), p, depth + 1);
            for (auto& h : w.H)
                out.H.push_back(extended(std::move(h), tail));
            for (auto& g : w.G)
                out.G.push_back(extended(std::move(g), tail));
            out.F.merge(w.F);
            return out;
        }

        Polynomial res = successive_resultant(p, t);
        if (!res.is_zero()) {
            out.F.insert(res);
            out.G.push_back(t);
            return out;
        }

        const Polynomial& tn = t.back();
        const std::size_t x = mvar(tn);
        const RegularSubresultantChain rc = regular_indices(subresultant_chain(tn, p, x));
        if (rc.upsilon() < 1)
            throw std::logic_error("wrsd: vanishing resultant without a regular subresultant");

        if (r == 1) {
            const Polynomial& s1 = rc.S(1);
            out.H.push_back({s1});
            out.F.insert(rc.R(1));
            Polynomial q = squarefree_part(primitive_part(pquo(tn, s1, x), x));
            WrsdRaw w = run({q}, p, depth + 1);
            for (auto& g : w.G)
                out.G.push_back(std::move(g));
            out.F.merge(w.F);
            return out;
        }

        const Chain lower(t.begin(), t.end() - 1);
        WrsdRaw w0 = run(lower, rc.S(0), depth + 1);
        out.F.merge(w0.F);
        for (auto& g : w0.G)
            out.G.push_back(extended(std::move(g), std::span<const Polynomial>(&tn, 1)));

        std::vector<Chain> h_prev = std::move(w0.H);
        const std::size_t upsilon = rc.upsilon();
        for (std::size_t i = 1; !h_prev.empty(); ++i) {
            if (i > upsilon + 1)
                throw std::logic_error("wrsd: subresultant loop ran past the initial of T_n");
            const Polynomial s_i = i <= upsilon ? rc.S(i) : tn;
            const Polynomial r_i = i <= upsilon ? rc.R(i) : initial(tn);
            std::vector<Chain> h_i, g_i;
            for (const auto& hc : h_prev) {
                WrsdRaw w = run(hc, r_i, depth + 1);
                for (auto& h : w.H)
                    h_i.push_back(std::move(h));
                for (auto& g : w.G)
                    g_i.push_back(std::move(g));
                out.F.merge(w.F);
            }
            for (const auto& gc : g_i) {
                out.H.push_back(extended(gc, std::span<const Polynomial>(&s_i, 1)));
                Polynomial q = pquo(tn, s_i, x);
                if (degree(q, x) == 0)
                    continue;
                q = squarefree_part(primitive_part(q, x));
                WrsdRaw w = run(extended(gc, std::span<const Polynomial>(&q, 1)), p, depth + 1);
                for (auto& g : w.G)
                    out.G.push_back(std::move(g));
                out.F.merge(w.F);
            }
            h_prev = std::move(h_i);
        }
        return out;
    }

private:
    int limit_;
};

int depth_bound(const Chain& t) {
    unsigned maxdeg = 1;
    for (const auto& p : t)
        maxdeg = std::max(maxdeg, degree(p, mvar(p)));
    return static_cast<int>(2 * t.size() * maxdeg + 4);
}

std::vector<RegularChainZD> as_chains(std::vector<Chain> raw) {
    std::vector<RegularChainZD> out;
    for (auto& c : raw)
        out.push_back(RegularChainZD::trusted(TriangularSet(std::move(c))));
    return out;
}

}  // namespace

WrsdRaw wrsd_prefix(const std::vector<Polynomial>& t, const Polynomial& p) {
    if (t.empty())
        throw std::invalid_argument("wrsd: empty chain");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].is_zero() || cls(t[i]) != i + 1)
            throw std::invalid_argument("wrsd: chain must have main variables x_1..x_r");
    if (!same_context(t.front().context(), p.context()))
        throw std::invalid_argument("wrsd: context mismatch");
    return Wrsd(depth_bound(t)).run(t, p, 0);
}

WrsdResult wrsd(const RegularChainZD& t, const Polynomial& p) {
    WrsdRaw raw = wrsd_prefix(t.set().polys(), p);
    return {as_chains(std::move(raw.H)), as_chains(std::move(raw.G)), std::move(raw.F)};
}

bool is_wrsd_valid(const RegularChainZD& t, const Polynomial& p, const std::vector<RegularChainZD>& h,
                   const std::vector<RegularChainZD>& g, std::size_t samples, std::uint64_t seed,
                   unsigned height) {
    FactorSet stable = wrsd(t, p).F;
    stable.insert(iterated_initial_resultant(t.set()));
    for (const auto* family : {&h, &g})
        for (const auto& c : *family)
            stable.insert(iterated_initial_resultant(c.set()));

    const ContextPtr target = variables_only(p.ctx());
    for (const auto& a : sample_stable_points(stable, samples, seed, height)) {
        const Polynomial pa = specialize(p, a, target);
        NumericSolutionSet on_p, off_p;
        for (const auto& z : solve_chain(specialize_all(t, a)).points) {
            if (vanishes_numerically(pa, z))
                on_p.add(z);
            else
                off_p.add(z);
        }
        NumericSolutionSet vh, vg;
        for (const auto& c : h) {
            if (!specializes_well(c, a))
                return false;
            vh.merge(solve_chain(specialize_all(c, a)));
        }
        for (const auto& c : g) {
            if (!specializes_well(c, a))
                return false;
            vg.merge(solve_chain(specialize_all(c, a)));
        }
        if (!sets_equal(on_p, vh, kMembershipTol) || !sets_equal(off_p, vg, kMembershipTol))
            return false;
    }
    return true;
}

}  // namespace rdu
