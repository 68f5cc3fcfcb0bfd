#include <doctest.h>

#include "rdu/oracle.hpp"
#include "rdu/wrsd.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace rdu;
using namespace rdu::testing;

namespace {

RegularChainZD chain(const ContextPtr& c, const std::vector<std::string>& ss) {
    return RegularChainZD::checked(TriangularSet(Ps(c, ss)));
}

std::vector<RegularChainZD> chains(const ContextPtr& c, const std::vector<std::vector<std::string>>& sss) {
    std::vector<RegularChainZD> out;
    for (const auto& ss : sss)
        out.push_back(chain(c, ss));
    return out;
}

}  // namespace

TEST_CASE("splitting a chain with a repeated factor") {
    auto c = ctx_u_x2();
    auto t = chain(c, {"(x1+u)*x1^2", "x2"});
    auto p = P(c, "x1+x2");
    CHECK(sprem(p, Ps(c, {"x1^2", "x2"})) == P(c, "x1"));

    // A decomposition whose H element does not reduce P to zero is still valid.
    CHECK(is_wrsd_valid(t, p, chains(c, {{"x1^2", "x2"}}), chains(c, {{"x1+u", "x2"}}), 5, 0));

    auto w = wrsd(t, p);
    CHECK(is_wrsd_valid(t, p, w.H, w.G, 5, 0));
    REQUIRE(w.H.size() == 1);
    REQUIRE(w.G.size() == 1);
    CHECK(associate(w.H[0][0], P(c, "x1")));
    CHECK(associate(w.G[0][0], P(c, "x1+u")));
    CHECK(w.F.contains(P(c, "u")));

    // Wrong split is rejected.
    CHECK_FALSE(is_wrsd_valid(t, p, chains(c, {{"x1+u", "x2"}}), chains(c, {{"x1", "x2"}}), 5, 0));
}

TEST_CASE("trivial splits") {
    auto c = ctx_u_x2();
    auto t = chain(c, {"x1^2-u", "x2-x1"});
    auto none = wrsd(t, P(c, "x2+u+1"));
    CHECK(is_wrsd_valid(t, P(c, "x2+u+1"), none.H, none.G, 5, 1));
    auto all = wrsd(t, P(c, "x2^2-u"));
    CHECK(is_wrsd_valid(t, P(c, "x2^2-u"), all.H, all.G, 5, 1));
    auto constant = wrsd(t, P(c, "3"));
    CHECK(constant.H.empty());
    REQUIRE(constant.G.size() == 1);
}

TEST_CASE("single variable") {
    auto c = make_context({"u"}, {"x1"});
    auto t = chain(c, {"x1^3-u*x1"});
    auto p = P(c, "x1^2-u");
    auto w = wrsd(t, p);
    CHECK(is_wrsd_valid(t, p, w.H, w.G, 5, 2));
}

TEST_CASE("property: random splits are valid") {
    std::mt19937_64 rng(61);
    auto c = ctx_u_x2();
    const std::size_t x1 = c->var_slot(1), x2 = c->var_slot(2);
    int tested = 0;
    for (int it = 0; it < 60 && tested < 25; ++it) {
        std::vector<Polynomial> tp{random_in(rng, c, x1, 1 + it % 3, {0}, 1, 2),
                                   random_in(rng, c, x2, 1 + it % 2, {0, 1}, 1, 2)};
        // Occasionally plant a common factor with P.
        auto p = random_poly(rng, c, {0, 1, 2}, 2, 3);
        if (it % 3 == 0 && !p.is_zero() && cls(p) == 2 && degree(p, x2) < degree(tp[1], x2))
            tp[1] = tp[1] * p;
        TriangularSet ts(tp);
        if (!is_regular_chain(ts) || p.is_zero())
            continue;
        auto t = RegularChainZD::checked(ts);
        WrsdResult w = wrsd(t, p);
        for (const auto& h : w.H)
            CHECK(is_regular_chain(h.set()));
        try {
            CHECK(is_wrsd_valid(t, p, w.H, w.G, 3, static_cast<std::uint64_t>(it)));
        } catch (const OracleError& e) {
            MESSAGE("oracle: " << e.what());
            continue;
        }
        ++tested;
    }
    CHECK(tested >= 15);
}
