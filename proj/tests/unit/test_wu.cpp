#include <doctest.h>

#include "rdu/oracle.hpp"
#include "rdu/subres.hpp"
#include "rdu/wu.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace rdu;
using namespace rdu::testing;

namespace {

std::vector<Polynomial> single_param(const ContextPtr& c) {
    return Ps(c, {"(u-1)*x2^2+(x1^2-2*u*x1+u^2+1)*x2+x1^2-x1", "(x1-u)*(x2+1)", "(x1-u)^2"});
}

bool has_chain(const WuDecomposition& w, const std::vector<Polynomial>& expected) {
    for (const auto& b : w.branches)
        if (!b.chain.contradictory && associate_chain(b.chain.polys, expected))
            return true;
    return false;
}

void check_branch_property(const WuDecomposition& w) {
    for (const auto& b : w.branches) {
        if (b.chain.contradictory)
            continue;
        for (const auto& p : b.system)
            CHECK(sprem(p, b.chain.polys).is_zero());
    }
}

}  // namespace

TEST_CASE("basic set") {
    auto c = ctx_u_x2();
    auto b = basic_set(Ps(c, {"x1-u", "x2^2+x1", "x2^2+u"}));
    CHECK_FALSE(b.contradictory);
    CHECK(associate_chain(b.polys, Ps(c, {"x1-u", "x2^2+u"})));
    auto b2 = basic_set(Ps(c, {"u-1", "x1"}));
    CHECK(b2.contradictory);
    CHECK(b2.polys == Ps(c, {"u-1"}));
    auto b3 = basic_set(single_param(c));
    REQUIRE(b3.polys.size() == 2);
    CHECK(rank(b3.polys[0]) == Rank{1, 2});
    CHECK(rank(b3.polys[1]) == Rank{2, 1});
    CHECK_THROWS(basic_set({}));
}

TEST_CASE("characteristic set") {
    auto c = ctx_u_x2();
    auto cs = characteristic_set(single_param(c));
    CHECK(associate_chain(cs.chain.polys, Ps(c, {"(x1-u)^2", "(x1-u)*(x2+1)"})));
    auto one = characteristic_set(Ps(c, {"x1"}));
    CHECK(one.chain.polys == Ps(c, {"x1"}));
    auto bad = characteristic_set(Ps(c, {"u-1"}));
    CHECK(bad.chain.contradictory);
}

TEST_CASE("Wu decomposition of the one-parameter example") {
    auto c = ctx_u_x2();
    auto w = wu_decompose(single_param(c));
    CHECK(w.branches.size() == 3);
    CHECK(has_chain(w, Ps(c, {"(x1-u)^2", "(x1-u)*(x2+1)"})));
    CHECK(has_chain(w, Ps(c, {"x1-u", "(u-1)*x2^2+x2+u^2-u"})));
    bool contradictory = false;
    for (const auto& b : w.branches)
        contradictory = contradictory || (b.chain.contradictory && associate(b.chain.polys[0], P(c, "u-1")));
    CHECK(contradictory);
    CHECK(is_generic_zero_dimensional(w));
    check_branch_property(w);
}

TEST_CASE("Wu decomposition small cases") {
    auto c = ctx_u_x2();
    auto w = wu_decompose(Ps(c, {"x1", "x2"}));
    REQUIRE(w.branches.size() == 1);
    CHECK(w.branches[0].chain.polys == Ps(c, {"x1", "x2"}));

    auto w2 = wu_decompose(Ps(c, {"x1^2-u", "x1*x2-1"}));
    CHECK(is_generic_zero_dimensional(w2));
    check_branch_property(w2);
    CHECK(has_chain(w2, Ps(c, {"x1^2-u", "x1*x2-1"})));

    auto w3 = wu_decompose(Ps(c, {"x1-u"}));
    CHECK_FALSE(is_generic_zero_dimensional(w3));

    auto c2 = ctx_u1u2_x2();
    auto w4 = wu_decompose(Ps(c2, {"u1*x2^2+x1^2", "u2*x2^2+u1*x1*x2+x2"}));
    CHECK(is_generic_zero_dimensional(w4));
    check_branch_property(w4);
}

TEST_CASE("prepare_system") {
    auto c = ctx_u_x2();
    auto s = prepare_system(Ps(c, {"0", "2*x1-2", "x1-1", "-x2"}));
    CHECK(s == Ps(c, {"x1-1", "x2"}));
}

TEST_CASE("property: branch systems reduce to zero and the union covers the solutions") {
    std::mt19937_64 rng(51);
    auto c = make_context({"u"}, {"x1", "x2"});
    auto target = variables_only(*c);
    int checked = 0;
    for (int it = 0; it < 25; ++it) {
        std::vector<Polynomial> sys{random_poly(rng, c, {0, 1, 2}, 2, 3), random_poly(rng, c, {0, 1, 2}, 2, 3)};
        if (prepare_system(sys).size() < 2)
            continue;
        auto w = wu_decompose(sys);
        check_branch_property(w);
        if (!is_generic_zero_dimensional(w))
            continue;
        // Points off every encountered initial and contradictory factor.
        FactorSet f(c);
        for (const auto& b : w.branches) {
            if (b.chain.contradictory) {
                f.insert(b.chain.polys[0]);
                continue;
            }
            for (const auto& p : b.chain.polys) {
                Polynomial r = successive_resultant(initial(p), b.chain.polys);
                if (!r.is_zero())
                    f.insert(r);
            }
        }
        std::vector<Polynomial> nonzero;
        for (const auto& p : sys)
            if (!p.is_zero())
                nonzero.push_back(p);
        for (const auto& a : sample_stable_points(f, 2, it, 20)) {
            std::vector<Polynomial> pa;
            for (const auto& p : nonzero)
                pa.push_back(specialize(p, a, target));
            NumericSolutionSet direct, from_chains;
            try {
                direct = solve_system(pa);
                for (const auto& b : w.branches) {
                    if (b.chain.contradictory)
                        continue;
                    auto sols = solve_chain(specialize_all(b.chain.polys, a));
                    for (const auto& z : sols.points) {
                        bool on_initial = false;
                        for (const auto& p : b.chain.polys)
                            on_initial = on_initial || vanishes_numerically(specialize(initial(p), a, target), z);
                        if (!on_initial)
                            from_chains.add(z);
                    }
                }
            } catch (const OracleError&) {
                continue;
            }
            CHECK(sets_equal(direct, from_chains, kMembershipTol));
            ++checked;
        }
    }
    CHECK(checked >= 10);
}
