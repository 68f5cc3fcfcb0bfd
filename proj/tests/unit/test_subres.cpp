#include <doctest.h>

#include "rdu/subres.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace rdu;
using namespace rdu::testing;

namespace {

ContextPtr cu() {
    return make_context({"u"}, {"x1"});
}

}  // namespace

TEST_CASE("subresultant chain examples") {
    auto c = cu();
    const std::size_t x1 = c->var_slot(1);
    auto ch = subresultant_chain(P(c, "x1^3+u*x1^2"), P(c, "x1"), x1);
    CHECK(ch.S[0].is_zero());
    CHECK(ch.S[1] == P(c, "x1"));
    CHECK(ch.S[3] == P(c, "x1^3+u*x1^2"));
    CHECK(ch.mu() == 2);

    auto ch2 = subresultant_chain(P(c, "x1^2-u^2"), P(c, "x1-u"), x1);
    CHECK(ch2.resultant().is_zero());

    auto c2 = make_context({"u1", "u2"}, {"x1"});
    auto ch3 = subresultant_chain(P(c2, "x1^2+u1"), P(c2, "x1+u2"), c2->var_slot(1));
    CHECK(associate(ch3.resultant(), P(c2, "u2^2+u1")));
    CHECK(ch3.resultant() == sylvester_resultant(P(c2, "x1^2+u1"), P(c2, "x1+u2"), c2->var_slot(1)));

    CHECK_THROWS(subresultant_chain(P(c, "x1"), P(c, "x1^2"), x1));
    CHECK_THROWS(subresultant_chain(P(c, "x1^2"), P(c, "u"), x1));
}

TEST_CASE("regular subresultant chain") {
    auto c = cu();
    const std::size_t x1 = c->var_slot(1);
    auto r = regular_indices(subresultant_chain(P(c, "x1^3+u*x1^2"), P(c, "x1"), x1));
    CHECK(r.indices == std::vector<unsigned>{0, 1});
    auto r2 = regular_indices(subresultant_chain(P(c, "x1^2-u^2"), P(c, "x1-u"), x1));
    REQUIRE(r2.upsilon() == 1);
    CHECK(associate(r2.S(1), P(c, "x1-u")));
    auto r3 = regular_indices(subresultant_chain(P(c, "x1^3+2"), P(c, "u*x1+1"), x1));
    CHECK(r3.upsilon() == 1);
    CHECK(r3.S(1) == P(c, "u^2*x1+u"));
}

TEST_CASE("resultant examples") {
    auto c = cu();
    const std::size_t x1 = c->var_slot(1);
    CHECK(associate(resultant(P(c, "x1-u"), P(c, "x1+u"), x1), P(c, "2*u")));
    CHECK(associate(resultant(P(c, "x1-1"), P(c, "x1^2-u"), x1), P(c, "1-u")));
    CHECK(resultant(P(c, "x1^2+u"), P(c, "x1^2+u"), x1).is_zero());
    CHECK_THROWS(resultant(P(c, "u"), P(c, "x1"), x1));
}

TEST_CASE("successive resultant examples") {
    auto c = make_context({"u"}, {"x1", "x2"});
    const auto c2 = Ps(c, {"x1-u", "(u-1)*x2^2+x2+u^2-u"});
    CHECK(associate(successive_resultant(initial(c2[1]), c2), P(c, "u-1")));
    CHECK(associate(successive_resultant(P(c, "x1+x2"), Ps(c, {"x1-u", "x2-u"})), P(c, "2*u")));
    CHECK(successive_resultant(P(c, "1"), c2) == P(c, "1"));
}

TEST_CASE("property: chain matches the determinantal definition") {
    std::mt19937_64 rng(31);
    auto c = make_context({"u"}, {"x1"});
    const std::size_t x1 = c->var_slot(1);
    int defective = 0;
    for (int it = 0; it < 120; ++it) {
        const unsigned m = 2 + it % 4, l = 1 + static_cast<unsigned>(rng() % (m - 1));
        Polynomial f = random_in(rng, c, x1, m, {0}, 1, 2);
        Polynomial g = random_in(rng, c, x1, l, {0}, 1, 2);
        // f = q*g + r with deg r <= l - 2 gives a defective S_{l-1}.
        if (it % 2 == 0 && l >= 2) {
            Polynomial r = random_in(rng, c, x1, l - 2, {0}, 1, 2);
            f = random_in(rng, c, x1, m - l, {0}, 1, 2) * g + r;
        }
        if (degree(g, x1) != l)
            continue;
        auto ch = subresultant_chain(f, g, x1);
        REQUIRE(ch.S.size() == m + 1);
        CHECK(ch.S[m] == f);
        CHECK(ch.S[m - 1] == g);
        for (unsigned j = 0; j < l; ++j) {
            CAPTURE(f.str());
            CAPTURE(g.str());
            CAPTURE(j);
            CHECK(ch.S[j] == determinantal_subresultant(f, g, x1, j));
            CHECK((ch.S[j].is_zero() || degree(ch.S[j], x1) <= j));
            if (!ch.S[j].is_zero() && degree(ch.S[j], x1) < j)
                ++defective;
        }
        if (m > l + 1)
            CHECK(ch.S[l] == leading_coefficient(g, x1).pow(m - l - 1) * g);
        for (unsigned j = l + 1; j + 1 < m; ++j)
            CHECK(ch.S[j].is_zero());
    }
    CHECK(defective > 5);
}

TEST_CASE("property: regular indices") {
    std::mt19937_64 rng(32);
    auto c = make_context({"u"}, {"x1"});
    const std::size_t x1 = c->var_slot(1);
    for (int it = 0; it < 60; ++it) {
        const unsigned m = 2 + it % 3, l = 1 + static_cast<unsigned>(rng() % (m - 1));
        auto f = random_in(rng, c, x1, m, {0}, 2, 2), g = random_in(rng, c, x1, l, {0}, 2, 2);
        if (it % 3 == 0) {
            auto h = random_in(rng, c, x1, 1, {0}, 1, 2);
            f = f * h;
            g = g * h;
            if (degree(f, x1) <= degree(g, x1))
                continue;
        }
        auto r = regular_indices(subresultant_chain(f, g, x1));
        CHECK(r.indices.front() == 0);
        for (unsigned j = 1; j + 1 < r.chain.S.size(); ++j) {
            const bool regular = !r.chain.S[j].is_zero() && degree(r.chain.S[j], x1) == j;
            const bool listed = std::find(r.indices.begin(), r.indices.end(), j) != r.indices.end();
            CHECK(regular == listed);
        }
        // The top regular subresultant is a multiple of g.
        CHECK(divide_exact(r.S(r.upsilon()), g).has_value());
    }
}

TEST_CASE("property: resultant equals the Sylvester determinant") {
    std::mt19937_64 rng(33);
    auto c = make_context({"u"}, {"x1", "x2"});
    const std::size_t x2 = c->var_slot(2);
    for (int it = 0; it < 50; ++it) {
        const unsigned m = 1 + it % 4, l = 1 + static_cast<unsigned>(rng() % 4);
        auto f = random_in(rng, c, x2, m, {0, 1}, 1, 2), g = random_in(rng, c, x2, l, {0, 1}, 1, 2);
        auto r = resultant(f, g, x2);
        CHECK(associate(r, sylvester_resultant(f, g, x2)));
        CHECK((r.is_zero() || !involves(r, x2)));
    }
}

TEST_CASE("property: vanishing principal coefficients force g to vanish") {
    // If lc(f)(a) != 0 and every R_j(a) = 0 for j <= mu, then g(a) = 0.
    auto c = make_context({"u"}, {"x1"});
    const std::size_t x1 = c->var_slot(1);
    auto target = variables_only(*c);
    auto f = P(c, "x1^3 + u*x1 + 1");
    auto g = P(c, "(u-2)*x1^2 + (u^2-4)*x1 + u - 2");
    auto ch = subresultant_chain(f, g, x1);
    const ParameterPoint a{2};
    bool all_zero = true;
    for (unsigned j = 0; j <= ch.mu(); ++j)
        all_zero = all_zero && specialize(ch.R(j), a, target).is_zero();
    CHECK(all_zero);
    CHECK(specialize(g, a, target).is_zero());
}
