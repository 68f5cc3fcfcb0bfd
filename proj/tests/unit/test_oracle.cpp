#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "rdu/oracle.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace rdu;
using namespace rdu::testing;

namespace {

NumericSolutionSet set_of(std::vector<Point> pts) {
    NumericSolutionSet s;
    for (auto& p : pts)
        s.add(std::move(p));
    return s;
}

bool contains(const std::vector<Complex>& roots, Complex z) {
    return std::any_of(roots.begin(), roots.end(), [&](Complex r) { return std::abs(r - z) < 1e-9; });
}

}  // namespace

TEST_CASE("univariate roots") {
    auto c = make_context({}, {"x"});
    auto r = univariate_roots(P(c, "x^2-4"));
    CHECK(r.size() == 2);
    CHECK(contains(r, 2.0));
    CHECK(contains(r, -2.0));
    auto i = univariate_roots(P(c, "x^2+1"));
    CHECK(i.size() == 2);
    CHECK(contains(i, Complex(0, 1)));
    CHECK(contains(i, Complex(0, -1)));
    auto m = univariate_roots(P(c, "x^3+2*x^2"));
    CHECK(m.size() == 2);
    CHECK(contains(m, 0.0));
    CHECK(contains(m, -2.0));
    CHECK(polynomial_roots({Complex(0), Complex(0), Complex(1)}).size() == 2);
}

TEST_CASE("solving triangular sets") {
    auto c = make_context({}, {"x1", "x2"});
    auto s = solve_chain(Ps(c, {"x1^2-1", "x2-x1"}));
    CHECK(sets_equal(s, set_of({{1.0, 1.0}, {-1.0, -1.0}})));
    auto s2 = solve_chain(Ps(c, {"x1^2", "x2^2-x1-1"}));
    CHECK(sets_equal(s2, set_of({{0.0, 1.0}, {0.0, -1.0}})));
    CHECK_THROWS_AS(solve_chain(Ps(c, {"x1", "x1*x2-1"})), OracleError);
    auto raw = solve_chain(Ps(c, {"x1^2", "x2-1"}), {.exact_squarefree = false});
    CHECK(raw.size() == 1);
    CHECK(raw.candidates == 2);
}

TEST_CASE("solving systems") {
    auto c = make_context({}, {"x1", "x2"});
    auto s = solve_system(Ps(c, {"x1^2+x2^2-5", "x1*x2-2"}));
    CHECK(sets_equal(s, set_of({{1.0, 2.0}, {2.0, 1.0}, {-1.0, -2.0}, {-2.0, -1.0}})));

    // The one-parameter example at u = 2 and at u = 1.
    auto cu = ctx_u_x2();
    auto target = variables_only(*cu);
    auto sys = Ps(cu, {"(u-1)*x2^2+(x1^2-2*u*x1+u^2+1)*x2+x1^2-x1", "(x1-u)*(x2+1)", "(x1-u)^2"});
    std::vector<Polynomial> at2, at1;
    for (const auto& p : sys) {
        at2.push_back(specialize(p, {2}, target));
        at1.push_back(specialize(p, {1}, target));
    }
    // x1 = 2, x2^2 + x2 + 2 = 0.
    const Complex disc = std::sqrt(Complex(-7));
    CHECK(sets_equal(solve_system(at2), set_of({{2.0, (-1.0 + disc) / 2.0}, {2.0, (-1.0 - disc) / 2.0}})));
    // x1 = 1, x2 = 0.
    CHECK(sets_equal(solve_system(at1), set_of({{1.0, 0.0}})));

    auto three = make_context({}, {"x1", "x2", "x3"});
    auto s3 = solve_system(Ps(three, {"x1-1", "x2^2-x1", "x3-x1-x2", "x1*x3-x3"}));
    CHECK(sets_equal(s3, set_of({{1.0, 1.0, 2.0}, {1.0, -1.0, 0.0}})));
    CHECK(solve_system(Ps(c, {"x1", "x1-1", "x2"})).size() == 0);
}

TEST_CASE("set comparison") {
    auto a = set_of({{1.0, 2.0}, {3.0, 4.0}});
    CHECK(sets_equal(a, set_of({{3.0, 4.0}, {1.0 + 1e-12, 2.0}})));
    CHECK_FALSE(sets_equal(a, set_of({{1.0, 2.0}})));
    CHECK_FALSE(sets_equal(a, set_of({{1.0, 2.0}, {3.0, 4.1}})));
    CHECK(sets_equal(NumericSolutionSet{}, NumericSolutionSet{}));
    NumericSolutionSet dup;
    dup.add({1.0});
    dup.add({1.0 + 1e-12});
    CHECK(dup.size() == 1);
}

TEST_CASE("numeric vanishing") {
    auto c = make_context({}, {"x"});
    std::vector<Complex> z{Complex(std::sqrt(2.0))};
    CHECK(vanishes_numerically(P(c, "x^2-2"), z));
    CHECK_FALSE(vanishes_numerically(P(c, "x^2-3"), z));
}

TEST_CASE("property: stable sample points avoid the factors and are reproducible") {
    auto c = ctx_u1u2_x2();
    FactorSet f(c);
    for (const auto& p : Ps(c, {"u1", "u2", "u1^3+u2^2", "u1-u2"}))
        f.insert(p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto pts = sample_stable_points(f, 8, seed, 5);
        CHECK(pts.size() == 8);
        for (const auto& a : pts) {
            CHECK_FALSE(f.vanishes_at(a));
            for (const auto& q : a) {
                CHECK(abs(q.get_num()) <= 5);
                CHECK(q.get_den() <= 5);
            }
        }
        CHECK(sample_stable_points(f, 8, seed, 5) == pts);
        // A prefix does not depend on the count.
        auto prefix = sample_stable_points(f, 3, seed, 5);
        CHECK(std::equal(prefix.begin(), prefix.end(), pts.begin()));
    }
}

TEST_CASE("property: generic triangular sets have the Bezout number of solutions") {
    std::mt19937_64 rng(81);
    auto c = make_context({}, {"x1", "x2", "x3"});
    for (int it = 0; it < 20; ++it) {
        const unsigned d1 = 1 + it % 3, d2 = 1 + (it / 3) % 3, d3 = 1 + it % 2;
        std::vector<Polynomial> t{random_in(rng, c, 0, d1, {}, 0, 0),
                                  random_in(rng, c, 1, d2, {0}, 2, 3) ,
                                  random_in(rng, c, 2, d3, {0, 1}, 2, 3)};
        // Monic in the main variable keeps initials away from zero.
        for (std::size_t k = 0; k < 3; ++k)
            t[k] += Polynomial::monomial(c, k, degree(t[k], k)) * Polynomial::constant(c, 7) -
                    coefficient(t[k], k, degree(t[k], k)) * Polynomial::monomial(c, k, degree(t[k], k));
        auto s = solve_chain(t, {.exact_squarefree = false});
        CHECK(s.candidates == d1 * d2 * d3);
        for (const auto& z : s.points)
            for (const auto& p : t)
                CHECK(vanishes_numerically(p, z));
    }
}
