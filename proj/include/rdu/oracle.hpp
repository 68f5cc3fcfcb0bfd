#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rdu/factor.hpp"
#include "rdu/polynomial.hpp"

namespace rdu {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;

inline constexpr double kRootResidualTol = 1e-9;
inline constexpr double kClusterTol = 1e-8;
inline constexpr double kMembershipTol = 1e-6;

class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Coordinates agree when |p_i - q_i| <= tol * (1 + max(|p_i|, |q_i|)).
bool points_close(const Point& p, const Point& q, double tol);

// Points pairwise separated by more than 2*tol; multiplicities dropped.
struct NumericSolutionSet {
    std::vector<Point> points;
    double tol = kClusterTol;
    std::size_t candidates = 0;  // roots found before clustering
    std::vector<std::string> warnings;

    void add(Point p);
    void merge(const NumericSolutionSet& other);
    std::size_t size() const { return points.size(); }
};

// Roots of a polynomial given by complex coefficients c_0..c_m (c_m != 0),
// with multiplicity.  Aberth iteration followed by Newton polishing.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs);

// Distinct complex roots of a parameter-free polynomial in one variable,
// computed from its exact squarefree part.
std::vector<Complex> univariate_roots(const Polynomial& f);

Complex evaluate_numeric(const Polynomial& f, std::span<const Complex> x);
// |f(z)| <= tol * sum |c_t| |z^t|.
bool vanishes_numerically(const Polynomial& f, std::span<const Complex> z, double tol = kMembershipTol);

struct SolveChainOptions {
    // Replace each element by its exact squarefree part before root finding.
    bool exact_squarefree = true;
};

// Backsolves a parameter-free triangular set with mvar(T_i) = x_i.
// Throws OracleError if an initial vanishes at a partial solution.
NumericSolutionSet solve_chain(std::span<const Polynomial> t, const SolveChainOptions& opts = {});

struct SolveSystemOptions {
    std::size_t max_candidates = 10000;
    double residual_tol = kMembershipTol;
    std::uint64_t seed = 0x5eed;
};

// Zero-dimensional parameter-free system: resultant elimination to one
// univariate polynomial per coordinate, then filtering of candidate tuples.
NumericSolutionSet solve_system(const std::vector<Polynomial>& polys, const SolveSystemOptions& opts = {});

// Symmetric nearest-neighbour matching.
bool sets_equal(const NumericSolutionSet& a, const NumericSolutionSet& b, double tol = kClusterTol);

// `count` rational points with numerators in [-height, height] and
// denominators in [1, height], each keeping every factor of F nonzero.
// Point i uses its own RNG stream derived from (seed, i).
std::vector<ParameterPoint> sample_stable_points(const FactorSet& f, std::size_t count, std::uint64_t seed,
                                                 unsigned height = 50);

double to_double(const Rational& q);

}  // namespace rdu
