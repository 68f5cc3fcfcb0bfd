#include "rdu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rdu/subres.hpp"
#include "rdu/wu.hpp"

namespace rdu {

namespace {

using LD = long double;
using CL = std::complex<long double>;

LD to_long_double(const Rational& q) {
    if (q == 0)
        return 0;
    long en = 0, ed = 0;
    double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::ldexp(static_cast<LD>(mn) / static_cast<LD>(md), static_cast<int>(en - ed));
}

// p(z) and p'(z) by Horner; coefficients low to high.
void horner(const std::vector<CL>& c, CL z, CL& p, CL& dp) {
    p = c.back();
    dp = 0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
}

LD magnitude_sum(const std::vector<CL>& c, CL z) {
    LD s = 0, r = std::abs(z), pw = 1;
    for (const auto& ci : c) {
        s += std::abs(ci) * pw;
        pw *= r;
    }
    return s;
}

std::vector<CL> roots_ld(std::vector<CL> c) {
    while (!c.empty() && c.back() == CL(0))
        c.pop_back();
    if (c.empty())
        throw OracleError("root finding on the zero polynomial");
    std::vector<CL> roots;
    std::size_t low = 0;
    while (low < c.size() - 1 && c[low] == CL(0))
        ++low;
    roots.assign(low, CL(0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
    const std::size_t m = c.size() - 1;
    if (m == 0)
        return roots;
    const CL lead = c.back();
    for (auto& ci : c)
        ci /= lead;
    if (m == 1) {
        roots.push_back(-c[0]);
        return roots;
    }

    const LD rho = std::pow(std::abs(c[0]), static_cast<LD>(1) / static_cast<LD>(m));
    std::vector<CL> z(m);
    for (std::size_t k = 0; k < m; ++k) {
        LD ang = 2 * std::numbers::pi_v<LD> * static_cast<LD>(k) / static_cast<LD>(m) + 0.4L;
        z[k] = std::polar(rho > 0 ? rho : 1.0L, ang);
    }
    for (int it = 0; it < 5000; ++it) {
        LD maxstep = 0;
        for (std::size_t k = 0; k < m; ++k) {
            CL p, dp;
            horner(c, z[k], p, dp);
            if (p == CL(0))
                continue;
            if (dp == CL(0))
                dp = CL(1e-30L);
            CL ratio = p / dp;
            CL s = 0;
            for (std::size_t j = 0; j < m; ++j)
                if (j != k)
                    s += CL(1) / (z[k] - z[j]);
            CL w = ratio / (CL(1) - ratio * s);
            z[k] -= w;
            maxstep = std::max(maxstep, std::abs(w) / (1 + std::abs(z[k])));
        }
        if (maxstep < 1e-18L)
            break;
    }
    for (auto& zk : z) {
        for (int it = 0; it < 3; ++it) {
            CL p, dp;
            horner(c, zk, p, dp);
            if (dp == CL(0))
                break;
            CL next = zk - p / dp;
            CL pn, dpn;
            horner(c, next, pn, dpn);
            if (std::abs(pn) >= std::abs(p))
                break;
            zk = next;
        }
        roots.push_back(zk);
    }
    return roots;
}

std::vector<CL> exact_coefficients(const Polynomial& f, std::size_t slot) {
    std::vector<CL> out;
    for (const auto& c : coefficients(f, slot))
        out.emplace_back(to_long_double(c.constant_term()), 0);
    return out;
}

// Product of the squarefree factors of f that involve `slot`.
Polynomial squarefree_in(const Polynomial& f, std::size_t slot) {
    Polynomial out = Polynomial::constant(f.context(), 1);
    for (const auto& q : squarefree_primitive_factors(f))
        if (involves(q, slot))
            out = out * q;
    return out;
}

Polynomial eliminant(std::vector<Polynomial> s, std::size_t keep, std::mt19937_64& rng) {
    const std::size_t n = s.front().ctx().size();
    std::uniform_int_distribution<int> coef(1, 9);
    for (std::size_t v = n; v-- > 0;) {
        if (v == keep)
            continue;
        std::vector<Polynomial> with, next;
        for (auto& p : s)
            (involves(p, v) ? with : next).push_back(p);
        if (with.size() <= 1) {
            s = std::move(next);
            continue;
        }
        bool produced = false;
        if (with.size() == 2) {
            Polynomial r = resultant(with[0], with[1], v);
            if (!r.is_zero()) {
                next.push_back(r.is_constant() ? r : squarefree_part(r));
                produced = true;
            }
        }
        if (!produced) {
            Polynomial g(with.front().context());
            for (const auto& w : with)
                g += w.scaled(coef(rng));
            if (degree(g, v) == 0)
                throw OracleError("elimination: degenerate combination");
            for (const auto& w : with) {
                Polynomial r = resultant(g, w, v);
                if (r.is_zero())
                    continue;
                next.push_back(r.is_constant() ? r : squarefree_part(r));
                produced = true;
            }
        }
        if (!produced)
            throw OracleError("elimination: all resultants vanish (system not zero-dimensional?)");
        s = prepare_system(next);
        for (const auto& p : s)
            if (p.is_constant())
                return p;
    }
    if (s.empty())
        throw OracleError("elimination: no univariate polynomial for a coordinate");
    Polynomial e(s.front().context());
    for (const auto& p : s)
        e = gcd(e, p);
    return e;
}

}  // namespace

double to_double(const Rational& q) {
    return static_cast<double>(to_long_double(q));
}

bool points_close(const Point& p, const Point& q, double tol) {
    if (p.size() != q.size())
        return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        double scale = 1 + std::max(std::abs(p[i]), std::abs(q[i]));
        if (std::abs(p[i] - q[i]) > tol * scale)
            return false;
    }
    return true;
}

void NumericSolutionSet::add(Point p) {
    for (const auto& q : points)
        if (points_close(p, q, 2 * tol))
            return;
    points.push_back(std::move(p));
}

void NumericSolutionSet::merge(const NumericSolutionSet& other) {
    for (const auto& p : other.points)
        add(p);
    candidates += other.candidates;
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs) {
    std::vector<CL> c(coeffs.begin(), coeffs.end());
    std::vector<Complex> out;
    for (const auto& r : roots_ld(std::move(c)))
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    return out;
}

std::vector<Complex> univariate_roots(const Polynomial& f) {
    if (f.is_zero() || f.is_constant())
        throw OracleError("univariate_roots needs a non-constant polynomial");
    const auto slot = static_cast<std::size_t>(top_slot(f));
    for (const auto& t : f.terms())
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            if (i != slot && t.exp[i] != 0)
                throw OracleError("univariate_roots: polynomial involves several indeterminates");
    const Polynomial sq = squarefree_part(f);
    const std::vector<CL> c = exact_coefficients(sq, slot);
    std::vector<Complex> out;
    for (const auto& r : roots_ld(c)) {
        CL p, dp;
        horner(c, r, p, dp);
        LD scale = magnitude_sum(c, r);
        if (std::abs(p) > static_cast<LD>(kMembershipTol) * scale)
            throw OracleError("root finding did not converge: residual " +
                              std::to_string(static_cast<double>(std::abs(p) / scale)) + " for " + f.str());
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return out;
}

Complex evaluate_numeric(const Polynomial& f, std::span<const Complex> x) {
    if (x.size() != f.ctx().size())
        throw std::invalid_argument("numeric evaluation point has wrong dimension");
    CL sum = 0;
    for (const auto& t : f.terms()) {
        CL term(to_long_double(t.coef), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (unsigned e = 0; e < t.exp[i]; ++e)
                term *= CL(x[i].real(), x[i].imag());
        sum += term;
    }
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

bool vanishes_numerically(const Polynomial& f, std::span<const Complex> z, double tol) {
    if (z.size() != f.ctx().size())
        throw std::invalid_argument("numeric evaluation point has wrong dimension");
    CL sum = 0;
    LD scale = 0;
    for (const auto& t : f.terms()) {
        CL term(to_long_double(t.coef), 0);
        for (std::size_t i = 0; i < z.size(); ++i)
            for (unsigned e = 0; e < t.exp[i]; ++e)
                term *= CL(z[i].real(), z[i].imag());
        sum += term;
        scale += std::abs(term);
    }
    return std::abs(sum) <= static_cast<LD>(tol) * std::max<LD>(scale, 1e-300L);
}

NumericSolutionSet solve_chain(std::span<const Polynomial> t, const SolveChainOptions& opts) {
    if (t.empty())
        throw OracleError("solve_chain: empty chain");
    const Context& ctx = t.front().ctx();
    if (ctx.num_params() != 0)
        throw OracleError("solve_chain: specialize the chain first");
    const std::size_t n = ctx.num_vars();
    if (t.size() != n)
        throw OracleError("solve_chain: chain is not zero-dimensional");

    NumericSolutionSet out;
    std::vector<Point> partial{Point{}};
    for (std::size_t k = 0; k < n; ++k) {
        if (t[k].is_zero() || cls(t[k]) != k + 1)
            throw OracleError("solve_chain: element " + std::to_string(k + 1) + " has the wrong class");
        const Polynomial f = opts.exact_squarefree ? squarefree_in(t[k], k) : t[k];
        const std::vector<Polynomial> cs = coefficients(f, k);
        std::vector<Point> next;
        for (const auto& z : partial) {
            Point full(n, Complex(0));
            std::copy(z.begin(), z.end(), full.begin());
            std::vector<CL> vals;
            LD scale = 0;
            for (const auto& c : cs) {
                CL v;
                if (k == 0) {
                    v = CL(to_long_double(c.constant_term()), 0);
                } else {
                    Complex e = evaluate_numeric(c, full);
                    v = CL(e.real(), e.imag());
                }
                scale += std::abs(v);
                vals.push_back(v);
            }
            if (std::abs(vals.back()) <= static_cast<LD>(kMembershipTol) * scale)
                throw OracleError("solve_chain: initial of element " + std::to_string(k + 1) +
                                  " vanishes at a partial solution");
            for (const auto& r : roots_ld(vals)) {
                Point p = z;
                p.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
                next.push_back(std::move(p));
            }
        }
        partial = std::move(next);
    }
    out.candidates = partial.size();
    for (auto& p : partial)
        out.add(std::move(p));
    return out;
}

NumericSolutionSet solve_system(const std::vector<Polynomial>& polys, const SolveSystemOptions& opts) {
    NumericSolutionSet out;
    std::vector<Polynomial> sys = prepare_system(polys);
    if (sys.empty())
        throw OracleError("solve_system: empty system");
    const Context& ctx = sys.front().ctx();
    if (ctx.num_params() != 0)
        throw OracleError("solve_system: specialize the system first");
    for (const auto& p : sys)
        if (p.is_constant())
            return out;
    std::vector<Polynomial> reduced;
    for (const auto& p : sys)
        reduced.push_back(squarefree_part(p));
    reduced = prepare_system(reduced);

    const std::size_t n = ctx.num_vars();
    std::mt19937_64 rng(opts.seed);
    std::vector<std::vector<Complex>> coords(n);
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial e = eliminant(reduced, k, rng);
        if (e.is_constant())
            return out;
        coords[k] = univariate_roots(e);
        total *= coords[k].size();
        if (total > opts.max_candidates)
            throw OracleError("solve_system: candidate tuples exceed the cap");
    }

    std::vector<std::size_t> idx(n, 0);
    for (std::size_t c = 0; c < total; ++c) {
        Point z(n);
        for (std::size_t k = 0; k < n; ++k)
            z[k] = coords[k][idx[k]];
        bool ok = true;
        for (const auto& p : sys)
            if (!vanishes_numerically(p, z, opts.residual_tol)) {
                ok = false;
                break;
            }
        if (ok) {
            ++out.candidates;
            out.add(std::move(z));
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (++idx[k] < coords[k].size())
                break;
            idx[k] = 0;
        }
    }
    return out;
}

bool sets_equal(const NumericSolutionSet& a, const NumericSolutionSet& b, double tol) {
    auto covered = [tol](const NumericSolutionSet& x, const NumericSolutionSet& y) {
        for (const auto& p : x.points) {
            bool hit = std::any_of(y.points.begin(), y.points.end(),
                                   [&](const Point& q) { return points_close(p, q, tol); });
            if (!hit)
                return false;
        }
        return true;
    };
    return covered(a, b) && covered(b, a);
}

std::vector<ParameterPoint> sample_stable_points(const FactorSet& f, std::size_t count, std::uint64_t seed,
                                                 unsigned height) {
    if (height == 0)
        throw std::invalid_argument("sample height must be positive");
    const std::size_t d = f.context()->num_params();
    const int h = static_cast<int>(height);
    std::vector<ParameterPoint> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(i)};
        std::mt19937_64 rng(ss);
        std::uniform_int_distribution<int> num(-h, h), den(1, h);
        bool found = false;
        for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
            ParameterPoint a;
            for (std::size_t j = 0; j < d; ++j) {
                Rational q(num(rng), den(rng));
                q.canonicalize();
                a.push_back(q);
            }
            if (!f.vanishes_at(a)) {
                out.push_back(std::move(a));
                found = true;
            }
        }
        if (!found)
            throw OracleError("sample_stable_points: no stable point found");
    }
    return out;
}

}  // namespace rdu
