#pragma once

// Independent reference computations for tests: determinants by
// fraction-free elimination, Sylvester resultants and determinantal
// subresultants, plus random polynomial generators.

#include <random>
#include <utility>
#include <vector>

#include "rdu/factor.hpp"
#include "rdu/polynomial.hpp"

namespace rdu::testing {

using Matrix = std::vector<std::vector<Polynomial>>;

// Bareiss elimination with row swaps; entries from an integral domain.
inline Polynomial bareiss_determinant(Matrix a, const ContextPtr& ctx) {
    const std::size_t n = a.size();
    if (n == 0)
        return Polynomial::constant(ctx, 1);
    Polynomial prev = Polynomial::constant(ctx, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero())
                ++r;
            if (r == n)
                return Polynomial(ctx);
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Coefficients c_0..c_deg of f w.r.t. slot.
inline std::vector<Polynomial> coeffs(const Polynomial& f, std::size_t slot) {
    return coefficients(f, slot);
}

// det of the (m+l-2j) x (m+l-2j) matrix whose rows are x^{l-j-1} f .. f,
// x^{m-j-1} g .. g, with columns x^{m+l-j-1} .. x^{j+1} and a final
// column holding the polynomial row itself.
inline Polynomial determinantal_subresultant(const Polynomial& f, const Polynomial& g, std::size_t slot,
                                             unsigned j) {
    const ContextPtr& ctx = f.context();
    const auto fc = coeffs(f, slot), gc = coeffs(g, slot);
    const unsigned m = static_cast<unsigned>(fc.size() - 1), l = static_cast<unsigned>(gc.size() - 1);
    const unsigned size = m + l - 2 * j;
    const unsigned top = m + l - j - 1;  // exponent of the first column

    struct Row {
        const std::vector<Polynomial>* c;
        unsigned shift;
    };
    std::vector<Row> rows;
    for (unsigned s = l - j; s-- > 0;)
        rows.push_back({&fc, s});
    for (unsigned s = m - j; s-- > 0;)
        rows.push_back({&gc, s});

    auto coef = [&](const Row& r, unsigned e) -> Polynomial {
        if (e < r.shift || e - r.shift >= r.c->size())
            return Polynomial(ctx);
        return (*r.c)[e - r.shift];
    };

    Polynomial out(ctx);
    for (unsigned i = 0; i <= j; ++i) {
        Matrix mat(size, std::vector<Polynomial>(size, Polynomial(ctx)));
        for (unsigned r = 0; r < size; ++r) {
            for (unsigned c = 0; c + 1 < size; ++c)
                mat[r][c] = coef(rows[r], top - c);
            mat[r][size - 1] = coef(rows[r], i);
        }
        out += bareiss_determinant(std::move(mat), ctx) * Polynomial::monomial(ctx, slot, i);
    }
    return out;
}

inline Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, std::size_t slot) {
    return determinantal_subresultant(f, g, slot, 0);
}

// Random polynomial with `terms` attempts at monomials of total degree
// <= deg over the listed slots, integer coefficients in [-c, c].
inline Polynomial random_poly(std::mt19937_64& rng, const ContextPtr& ctx, const std::vector<std::size_t>& slots,
                              unsigned deg, unsigned terms, int c = 5) {
    std::uniform_int_distribution<int> coef(-c, c);
    std::uniform_int_distribution<unsigned> dd(0, deg);
    std::vector<Term> ts;
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(ctx->size(), 0);
        unsigned budget = dd(rng);
        for (unsigned k = 0; k < budget; ++k)
            e[slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)]]++;
        ts.push_back({std::move(e), Rational(coef(rng))});
    }
    return Polynomial(ctx, std::move(ts));
}

// Random polynomial in `slot` of exact degree `deg` whose coefficients
// are random polynomials in `coef_slots`.
inline Polynomial random_in(std::mt19937_64& rng, const ContextPtr& ctx, std::size_t slot, unsigned deg,
                            const std::vector<std::size_t>& coef_slots, unsigned coef_deg, unsigned coef_terms) {
    for (;;) {
        Polynomial f(ctx);
        for (unsigned k = 0; k <= deg; ++k) {
            Polynomial c = coef_slots.empty()
                               ? Polynomial::constant(ctx, std::uniform_int_distribution<int>(-5, 5)(rng))
                               : random_poly(rng, ctx, coef_slots, coef_deg, coef_terms);
            f += c * Polynomial::monomial(ctx, slot, k);
        }
        if (degree(f, slot) == deg)
            return f;
    }
}

}  // namespace rdu::testing
