#include <algorithm>

#include "rdu/polynomial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rdu {

namespace {

// All pairwise products of a[lo, hi) with b, sorted and combined.
std::vector<Term> partial_product(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                                  const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve((hi - lo) * b.size());
    const std::size_t n = b.empty() ? 0 : b[0].exp.size();
    for (std::size_t i = lo; i < hi; ++i) {
        for (const auto& tb : b) {
            Term t{Exponents(n), a[i].coef * tb.coef};
            for (std::size_t k = 0; k < n; ++k)
                t.exp[k] = a[i].exp[k] + tb.exp[k];
            out.push_back(std::move(t));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.exp, y.exp) > 0; });
    std::vector<Term> merged;
    merged.reserve(out.size());
    for (auto& t : out) {
        if (!merged.empty() && merged.back().exp == t.exp)
            merged.back().coef += t.coef;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coef == 0; });
    return merged;
}

std::vector<Term> add_sorted(const std::vector<Term>& x, const std::vector<Term>& y) {
    std::vector<Term> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        int c = grlex_compare(x[i].exp, y[j].exp);
        if (c > 0) {
            out.push_back(x[i++]);
        } else if (c < 0) {
            out.push_back(y[j++]);
        } else {
            Rational s = x[i].coef + y[j].coef;
            if (s != 0)
                out.push_back(Term{x[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
    out.insert(out.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
    return out;
}

}  // namespace

Polynomial multiply_serial(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.context());
    return Polynomial::from_sorted(a.context(), partial_product(a.terms(), 0, a.size(), b.terms()));
}

Polynomial multiply_parallel(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial(a.context());
    const auto& x = a.size() >= b.size() ? a.terms() : b.terms();
    const auto& y = a.size() >= b.size() ? b.terms() : a.terms();

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    const std::size_t chunks = std::clamp<std::size_t>(4 * static_cast<std::size_t>(threads), 1, x.size());
    std::vector<std::vector<Term>> parts(chunks);

#pragma omp parallel for schedule(dynamic, 1)
    for (long c = 0; c < static_cast<long>(chunks); ++c) {
        const std::size_t lo = x.size() * static_cast<std::size_t>(c) / chunks;
        const std::size_t hi = x.size() * static_cast<std::size_t>(c + 1) / chunks;
        parts[static_cast<std::size_t>(c)] = partial_product(x, lo, hi, y);
    }

    // Pairwise tree reduction; each level merges disjoint pairs.
    for (std::size_t step = 1; step < chunks; step *= 2) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long i = 0; i < static_cast<long>(chunks); i += static_cast<long>(2 * step)) {
            const auto lo = static_cast<std::size_t>(i);
            if (lo + step < chunks) {
                parts[lo] = add_sorted(parts[lo], parts[lo + step]);
                parts[lo + step].clear();
            }
        }
    }
    return Polynomial::from_sorted(a.context(), std::move(parts[0]));
}

}  // namespace rdu
