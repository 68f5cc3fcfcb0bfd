#include "rdu/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rdu {

namespace {

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

Polynomial one(const ContextPtr& ctx) {
    return Polynomial::constant(ctx, 1);
}

// gcd of two polynomials that are primitive in `slot` with positive degree.
Polynomial primitive_gcd(Polynomial a, Polynomial b, std::size_t slot) {
    if (degree(a, slot) < degree(b, slot))
        std::swap(a, b);
    for (;;) {
        Polynomial r = prem(a, b, slot);
        if (r.is_zero())
            return canonical_associate(b);
        if (degree(r, slot) == 0)
            return one(a.context());
        a = std::move(b);
        b = primitive_part(r, slot);
    }
}

void sort_unique(std::vector<Polynomial>& v) {
    std::sort(v.begin(), v.end(), canonical_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Polynomial> yun(const Polynomial& p, std::size_t slot) {
    std::vector<Polynomial> out;
    Polynomial dp = derivative(p, slot);
    Polynomial a = gcd(p, dp);
    Polynomial b = exact_quotient(p, a);
    Polynomial c = exact_quotient(dp, a);
    Polynomial d = c - derivative(b, slot);
    while (degree(b, slot) > 0) {
        a = gcd(b, d);
        if (!a.is_constant())
            out.push_back(a);
        b = exact_quotient(b, a);
        c = exact_quotient(d, a);
        d = c - derivative(b, slot);
    }
    return out;
}

void collect_factors(const Polynomial& input, std::vector<Polynomial>& out) {
    if (input.is_constant())
        return;
    const ContextPtr& ctx = input.context();
    const std::size_t n = ctx->size();

    // Pull out monomial factors first.
    Exponents low(n, ~0u);
    for (const auto& t : input.terms())
        for (std::size_t i = 0; i < n; ++i)
            low[i] = std::min(low[i], t.exp[i]);
    std::vector<Term> shifted = input.terms();
    for (auto& t : shifted)
        for (std::size_t i = 0; i < n; ++i)
            t.exp[i] -= low[i];
    for (std::size_t i = 0; i < n; ++i)
        if (low[i] > 0)
            out.push_back(Polynomial::monomial(ctx, i));
    Polynomial f(ctx, std::move(shifted));
    if (f.is_constant())
        return;

    const auto v = static_cast<std::size_t>(top_slot(f));
    Polynomial c = content(f, v);
    Polynomial p = exact_quotient(f, c);
    collect_factors(c, out);
    for (auto& q : yun(p, v))
        out.push_back(canonical_associate(q));
}

}  // namespace

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero())
        throw std::domain_error("division by zero polynomial");
    const ContextPtr& ctx = f.context();
    if (f.is_zero())
        return Polynomial(ctx);
    if (g.is_constant())
        return f.scaled(1 / g.constant_term());
    for (std::size_t s = 0; s < ctx->size(); ++s)
        if (degree(g, s) > degree(f, s))
            return std::nullopt;

    const Term& lg = g.leading_term();
    Polynomial r = f;
    std::vector<Term> q;
    while (!r.is_zero()) {
        const Term& lr = r.leading_term();
        if (!exp_divides(lg.exp, lr.exp))
            return std::nullopt;
        Term t{Exponents(lr.exp.size()), lr.coef / lg.coef};
        for (std::size_t i = 0; i < t.exp.size(); ++i)
            t.exp[i] = lr.exp[i] - lg.exp[i];
        q.push_back(t);
        r -= multiply_serial(Polynomial::from_sorted(ctx, {t}), g);
    }
    return Polynomial::from_sorted(ctx, std::move(q));
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
    auto q = divide_exact(f, g);
    if (!q)
        throw std::domain_error("inexact division: (" + f.str() + ") / (" + g.str() + ")");
    return *q;
}

Polynomial canonical_associate(const Polynomial& f) {
    if (f.is_zero())
        return f;
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& t : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (f.lex_leading_term().coef < 0)
        scale = -scale;
    return f.scaled(scale);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.context(), b.context()))
        throw std::invalid_argument("gcd: context mismatch");
    if (a.is_zero())
        return canonical_associate(b);
    if (b.is_zero())
        return canonical_associate(a);
    if (a.is_constant() || b.is_constant())
        return one(a.context());
    if (a == b)
        return canonical_associate(a);
    const auto v = static_cast<std::size_t>(std::max(top_slot(a), top_slot(b)));
    const unsigned da = degree(a, v), db = degree(b, v);
    if (da == 0)
        return gcd(a, content(b, v));
    if (db == 0)
        return gcd(content(a, v), b);
    Polynomial ca = content(a, v), cb = content(b, v);
    Polynomial c = gcd(ca, cb);
    Polynomial g = primitive_gcd(exact_quotient(a, ca), exact_quotient(b, cb), v);
    return canonical_associate(c * g);
}

Polynomial content(const Polynomial& f, std::size_t slot) {
    if (f.is_zero())
        return f;
    auto cs = coefficients(f, slot);
    Polynomial g(f.context());
    for (const auto& c : cs) {
        if (c.is_zero())
            continue;
        g = gcd(g, c);
        if (g.is_constant())
            return one(f.context());
    }
    return g;
}

Polynomial primitive_part(const Polynomial& f, std::size_t slot) {
    if (f.is_zero())
        return f;
    return canonical_associate(exact_quotient(f, content(f, slot)));
}

std::vector<Polynomial> squarefree_primitive_factors(const Polynomial& f) {
    if (f.is_zero())
        throw std::domain_error("squarefree factors of the zero polynomial");
    std::vector<Polynomial> out;
    collect_factors(f, out);
    sort_unique(out);
    return out;
}

Polynomial squarefree_part(const Polynomial& f) {
    Polynomial p = one(f.context());
    for (const auto& q : squarefree_primitive_factors(f))
        p = p * q;
    return p;
}

FactorSet::FactorSet(ContextPtr ctx) : ctx_(std::move(ctx)) {}

void FactorSet::insert(const Polynomial& f) {
    if (f.is_zero())
        throw std::domain_error("factor set cannot contain zero");
    if (!same_context(ctx_, f.context()))
        throw std::invalid_argument("factor set: context mismatch");
    for (auto& q : squarefree_primitive_factors(f))
        add_coprime(std::move(q));
    std::sort(factors_.begin(), factors_.end(), canonical_less);
}

void FactorSet::merge(const FactorSet& other) {
    for (const auto& q : other.factors_)
        add_coprime(q);
    std::sort(factors_.begin(), factors_.end(), canonical_less);
}

void FactorSet::add_coprime(Polynomial q) {
    std::vector<Polynomial> pending{std::move(q)};
    while (!pending.empty()) {
        Polynomial cur = std::move(pending.back());
        pending.pop_back();
        if (cur.is_constant())
            continue;
        bool split = false;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            Polynomial g = gcd(cur, factors_[i]);
            if (g.is_constant())
                continue;
            Polynomial h = factors_[i];
            factors_.erase(factors_.begin() + static_cast<std::ptrdiff_t>(i));
            Polynomial hg = exact_quotient(h, g);
            factors_.push_back(g);
            if (!hg.is_constant())
                factors_.push_back(canonical_associate(hg));
            pending.push_back(exact_quotient(cur, g));
            split = true;
            break;
        }
        if (!split)
            factors_.push_back(canonical_associate(cur));
    }
}

Polynomial FactorSet::product() const {
    Polynomial p = one(ctx_);
    for (const auto& q : factors_)
        p = p * q;
    return p;
}

bool FactorSet::contains(const Polynomial& f) const {
    Polynomial c = canonical_associate(f);
    return std::find(factors_.begin(), factors_.end(), c) != factors_.end();
}

bool FactorSet::vanishes_at(const ParameterPoint& a) const {
    std::vector<Rational> pt(ctx_->size(), 0);
    if (a.size() != ctx_->num_params())
        throw std::invalid_argument("parameter point has wrong dimension");
    std::copy(a.begin(), a.end(), pt.begin());
    for (const auto& q : factors_) {
        if (cls(q) != 0)
            throw std::domain_error("vanishes_at needs class-0 factors");
        if (evaluate(q, pt) == 0)
            return true;
    }
    return false;
}

}  // namespace rdu
