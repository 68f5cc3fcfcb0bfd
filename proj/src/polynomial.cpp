#include "rdu/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rdu {

namespace {

Rational rpow(const Rational& base, unsigned e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    out.canonicalize();
    return out;
}

void require_same(const Polynomial& a, const Polynomial& b) {
    if (!same_context(a.context(), b.context()))
        throw std::invalid_argument("polynomials live in different contexts");
}

void require_slot(const Polynomial& f, std::size_t slot) {
    if (slot >= f.ctx().size())
        throw std::out_of_range("unknown indeterminate slot");
}

// Adds or subtracts two canonical term lists.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c;
        if (i == a.size())
            c = -1;
        else if (j == b.size())
            c = 1;
        else
            c = grlex_compare(a[i].exp, b[j].exp);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
            if (negate_b)
                out.back().coef = -out.back().coef;
        } else {
            Rational s = negate_b ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
            if (s != 0)
                out.push_back(Term{a[i].exp, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

void canonicalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return grlex_compare(x.exp, y.exp) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    terms = std::move(out);
}

struct Segment {
    bool negative;
    std::string text;
};

void render(const Polynomial& f, std::vector<Segment>& out);

std::string join(const std::vector<Segment>& segs) {
    if (segs.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (i == 0)
            s += segs[i].negative ? "-" : "";
        else
            s += segs[i].negative ? " - " : " + ";
        s += segs[i].text;
    }
    return s;
}

void render(const Polynomial& f, std::vector<Segment>& out) {
    if (f.is_zero())
        return;
    if (f.is_constant()) {
        Rational c = f.constant_term();
        out.push_back({c < 0, Rational(abs(c)).get_str()});
        return;
    }
    const std::size_t s = static_cast<std::size_t>(top_slot(f));
    auto cs = coefficients(f, s);
    for (std::size_t k = cs.size(); k-- > 0;) {
        const Polynomial& c = cs[k];
        if (c.is_zero())
            continue;
        if (k == 0) {
            render(c, out);
            continue;
        }
        std::string pw = f.ctx().name(s);
        if (k > 1)
            pw += "^" + std::to_string(k);
        if (c.is_constant()) {
            Rational v = c.constant_term();
            Rational a = abs(v);
            out.push_back({v < 0, a == 1 ? pw : a.get_str() + "*" + pw});
        } else if (c.size() == 1) {
            std::vector<Segment> inner;
            render(c, inner);
            out.push_back({inner[0].negative, inner[0].text + "*" + pw});
        } else {
            out.push_back({false, "(" + c.str() + ")*" + pw});
        }
    }
}

}  // namespace

int grlex_compare(const Exponents& a, const Exponents& b) {
    unsigned long da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db)
        return da < db ? -1 : 1;
    return lex_compare(a, b);
}

int lex_compare(const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_)
        throw std::invalid_argument("null context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> terms) : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    if (!ctx_)
        throw std::invalid_argument("null context");
    for (const auto& t : terms_)
        if (t.exp.size() != ctx_->size())
            throw std::invalid_argument("exponent vector length does not match context");
    canonicalize(terms_);
}

Polynomial Polynomial::from_sorted(ContextPtr ctx, std::vector<Term> terms) {
    Polynomial p(std::move(ctx));
    p.terms_ = std::move(terms);
    return p;
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
    Polynomial p(ctx);
    if (c != 0)
        p.terms_.push_back(Term{Exponents(ctx->size(), 0), c});
    return p;
}

Polynomial Polynomial::monomial(ContextPtr ctx, std::size_t slot, unsigned power, const Rational& c) {
    if (slot >= ctx->size())
        throw std::out_of_range("unknown indeterminate slot");
    Polynomial p(ctx);
    if (c != 0) {
        Exponents e(ctx->size(), 0);
        e[slot] = power;
        p.terms_.push_back(Term{std::move(e), c});
    }
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](auto e) { return e == 0; });
}

Rational Polynomial::constant_term() const {
    if (terms_.empty())
        return 0;
    const Term& last = terms_.back();
    for (auto e : last.exp)
        if (e != 0)
            return 0;
    return last.coef;
}

const Term& Polynomial::lex_leading_term() const {
    if (terms_.empty())
        throw std::domain_error("zero polynomial has no leading term");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (lex_compare(t.exp, best->exp) > 0)
            best = &t;
    return *best;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef = -t.coef;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same(*this, o);
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same(*this, o);
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0)
        return Polynomial(ctx_);
    Polynomial r = *this;
    for (auto& t : r.terms_)
        t.coef *= c;
    return r;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(ctx_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!same_context(ctx_, o.ctx_) || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef)
            return false;
    return true;
}

std::string Polynomial::str() const {
    std::vector<Segment> segs;
    render(*this, segs);
    return join(segs);
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same(a, b);
    if (a.size() * b.size() >= kParallelMulThreshold)
        return multiply_parallel(a, b);
    return multiply_serial(a, b);
}

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        int c = grlex_compare(x[i].exp, y[i].exp);
        if (c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int q = cmp(x[i].coef, y[i].coef);
        if (q != 0)
            return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return x.size() <=> y.size();
}

unsigned degree(const Polynomial& f, std::size_t slot) {
    require_slot(f, slot);
    unsigned d = 0;
    for (const auto& t : f.terms())
        d = std::max(d, static_cast<unsigned>(t.exp[slot]));
    return d;
}

unsigned total_degree(const Polynomial& f) {
    return f.is_zero() ? 0u : [&] {
        unsigned s = 0;
        for (auto e : f.leading_term().exp) s += e;
        return s;
    }();
}

bool involves(const Polynomial& f, std::size_t slot) {
    return degree(f, slot) > 0;
}

int top_slot(const Polynomial& f) {
    int best = -1;
    for (const auto& t : f.terms())
        for (std::size_t i = t.exp.size(); i-- > 0;)
            if (t.exp[i] > 0) {
                best = std::max(best, static_cast<int>(i));
                break;
            }
    return best;
}

std::size_t cls(const Polynomial& f) {
    if (f.is_zero())
        throw std::domain_error("class of the zero polynomial");
    int s = top_slot(f);
    if (s < 0)
        return 0;
    return f.ctx().slot_class(static_cast<std::size_t>(s));
}

std::size_t mvar(const Polynomial& f) {
    std::size_t c = cls(f);
    if (c == 0)
        throw std::domain_error("class-0 polynomial has no main variable");
    return f.ctx().var_slot(c);
}

Rank rank(const Polynomial& f) {
    std::size_t c = cls(f);
    if (c == 0)
        return {0, 0};
    return {c, degree(f, f.ctx().var_slot(c))};
}

std::string rank_str(const Context& ctx, const Rank& r) {
    if (r.cls == 0)
        return "1";
    std::string s = ctx.vars()[r.cls - 1];
    if (r.degree != 1)
        s += "^" + std::to_string(r.degree);
    return s;
}

std::vector<Polynomial> coefficients(const Polynomial& f, std::size_t slot) {
    require_slot(f, slot);
    const unsigned m = degree(f, slot);
    std::vector<std::vector<Term>> buckets(m + 1);
    for (const auto& t : f.terms()) {
        Term u = t;
        unsigned k = u.exp[slot];
        u.exp[slot] = 0;
        buckets[k].push_back(std::move(u));
    }
    std::vector<Polynomial> out;
    out.reserve(m + 1);
    for (auto& b : buckets)
        out.emplace_back(f.context(), std::move(b));
    return out;
}

Polynomial from_coefficients(const ContextPtr& ctx, const std::vector<Polynomial>& c, std::size_t slot) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (const auto& t : c[k].terms()) {
            if (t.exp[slot] != 0)
                throw std::invalid_argument("coefficient involves the expansion variable");
            Term u = t;
            u.exp[slot] = static_cast<std::uint32_t>(k);
            terms.push_back(std::move(u));
        }
    }
    return Polynomial(ctx, std::move(terms));
}

Polynomial coefficient(const Polynomial& f, std::size_t slot, unsigned k) {
    require_slot(f, slot);
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exp[slot] == k) {
            Term u = t;
            u.exp[slot] = 0;
            terms.push_back(std::move(u));
        }
    }
    return Polynomial(f.context(), std::move(terms));
}

Polynomial leading_coefficient(const Polynomial& f, std::size_t slot) {
    return coefficient(f, slot, degree(f, slot));
}

Polynomial initial(const Polynomial& f) {
    return leading_coefficient(f, mvar(f));
}

Polynomial derivative(const Polynomial& f, std::size_t slot) {
    require_slot(f, slot);
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        if (t.exp[slot] == 0)
            continue;
        Term u = t;
        u.coef *= t.exp[slot];
        u.exp[slot] -= 1;
        terms.push_back(std::move(u));
    }
    return Polynomial(f.context(), std::move(terms));
}

Polynomial substitute(const Polynomial& f, std::size_t slot, const Rational& v) {
    require_slot(f, slot);
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Term u = t;
        u.coef *= rpow(v, t.exp[slot]);
        u.exp[slot] = 0;
        terms.push_back(std::move(u));
    }
    return Polynomial(f.context(), std::move(terms));
}

Rational evaluate(const Polynomial& f, std::span<const Rational> values) {
    if (values.size() != f.ctx().size())
        throw std::invalid_argument("evaluation point has wrong dimension");
    Rational sum = 0;
    for (const auto& t : f.terms()) {
        Rational p = t.coef;
        for (std::size_t i = 0; i < values.size(); ++i)
            if (t.exp[i])
                p *= rpow(values[i], t.exp[i]);
        sum += p;
    }
    return sum;
}

PseudoDivision pseudo_divide(const Polynomial& f, const Polynomial& p, std::size_t slot) {
    require_same(f, p);
    const unsigned l = degree(p, slot);
    if (l == 0)
        throw std::domain_error("pseudo-division by a polynomial of degree 0");
    const unsigned m = degree(f, slot);
    const ContextPtr& ctx = f.context();
    if (f.is_zero() || m < l)
        return {Polynomial(ctx), f, 0};

    std::vector<Polynomial> r = coefficients(f, slot);
    const std::vector<Polynomial> pc = coefficients(p, slot);
    const Polynomial& lcp = pc[l];
    std::vector<Polynomial> q(m - l + 1, Polynomial(ctx));
    unsigned deferred = 0;  // steps whose leading coefficient was already zero

    for (unsigned k = m + 1; k-- > l;) {
        Polynomial c = r[k];
        if (c.is_zero()) {
            ++deferred;
            continue;
        }
        for (unsigned i = 0; i < k; ++i)
            if (!r[i].is_zero())
                r[i] = r[i] * lcp;
        r[k] = Polynomial(ctx);
        for (unsigned i = 0; i < l; ++i)
            if (!pc[i].is_zero())
                r[i + k - l] -= c * pc[i];
        for (auto& qj : q)
            if (!qj.is_zero())
                qj = qj * lcp;
        q[k - l] += c;
    }
    r.erase(r.begin() + l, r.end());
    Polynomial rem = from_coefficients(ctx, r, slot);
    Polynomial quo = from_coefficients(ctx, q, slot);
    if (deferred) {
        Polynomial s = lcp.pow(deferred);
        rem = rem * s;
        quo = quo * s;
    }
    return {std::move(quo), std::move(rem), m - l + 1};
}

Polynomial prem(const Polynomial& f, const Polynomial& p, std::size_t slot) {
    return pseudo_divide(f, p, slot).remainder;
}

Polynomial pquo(const Polynomial& f, const Polynomial& p, std::size_t slot) {
    return pseudo_divide(f, p, slot).quotient;
}

Polynomial sprem(const Polynomial& f, std::span<const Polynomial> chain) {
    Polynomial r = f;
    for (std::size_t i = chain.size(); i-- > 0 && !r.is_zero();)
        r = prem(r, chain[i], mvar(chain[i]));
    return r;
}

bool is_reduced(const Polynomial& f, std::span<const Polynomial> chain) {
    for (const auto& t : chain) {
        std::size_t s = mvar(t);
        if (degree(f, s) >= degree(t, s))
            return false;
    }
    return true;
}

Polynomial specialize(const Polynomial& f, const ParameterPoint& a, const ContextPtr& target) {
    const Context& src = f.ctx();
    const std::size_t d = src.num_params();
    if (a.size() != d)
        throw std::invalid_argument("parameter point has wrong dimension");
    if (target->num_params() != 0 || target->vars() != src.vars())
        throw std::invalid_argument("specialization target must be the variables-only context");
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) {
        Rational c = t.coef;
        for (std::size_t i = 0; i < d; ++i)
            if (t.exp[i])
                c *= rpow(a[i], t.exp[i]);
        if (c == 0)
            continue;
        terms.push_back(Term{Exponents(t.exp.begin() + static_cast<std::ptrdiff_t>(d), t.exp.end()), std::move(c)});
    }
    return Polynomial(target, std::move(terms));
}

Polynomial specialize(const Polynomial& f, const ParameterPoint& a) {
    return specialize(f, a, variables_only(f.ctx()));
}

Polynomial rehome(const Polynomial& f, const ContextPtr& ctx) {
    if (ctx->size() != f.ctx().size())
        throw std::invalid_argument("rehome: slot layout differs");
    return Polynomial::from_sorted(ctx, f.terms());
}

std::string point_str(const ParameterPoint& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i)
            s += ", ";
        s += a[i].get_str();
    }
    return s + ")";
}

}  // namespace rdu
