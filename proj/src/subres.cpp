#include "rdu/subres.hpp"

#include <stdexcept>

#include "rdu/factor.hpp"

namespace rdu {

SubresultantChain subresultant_chain(const Polynomial& f, const Polynomial& g, std::size_t slot) {
    const unsigned m = degree(f, slot);
    const unsigned l = degree(g, slot);
    if (!(m > l && l > 0))
        throw std::invalid_argument("subresultant_chain needs deg f > deg g > 0");
    const ContextPtr& ctx = f.context();

    SubresultantChain out;
    out.slot = slot;
    out.S.assign(m + 1, Polynomial(ctx));
    out.S[m] = f;
    out.S[m - 1] = g;

    const Polynomial lcg = leading_coefficient(g, slot);
    Polynomial s = lcg.pow(m - l);
    Polynomial C = m - l > 1 ? lcg.pow(m - l - 1) * g : g;
    out.S[l] = C;

    Polynomial A = C;
    unsigned d = l;
    Polynomial B = prem(f, -g, slot);
    while (!B.is_zero()) {
        const unsigned e = degree(B, slot);
        out.S[d - 1] = B;
        const unsigned delta = d - e;
        if (delta > 1)
            C = exact_quotient(leading_coefficient(B, slot).pow(delta - 1) * B, s.pow(delta - 1));
        else
            C = B;
        out.S[e] = C;
        if (e == 0)
            break;
        Polynomial next = exact_quotient(prem(A, -B, slot), s.pow(delta) * leading_coefficient(A, slot));
        A = C;
        s = leading_coefficient(A, slot);
        d = e;
        B = std::move(next);
    }
    return out;
}

RegularSubresultantChain regular_indices(SubresultantChain c) {
    RegularSubresultantChain out;
    out.indices.push_back(0);
    for (unsigned j = 1; j + 1 < c.S.size(); ++j)
        if (!c.S[j].is_zero() && degree(c.S[j], c.slot) == j)
            out.indices.push_back(j);
    out.chain = std::move(c);
    return out;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t slot) {
    const unsigned m = degree(f, slot);
    const unsigned l = degree(g, slot);
    if (m == 0 || l == 0)
        throw std::invalid_argument("resultant needs positive degrees");
    if (m > l)
        return subresultant_chain(f, g, slot).resultant();
    if (m < l) {
        Polynomial r = resultant(g, f, slot);
        return (static_cast<unsigned long>(m) * l) % 2 ? -r : r;
    }
    // Equal degrees: reduce g by f, then res(f, g) = res(f, g') / lc(f)^deg(g').
    Polynomial reduced = leading_coefficient(f, slot) * g - leading_coefficient(g, slot) * f;
    if (reduced.is_zero())
        return reduced;
    const unsigned e = degree(reduced, slot);
    if (e == 0)
        return reduced.pow(m);
    return exact_quotient(subresultant_chain(f, reduced, slot).resultant(),
                          leading_coefficient(f, slot).pow(e));
}

Polynomial successive_resultant(const Polynomial& f, std::span<const Polynomial> chain) {
    Polynomial r = f;
    for (std::size_t i = chain.size(); i-- > 0 && !r.is_zero();) {
        const std::size_t s = mvar(chain[i]);
        if (degree(r, s) > 0)
            r = resultant(r, chain[i], s);
    }
    return r;
}

}  // namespace rdu
