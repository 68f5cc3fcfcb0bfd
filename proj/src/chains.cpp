#include "rdu/chains.hpp"

#include <algorithm>
#include <stdexcept>

#include "rdu/factor.hpp"
#include "rdu/subres.hpp"

namespace rdu {

bool is_triangular(std::span<const Polynomial> polys) {
    if (polys.empty())
        return false;
    std::size_t prev = 0;
    for (const auto& p : polys) {
        if (p.is_zero())
            return false;
        std::size_t c = cls(p);
        if (c <= prev)
            return false;
        prev = c;
    }
    return true;
}

TriangularSet::TriangularSet(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
    if (!is_triangular(polys_))
        throw std::invalid_argument("not a triangular set");
    for (const auto& p : polys_)
        if (!same_context(p.context(), polys_.front().context()))
            throw std::invalid_argument("triangular set mixes contexts");
}

bool TriangularSet::is_zero_dimensional() const {
    const std::size_t n = context()->num_vars();
    if (polys_.size() != n)
        return false;
    for (std::size_t i = 0; i < n; ++i)
        if (cls(polys_[i]) != i + 1)
            return false;
    return true;
}

std::vector<std::string> TriangularSet::strs() const {
    std::vector<std::string> out;
    for (const auto& p : polys_)
        out.push_back(p.str());
    return out;
}

TriangularSet AscendingChain::as_triangular() const {
    if (contradictory)
        throw std::logic_error("contradictory chain is not a triangular set");
    return TriangularSet(polys);
}

std::vector<std::string> AscendingChain::strs() const {
    std::vector<std::string> out;
    for (const auto& p : polys)
        out.push_back(p.str());
    return out;
}

bool is_regular_chain(const TriangularSet& t) {
    for (std::size_t i = 1; i < t.size(); ++i) {
        std::span<const Polynomial> below(t.polys().data(), i);
        if (successive_resultant(initial(t[i]), below).is_zero())
            return false;
    }
    return true;
}

RegularChainZD RegularChainZD::checked(TriangularSet t) {
    if (!t.is_zero_dimensional())
        throw std::invalid_argument("chain is not zero-dimensional");
    if (!is_regular_chain(t))
        throw std::invalid_argument("chain is not regular");
    return RegularChainZD(std::move(t));
}

RegularChainZD RegularChainZD::trusted(TriangularSet t) {
    if (!t.is_zero_dimensional())
        throw std::logic_error("internal chain is not zero-dimensional");
    return RegularChainZD(std::move(t));
}

std::vector<Rank> rank_set(std::span<const Polynomial> t) {
    std::vector<Rank> out;
    for (const auto& p : t)
        out.push_back(rank(p));
    return out;
}

Polynomial iterated_initial_resultant(const TriangularSet& t) {
    Polynomial prod = Polynomial::constant(t.context(), 1);
    for (const auto& p : t)
        prod = prod * successive_resultant(initial(p), t);
    if (prod.is_zero() || cls(prod) != 0)
        throw std::domain_error("iterated initial resultant is not a nonzero parameter polynomial");
    return prod;
}

std::vector<Polynomial> specialize_all(std::span<const Polynomial> t, const ParameterPoint& a) {
    std::vector<Polynomial> out;
    if (t.empty())
        return out;
    ContextPtr target = variables_only(t.front().ctx());
    for (const auto& p : t)
        out.push_back(specialize(p, a, target));
    return out;
}

bool specializes_well_direct(const TriangularSet& t, const ParameterPoint& a) {
    auto ta = specialize_all(t, a);
    for (const auto& p : ta)
        if (p.is_zero())
            return false;
    if (rank_set(ta) != rank_set(t))
        return false;
    return is_regular_chain(TriangularSet(std::move(ta)));
}

bool specializes_well(const RegularChainZD& t, const ParameterPoint& a) {
    const Polynomial r = iterated_initial_resultant(t.set());
    std::vector<Rational> pt(r.ctx().size(), 0);
    std::copy(a.begin(), a.end(), pt.begin());
    const bool by_resultant = evaluate(r, pt) != 0;
    if (by_resultant != specializes_well_direct(t.set(), a))
        throw std::logic_error("specializes_well: resultant criterion and rank check disagree at " +
                               point_str(a));
    return by_resultant;
}

TriangularSet normalize_chain(const TriangularSet& t) {
    std::vector<Polynomial> out;
    for (const auto& p : t)
        out.push_back(primitive_part(p, mvar(p)));
    return TriangularSet(std::move(out));
}

bool chain_less(std::span<const Polynomial> a, std::span<const Polynomial> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), canonical_less);
}

}  // namespace rdu
