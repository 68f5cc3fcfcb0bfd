#include "rdu/wu.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "rdu/factor.hpp"

namespace rdu {

namespace {

constexpr int kMaxBranchDepth = 64;

struct SystemLess {
    bool operator()(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const {
        return chain_less(a, b);
    }
};

bool contains(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

std::vector<Polynomial> with(std::vector<Polynomial> q, const Polynomial& extra) {
    q.push_back(extra);
    return prepare_system(q);
}

class WuExplorer {
public:
    explicit WuExplorer(std::vector<WuBranch>& out) : out_(out) {}

    void explore(std::vector<Polynomial> q, int depth) {
        if (depth > kMaxBranchDepth)
            throw std::runtime_error("wu_decompose: branch depth limit exceeded");
        q = prepare_system(q);
        if (!seen_.insert(q).second)
            return;

        std::optional<AscendingChain> prev;
        AscendingChain b;
        for (;;) {
            b = basic_set(q);
            if (prev && compare_chain_rank(b, *prev) >= 0)
                throw std::logic_error("wu_decompose: basic set rank did not decrease");
            if (b.contradictory) {
                out_.push_back({b, q});
                return;
            }
            if (split_chain_element(b, q, depth))
                return;
            std::vector<Polynomial> added;
            for (const auto& p : q) {
                if (contains(b.polys, p))
                    continue;
                Polynomial r = sprem(p, b.polys);
                if (r.is_zero())
                    continue;
                auto fs = squarefree_primitive_factors(r);
                if (fs.empty()) {
                    added.push_back(Polynomial::constant(r.context(), 1));
                } else if (fs.size() == 1) {
                    added.push_back(fs.front());
                } else {
                    for (const auto& phi : fs)
                        explore(with(q, phi), depth + 1);
                    return;
                }
            }
            if (added.empty())
                break;
            q.insert(q.end(), added.begin(), added.end());
            q = prepare_system(q);
            prev = b;
        }

        out_.push_back({b, q});
        for (const auto& c : b.polys) {
            Polynomial init = initial(c);
            if (!init.is_constant())
                explore(with(q, init), depth + 1);
        }
    }

private:
    // Branches on the factors of the first basic-set element whose
    // primitive part has several coprime factors.
    bool split_chain_element(const AscendingChain& b, const std::vector<Polynomial>& q, int depth) {
        for (const auto& c : b.polys) {
            const std::size_t v = mvar(c);
            Polynomial cont = content(c, v);
            auto fs = squarefree_primitive_factors(exact_quotient(c, cont));
            if (fs.size() < 2)
                continue;
            for (const auto& phi : fs)
                explore(with(q, phi), depth + 1);
            if (!cont.is_constant())
                explore(with(q, cont), depth + 1);
            return true;
        }
        return false;
    }

    std::vector<WuBranch>& out_;
    std::set<std::vector<Polynomial>, SystemLess> seen_;
};

}  // namespace

bool ritt_less(const Polynomial& a, const Polynomial& b) {
    Rank ra = rank(a), rb = rank(b);
    if (ra != rb)
        return ra < rb;
    if (a.size() != b.size())
        return a.size() < b.size();
    return canonical_less(a, b);
}

int compare_chain_rank(const AscendingChain& a, const AscendingChain& b) {
    if (a.contradictory || b.contradictory) {
        if (a.contradictory && b.contradictory)
            return 0;
        return a.contradictory ? -1 : 1;
    }
    const std::size_t k = std::min(a.polys.size(), b.polys.size());
    for (std::size_t i = 0; i < k; ++i) {
        Rank ra = rank(a.polys[i]), rb = rank(b.polys[i]);
        if (ra != rb)
            return ra < rb ? -1 : 1;
    }
    if (a.polys.size() == b.polys.size())
        return 0;
    return a.polys.size() > b.polys.size() ? -1 : 1;
}

AscendingChain basic_set(const std::vector<Polynomial>& polys) {
    if (polys.empty())
        throw std::invalid_argument("basic_set of an empty system");
    std::vector<Polynomial> sorted = polys;
    for (const auto& p : sorted)
        if (p.is_zero())
            throw std::invalid_argument("basic_set: zero polynomial in system");
    std::sort(sorted.begin(), sorted.end(), ritt_less);

    AscendingChain out;
    if (cls(sorted.front()) == 0) {
        out.contradictory = true;
        out.polys.push_back(sorted.front());
        return out;
    }
    for (const auto& p : sorted) {
        if (out.polys.empty() || (cls(p) > cls(out.polys.back()) && is_reduced(p, out.polys)))
            out.polys.push_back(p);
    }
    return out;
}

CharacteristicSet characteristic_set(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> q = prepare_system(polys);
    if (q.empty())
        throw std::invalid_argument("characteristic_set of an empty system");
    std::optional<AscendingChain> prev;
    for (;;) {
        AscendingChain b = basic_set(q);
        if (prev && compare_chain_rank(b, *prev) >= 0)
            throw std::logic_error("characteristic_set: basic set rank did not decrease");
        if (b.contradictory)
            return {b, q};
        std::vector<Polynomial> added;
        for (const auto& p : q) {
            if (contains(b.polys, p))
                continue;
            Polynomial r = sprem(p, b.polys);
            if (!r.is_zero())
                added.push_back(squarefree_part(r));
        }
        if (added.empty())
            return {b, q};
        q.insert(q.end(), added.begin(), added.end());
        q = prepare_system(q);
        prev = b;
    }
}

std::vector<AscendingChain> WuDecomposition::chains() const {
    std::vector<AscendingChain> out;
    for (const auto& b : branches)
        out.push_back(b.chain);
    return out;
}

WuDecomposition wu_decompose(const std::vector<Polynomial>& polys) {
    WuDecomposition w;
    w.source = prepare_system(polys);
    if (w.source.empty())
        throw std::invalid_argument("wu_decompose of an empty system");
    std::vector<WuBranch> all;
    WuExplorer(all).explore(w.source, 0);
    for (auto& b : all) {
        const bool dup = std::any_of(w.branches.begin(), w.branches.end(), [&](const WuBranch& x) {
            return x.chain.contradictory == b.chain.contradictory && x.chain.polys == b.chain.polys;
        });
        if (!dup)
            w.branches.push_back(std::move(b));
    }
    return w;
}

bool is_generic_zero_dimensional(const WuDecomposition& w) {
    for (const auto& b : w.branches)
        if (!b.chain.contradictory && !b.chain.as_triangular().is_zero_dimensional())
            return false;
    return true;
}

std::vector<Polynomial> prepare_system(const std::vector<Polynomial>& polys) {
    std::vector<Polynomial> out;
    for (const auto& p : polys) {
        if (p.is_zero())
            continue;
        if (!out.empty() && !same_context(out.front().context(), p.context()))
            throw std::invalid_argument("system mixes contexts");
        out.push_back(canonical_associate(p));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace rdu
