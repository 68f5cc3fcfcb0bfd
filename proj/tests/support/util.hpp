#pragma once

#include <string>
#include <vector>

#include "rdu/chains.hpp"
#include "rdu/factor.hpp"
#include "rdu/parse.hpp"

namespace rdu::testing {

inline Polynomial P(const ContextPtr& ctx, const std::string& s) {
    return parse_polynomial(s, ctx);
}

inline std::vector<Polynomial> Ps(const ContextPtr& ctx, const std::vector<std::string>& ss) {
    std::vector<Polynomial> out;
    for (const auto& s : ss)
        out.push_back(P(ctx, s));
    return out;
}

// Equal up to a nonzero rational factor.
inline bool associate(const Polynomial& a, const Polynomial& b) {
    return canonical_associate(a) == canonical_associate(b);
}

inline bool associate_chain(std::span<const Polynomial> a, std::span<const Polynomial> b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!associate(a[i], b[i]))
            return false;
    return true;
}

inline ContextPtr ctx_u_x2() {
    return make_context({"u"}, {"x1", "x2"});
}
inline ContextPtr ctx_u1u2_x2() {
    return make_context({"u1", "u2"}, {"x1", "x2"});
}

}  // namespace rdu::testing
