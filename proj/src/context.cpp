#include "rdu/context.hpp"

#include <stdexcept>
#include <unordered_set>

namespace rdu {

Context::Context(std::vector<std::string> params, std::vector<std::string> vars)
    : params_(std::move(params)), vars_(std::move(vars)) {
    if (vars_.empty())
        throw std::invalid_argument("context needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto* list : {&params_, &vars_}) {
        for (const auto& s : *list) {
            if (s.empty())
                throw std::invalid_argument("empty identifier");
            if (!seen.insert(s).second)
                throw std::invalid_argument("duplicate identifier '" + s + "'");
        }
    }
}

const std::string& Context::name(std::size_t slot) const {
    if (slot < params_.size())
        return params_[slot];
    return vars_.at(slot - params_.size());
}

std::optional<std::size_t> Context::find(std::string_view name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
        if (params_[i] == name)
            return i;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return params_.size() + i;
    return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> params, std::vector<std::string> vars) {
    return std::make_shared<const Context>(std::move(params), std::move(vars));
}

ContextPtr variables_only(const Context& ctx) {
    return make_context({}, ctx.vars());
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace rdu
