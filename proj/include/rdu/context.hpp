#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdu {

// Ordered indeterminates u1 < ... < ud < x1 < ... < xn.  Exponent vectors
// are indexed by "slot": parameters occupy slots 0..d-1, variable x_k
// (1-based) occupies slot d+k-1.
class Context {
public:
    Context(std::vector<std::string> params, std::vector<std::string> vars);

    std::size_t num_params() const { return params_.size(); }
    std::size_t num_vars() const { return vars_.size(); }
    std::size_t size() const { return params_.size() + vars_.size(); }

    std::size_t var_slot(std::size_t k) const { return params_.size() + k - 1; }
    // Class of a slot: 0 for parameters, k for x_k.
    std::size_t slot_class(std::size_t slot) const {
        return slot < params_.size() ? 0 : slot - params_.size() + 1;
    }

    const std::string& name(std::size_t slot) const;
    std::optional<std::size_t> find(std::string_view name) const;

    const std::vector<std::string>& params() const { return params_; }
    const std::vector<std::string>& vars() const { return vars_; }

    bool operator==(const Context&) const = default;

private:
    std::vector<std::string> params_;
    std::vector<std::string> vars_;
};

using ContextPtr = std::shared_ptr<const Context>;

ContextPtr make_context(std::vector<std::string> params, std::vector<std::string> vars);

// Same variables, no parameters.  Target of specialization.
ContextPtr variables_only(const Context& ctx);

bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace rdu
