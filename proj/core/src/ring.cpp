#include "eliminant/ring.hpp"

#include <set>

namespace eliminant {

RingPtr RingCtx::make(std::vector<std::string> vars, DomainPtr domain,
                      MonomialOrder order) {
    std::set<std::string> seen(vars.begin(), vars.end());
    if (seen.size() != vars.size())
        fail(ErrCode::BadArgument, "duplicate variable names");
    if (domain->kind() == DomainKind::PolynomialDomain) {
        for (const auto& p : domain->params())
            if (seen.count(p))
                fail(ErrCode::BadArgument,
                     "variable name collides with parameter: " + p);
    }
    if (order.kind == MonomialOrder::Kind::Weighted &&
        order.weights.size() != vars.size())
        fail(ErrCode::BadArgument, "weight vector length mismatch");
    auto r = std::shared_ptr<RingCtx>(new RingCtx());
    r->vars_ = std::move(vars);
    r->domain_ = std::move(domain);
    r->order_ = std::move(order);
    return r;
}

std::optional<int> RingCtx::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

bool RingCtx::same_as(const RingCtx& other) const {
    if (vars_ != other.vars_) return false;
    if (!domain_->same_as(*other.domain_)) return false;
    if (order_.kind != other.order_.kind) return false;
    if (order_.kind == MonomialOrder::Kind::Block &&
        order_.block_split != other.order_.block_split)
        return false;
    if (order_.kind == MonomialOrder::Kind::Weighted &&
        order_.weights != other.order_.weights)
        return false;
    return true;
}

RingPtr RingCtx::with_order(MonomialOrder order) const {
    return make(vars_, domain_, std::move(order));
}

}  // namespace eliminant
