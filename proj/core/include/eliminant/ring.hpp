#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eliminant/domain.hpp"
#include "eliminant/monomial.hpp"

namespace eliminant {

class RingCtx;
using RingPtr = std::shared_ptr<const RingCtx>;

// Immutable ring context: named variables over a coefficient domain with a
// fixed monomial order. Shareable across threads.
class RingCtx {
public:
    static RingPtr make(std::vector<std::string> vars, DomainPtr domain,
                        MonomialOrder order = MonomialOrder::grevlex());

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }
    std::optional<int> var_index(const std::string& name) const;
    const DomainPtr& domain() const { return domain_; }
    const MonomialOrder& order() const { return order_; }

    int cmp(const Monomial& a, const Monomial& b) const {
        return order_.cmp(a, b);
    }

    // structural equality (same variables, same domain, same order)
    bool same_as(const RingCtx& other) const;

    // same variables/domain, different order
    RingPtr with_order(MonomialOrder order) const;

private:
    RingCtx() = default;
    std::vector<std::string> vars_;
    DomainPtr domain_;
    MonomialOrder order_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* what) {
    if (a.get() != b.get() && !a->same_as(*b))
        fail(ErrCode::RingMismatch, std::string(what) + ": ring mismatch");
}

}  // namespace eliminant
