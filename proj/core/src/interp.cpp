#include "eliminant/interp.hpp"

#include "eliminant/error.hpp"

namespace eliminant {

namespace {

ParamPoly pp_scale(const ParamPoly& a, const Rat& c) {
    if (c == 0) return ParamPoly{};
    ParamPoly r = a;
    for (auto& t : r.terms) t.second *= c;
    return r;
}

}  // namespace

ParamPoly newton_interpolate(int var, const std::vector<Rat>& nodes,
                             const std::vector<ParamPoly>& values, int nparams) {
    const size_t n = nodes.size();
    if (values.size() != n)
        fail(ErrCode::BadArgument, "newton_interpolate: size mismatch");
    // divided differences
    std::vector<ParamPoly> dd = values;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            Rat denom = nodes[i] - nodes[i - level];
            dd[i] = pp_scale(pp_sub(dd[i], dd[i - 1]), 1 / denom);
            if (i == level) break;
        }
    }
    // assemble sum dd[i] * prod_{j<i} (x_var - nodes[j]) from the top down
    ParamPoly x = pp_var(var, nparams);
    ParamPoly acc = dd[n - 1];
    for (size_t i = n - 1; i-- > 0;) {
        ParamPoly lin = pp_add(x, pp_const(-nodes[i], nparams));
        acc = pp_add(pp_mul(acc, lin), dd[i]);
    }
    return acc;
}

ParamPoly interpolate_grid(const std::function<Rat(const std::vector<Rat>&)>& f,
                           const std::vector<int>& bounds,
                           const std::vector<Rat>& offsets) {
    const int m = static_cast<int>(bounds.size());
    std::vector<Rat> point(m);
    // recursion over parameters, innermost = parameter 0
    std::function<ParamPoly(int)> rec = [&](int var) -> ParamPoly {
        if (var < 0) return pp_const(f(point), m);
        std::vector<Rat> nodes;
        std::vector<ParamPoly> values;
        nodes.reserve(bounds[var] + 1);
        for (int i = 0; i <= bounds[var]; ++i) {
            point[var] = offsets[var] + i;
            nodes.push_back(point[var]);
            values.push_back(rec(var - 1));
        }
        return newton_interpolate(var, nodes, values, m);
    };
    return rec(m - 1);
}

}  // namespace eliminant
