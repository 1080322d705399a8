#include "eliminant/monomial.hpp"

namespace eliminant {

namespace {

// grevlex on the index range [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    const int n = a.nvars();
    switch (kind) {
        case Kind::Lex:
            for (int i = 0; i < n; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        case Kind::Grevlex:
            if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
            for (int i = n; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        case Kind::Block: {
            int c = grevlex_range(a, b, 0, block_split);
            if (c) return c;
            return grevlex_range(a, b, block_split, n);
        }
        case Kind::Weighted: {
            long wa = 0, wb = 0;
            for (int i = 0; i < n; ++i) {
                wa += weights[i] * a.e[i];
                wb += weights[i] * b.e[i];
            }
            if (wa != wb) return wa < wb ? -1 : 1;
            for (int i = n; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
            return 0;
        }
    }
    return 0;
}

}  // namespace eliminant
