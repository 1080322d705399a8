#include <functional>
#include "eliminant/matrix.hpp"

#include <algorithm>
#include <map>

#include "eliminant/interp.hpp"

namespace eliminant {

ExactMatrix::ExactMatrix(int rows, int cols, DomainPtr domain)
    : rows_(rows), cols_(cols), dom_(std::move(domain)) {
    a_.assign(static_cast<size_t>(rows_) * cols_, dom_->zero());
}

ExactMatrix ExactMatrix::identity(int n, DomainPtr domain) {
    ExactMatrix m(n, n, domain);
    for (int i = 0; i < n; ++i) m.at(i, i) = domain->one();
    return m;
}

ExactMatrix ExactMatrix::mul(const ExactMatrix& other) const {
    if (cols_ != other.rows_)
        fail(ErrCode::BadArgument, "matrix mul: shape mismatch");
    const auto& dom = *dom_;
    ExactMatrix r(rows_, other.cols_, dom_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Coeff& aik = at(i, k);
            if (dom.is_zero(aik)) continue;
            for (int j = 0; j < other.cols_; ++j)
                r.at(i, j) = dom.add(r.at(i, j), dom.mul(aik, other.at(k, j)));
        }
    return r;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix r(cols_, rows_, dom_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// pivot weight: prefer few-term / small entries to limit swell
double entry_weight(const CoeffDomain& dom, const Coeff& c) {
    switch (dom.kind()) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return static_cast<double>(
                mpz_sizeinbase(c.rat().get_num_mpz_t(), 2) +
                mpz_sizeinbase(c.rat().get_den_mpz_t(), 2));
        case DomainKind::PrimeField:
            return 1.0;
        case DomainKind::PolynomialDomain:
            return static_cast<double>(c.param().terms.size());
    }
    return 1.0;
}

Coeff det_bareiss(const ExactMatrix& M) {
    const int n = M.rows();
    const auto& dom = *M.domain();
    ExactMatrix w = M;
    int sign = 1;
    Coeff prev = dom.one();
    for (int k = 0; k < n - 1; ++k) {
        // pick the lightest nonzero pivot in column k
        int piv = -1;
        double best = 0;
        for (int i = k; i < n; ++i) {
            if (dom.is_zero(w.at(i, k))) continue;
            double wt = entry_weight(dom, w.at(i, k));
            if (piv < 0 || wt < best) {
                piv = i;
                best = wt;
            }
        }
        if (piv < 0) return dom.zero();
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            sign = -sign;
        }
        const bool trivial_prev = dom.is_one(prev);
        for (int i = k + 1; i < n; ++i) {
            const bool zrow = dom.is_zero(w.at(i, k));
            for (int j = k + 1; j < n; ++j) {
                // sparse fast paths keep structured matrices cheap
                if (zrow && dom.is_zero(w.at(i, j))) continue;
                Coeff num = zrow ? dom.mul(w.at(i, j), w.at(k, k))
                                 : dom.sub(dom.mul(w.at(i, j), w.at(k, k)),
                                           dom.mul(w.at(i, k), w.at(k, j)));
                w.at(i, j) = trivial_prev ? std::move(num)
                                          : dom.exact_div(num, prev);
            }
            w.at(i, k) = dom.zero();
        }
        prev = w.at(k, k);
    }
    Coeff d = w.at(n - 1, n - 1);
    return sign < 0 ? dom.neg(d) : d;
}

Coeff det_cofactor_rec(const ExactMatrix& M, int row, std::vector<int>& cols) {
    const auto& dom = *M.domain();
    if (cols.size() == 1) return M.at(row, cols[0]);
    Coeff acc = dom.zero();
    for (size_t j = 0; j < cols.size(); ++j) {
        const Coeff& a = M.at(row, cols[j]);
        if (dom.is_zero(a)) continue;
        int col = cols[j];
        cols.erase(cols.begin() + j);
        Coeff sub = det_cofactor_rec(M, row + 1, cols);
        cols.insert(cols.begin() + j, col);
        Coeff term = dom.mul(a, sub);
        acc = (j % 2 == 0) ? dom.add(acc, term) : dom.sub(acc, term);
    }
    return acc;
}

Coeff det_cofactor(const ExactMatrix& M) {
    std::vector<int> cols(M.cols());
    for (int j = 0; j < M.cols(); ++j) cols[j] = j;
    return det_cofactor_rec(M, 0, cols);
}

Coeff det_interpolate(const ExactMatrix& M) {
    const auto& dom = *M.domain();
    if (dom.kind() != DomainKind::PolynomialDomain)
        return det_bareiss(M);
    const int m = dom.nparams();
    const int n = M.rows();
    std::vector<int> bounds(m, 0);
    for (int t = 0; t < m; ++t) {
        int total = 0;
        for (int i = 0; i < n; ++i) {
            int rowmax = 0;
            for (int j = 0; j < n; ++j)
                rowmax = std::max(rowmax, pp_degree_in(M.at(i, j).param(), t));
            total += rowmax;
        }
        bounds[t] = total;
    }
    auto base = dom.base();
    auto eval = [&](const std::vector<Rat>& point) -> Rat {
        ExactMatrix s(n, n, CoeffDomain::rationals());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s.at(i, j) = Coeff(pp_eval(M.at(i, j).param(), point));
        return det_bareiss(s).rat();
    };
    std::vector<Rat> offsets(m, Rat(0));
    ParamPoly result = interpolate_grid(eval, bounds, offsets);
    if (base->kind() == DomainKind::Integers) {
        for (const auto& [mono, c] : result.terms)
            if (c.get_den() != 1)
                fail(ErrCode::DomainError,
                     "interpolated determinant not integral");
    }
    return Coeff(std::move(result));
}

}  // namespace

Coeff det(const ExactMatrix& M, DetStrategy strategy) {
    if (M.rows() != M.cols())
        fail(ErrCode::NonSquare, "det: matrix is not square");
    if (M.rows() == 0) return M.domain()->one();
    const auto& dom = *M.domain();
    switch (strategy) {
        case DetStrategy::Bareiss:
            return det_bareiss(M);
        case DetStrategy::Cofactor:
            return det_cofactor(M);
        case DetStrategy::Interpolate:
            return det_interpolate(M);
        case DetStrategy::Auto:
            if (M.rows() <= 4) return det_cofactor(M);
            if (dom.kind() == DomainKind::PolynomialDomain &&
                dom.nparams() <= 2 && M.rows() <= 8)
                return det_cofactor(M);
            return det_bareiss(M);
    }
    return det_bareiss(M);
}

std::vector<Coeff> solve(const ExactMatrix& M, const std::vector<Coeff>& b) {
    if (M.rows() != M.cols())
        fail(ErrCode::NonSquare, "solve: matrix is not square");
    if (static_cast<int>(b.size()) != M.rows())
        fail(ErrCode::BadArgument, "solve: rhs length mismatch");
    auto field = M.domain()->fraction_field();
    const auto& dom = *field;
    const int n = M.rows();
    // augmented Gaussian elimination over the fraction field
    ExactMatrix w(n, n + 1, field);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w.at(i, j) = M.at(i, j);
        w.at(i, n) = b[i];
    }
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!dom.is_zero(w.at(i, k))) {
                piv = i;
                break;
            }
        if (piv < 0) fail(ErrCode::SingularMatrix, "solve: singular matrix");
        if (piv != k)
            for (int j = k; j <= n; ++j) std::swap(w.at(k, j), w.at(piv, j));
        Coeff inv = dom.inv(w.at(k, k));
        for (int j = k; j <= n; ++j) w.at(k, j) = dom.mul(w.at(k, j), inv);
        for (int i = 0; i < n; ++i) {
            if (i == k || dom.is_zero(w.at(i, k))) continue;
            Coeff f = w.at(i, k);
            for (int j = k; j <= n; ++j)
                w.at(i, j) = dom.sub(w.at(i, j), dom.mul(f, w.at(k, j)));
        }
    }
    std::vector<Coeff> x(n);
    for (int i = 0; i < n; ++i) x[i] = w.at(i, n);
    return x;
}

std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            cur[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

std::vector<Coeff> maximal_minors(const ExactMatrix& M) {
    if (M.rows() > M.cols())
        fail(ErrCode::BadArgument, "maximal_minors: more rows than columns");
    const int k = M.rows();
    std::vector<Coeff> out;
    for (const auto& sel : subsets_lex(M.cols(), k)) {
        ExactMatrix sub(k, k, M.domain());
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = M.at(i, sel[j]);
        out.push_back(det(sub));
    }
    return out;
}

ExactMatrix random_unimodular(int size, std::mt19937_64& rng, int amplitude) {
    if (size < 1) fail(ErrCode::BadArgument, "random_unimodular: size >= 1");
    auto zz = CoeffDomain::integers();
    ExactMatrix L = ExactMatrix::identity(size, zz);
    ExactMatrix U = ExactMatrix::identity(size, zz);
    auto draw = [&]() {
        auto span = static_cast<std::uint64_t>(2 * amplitude + 1);
        return static_cast<long>(rng() % span) - amplitude;
    };
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < i; ++j) L.at(i, j) = zz->from_int(draw());
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) U.at(i, j) = zz->from_int(draw());
    return L.mul(U);
}

std::vector<Poly> linear_change(const std::vector<Poly>& polys,
                                const ExactMatrix& A) {
    if (polys.empty()) return {};
    RingPtr ring = polys[0].ring();
    const int n = ring->nvars();
    if (A.rows() != n || A.cols() != n)
        fail(ErrCode::BadArgument, "linear_change: matrix size mismatch");
    const auto& dom = *ring->domain();
    std::map<int, Poly> images;
    for (int v = 0; v < n; ++v) {
        PolyBuilder acc(ring);
        for (int j = 0; j < n; ++j) {
            Coeff c = A.domain()->same_as(dom)
                          ? A.at(v, j)
                          : dom.from_rat(A.at(v, j).rat());
            if (!dom.is_zero(c)) acc.add_term(Monomial::var(j, n), c);
        }
        images.emplace(v, acc.build());
    }
    std::vector<Poly> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        require_same_ring(p.ring(), ring, "linear_change");
        out.push_back(substitute(p, images, ring));
    }
    return out;
}

Poly poly_det(const std::vector<std::vector<Poly>>& M) {
    const int n = static_cast<int>(M.size());
    if (n == 0) fail(ErrCode::BadArgument, "poly_det: empty matrix");
    RingPtr ring = M[0][0].ring();
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    std::function<Poly(int, std::vector<int>&)> rec =
        [&](int row, std::vector<int>& cs) -> Poly {
        if (cs.size() == 1) return M[row][cs[0]];
        Poly acc = Poly::zero(ring);
        for (size_t j = 0; j < cs.size(); ++j) {
            const Poly& a = M[row][cs[j]];
            if (a.is_zero()) continue;
            int col = cs[j];
            cs.erase(cs.begin() + j);
            Poly sub = rec(row + 1, cs);
            cs.insert(cs.begin() + j, col);
            Poly term = poly_mul(a, sub);
            acc = (j % 2 == 0) ? poly_add(acc, term) : poly_sub(acc, term);
        }
        return acc;
    };
    return rec(0, cols);
}

std::vector<Poly> poly_maximal_minors(const std::vector<std::vector<Poly>>& M) {
    const int k = static_cast<int>(M.size());
    const int n = static_cast<int>(M[0].size());
    std::vector<Poly> out;
    for (const auto& sel : subsets_lex(n, k)) {
        std::vector<std::vector<Poly>> sub(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i].push_back(M[i][sel[j]]);
        out.push_back(poly_det(sub));
    }
    return out;
}

}  // namespace eliminant
