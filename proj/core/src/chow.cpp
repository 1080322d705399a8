#include "eliminant/chow.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "eliminant/matrix.hpp"

namespace eliminant {

namespace {

// sorted s-subsets of {0..n} in colex order (matches the conventional variable
// listing for G(1,3): 01, 02, 12, 03, 13, 23)
std::vector<std::vector<int>> subsets_colex(int n, int s) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    // plain recursive enumeration, then colex sort
    std::function<void(int, int)> gen = [&](int start, int left) {
        if (left == 0) {
            all.push_back(cur);
            return;
        }
        for (int v = start; v <= n - left + 1; ++v) {
            cur.push_back(v);
            gen(v + 1, left - 1);
            cur.pop_back();
        }
    };
    gen(0, s);
    std::sort(all.begin(), all.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                      b.rbegin(), b.rend());
              });
    return all;
}

std::string subset_name(const std::vector<int>& I) {
    std::string s = "x[";
    for (size_t i = 0; i < I.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(I[i]);
    }
    return s + "]";
}

std::vector<int> complement_of(const std::vector<int>& I, int n) {
    std::vector<int> c;
    size_t pos = 0;
    for (int v = 0; v <= n; ++v) {
        if (pos < I.size() && I[pos] == v) {
            ++pos;
            continue;
        }
        c.push_back(v);
    }
    return c;
}

// sign of the permutation (I, I^c) of (0..n)
int shuffle_sign(const std::vector<int>& I, const std::vector<int>& Ic) {
    std::vector<int> seq(I.begin(), I.end());
    seq.insert(seq.end(), Ic.begin(), Ic.end());
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

// QQ[prefix[i,j] : i < rows, j < cols], row-major, grevlex
RingPtr matrix_ring(const std::string& prefix, int rows, int cols) {
    std::vector<std::string> vars;
    vars.reserve(static_cast<size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            vars.push_back(prefix + "[" + std::to_string(i) + "," +
                           std::to_string(j) + "]");
    return RingCtx::make(std::move(vars), CoeffDomain::rationals(),
                         MonomialOrder::grevlex());
}

// minor of the rows x cols variable matrix on the given column subset
Poly var_matrix_minor(const RingPtr& ring, int cols,
                      const std::vector<int>& rows_used,
                      const std::vector<int>& cols_used) {
    const int s = static_cast<int>(rows_used.size());
    std::vector<std::vector<Poly>> M(s, std::vector<Poly>(s, Poly::zero(ring)));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            M[i][j] =
                Poly::variable(ring, rows_used[i] * cols + cols_used[j]);
    return poly_det(M);
}

// s x s minors of a polynomial matrix, all row/column subsets
std::vector<Poly> poly_minors(const std::vector<std::vector<Poly>>& M, int s) {
    const int r = static_cast<int>(M.size());
    const int c = static_cast<int>(M[0].size());
    std::vector<Poly> out;
    if (s > r || s > c) return out;
    for (const auto& ri : subsets_lex(r, s)) {
        for (const auto& ci : subsets_lex(c, s)) {
            std::vector<std::vector<Poly>> sub(
                s, std::vector<Poly>(s, Poly::zero(M[0][0].ring())));
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) sub[i][j] = M[ri[i]][ci[j]];
            Poly d = poly_det(sub);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    }
    return out;
}

void require_rationals(const RingPtr& ring, const char* what) {
    if (ring->domain()->kind() != DomainKind::Rationals)
        fail(ErrCode::NonFieldCoefficients,
             std::string(what) + ": needs rational coefficients");
}

Poly canonical_scale(const Poly& p) {
    if (p.is_zero()) return p;
    return primitive_part(p);
}

// the unique smallest-degree generator with nonzero Plücker normal form
Poly hypersurface_generator(const Ideal& Z, const PluckerPtr& grass) {
    std::optional<Poly> best;
    for (const auto& g : Z.gb().gens) {
        Poly nf = grass->relations->gens().empty()
                      ? g
                      : normal_form(g, grass->relations->gb());
        if (nf.is_zero()) continue;
        if (!best || nf.total_degree() < best->total_degree()) best = nf;
    }
    if (!best)
        fail(ErrCode::DimMismatch,
             "chow_form: elimination produced no hypersurface (input not of "
             "the declared dimension?)");
    return *best;
}

}  // namespace

PluckerPtr plucker_ring(int a, int n) {
    if (a < 0 || a > n || n < 1)
        fail(ErrCode::BadArgument, "plucker_ring: need 0 <= a <= n");
    auto data = std::make_shared<PluckerRingData>();
    data->a = a;
    data->n = n;
    data->subsets = subsets_colex(n, a + 1);
    std::vector<std::string> vars;
    vars.reserve(data->subsets.size());
    for (const auto& I : data->subsets) vars.push_back(subset_name(I));
    data->ring = RingCtx::make(std::move(vars), CoeffDomain::rationals(),
                               MonomialOrder::grevlex());
    if (a == 0 || a == n - 1 || a == n) {
        // projective space: no relations
        data->relations = std::make_shared<Ideal>(data->ring, std::vector<Poly>{});
    } else {
        RingPtr U = matrix_ring("u", a + 1, n + 1);
        std::vector<int> rows(a + 1);
        for (int i = 0; i <= a; ++i) rows[i] = i;
        std::vector<Poly> images;
        images.reserve(data->subsets.size());
        for (const auto& I : data->subsets)
            images.push_back(var_matrix_minor(U, n + 1, rows, I));
        Ideal K = kernel(RingMap{data->ring, U, std::move(images)});
        data->relations = std::make_shared<Ideal>(data->ring, K.gb().gens);
    }
    return data;
}

PluckerElement make_plucker_element(PluckerPtr grass, const Poly& raw) {
    require_same_ring(raw.ring(), grass->ring, "plucker element");
    Poly rep = grass->relations->gens().empty()
                   ? raw
                   : normal_form(raw, grass->relations->gb());
    rep = canonical_scale(rep);
    return PluckerElement{std::move(grass), std::move(rep)};
}

bool plucker_equal(const PluckerElement& a, const PluckerElement& b) {
    return a.grass->a == b.grass->a && a.grass->n == b.grass->n &&
           a.rep == b.rep;
}

RingMap veronese(int k, int d) {
    if (k < 1 || d < 1) fail(ErrCode::BadArgument, "veronese: need k,d >= 1");
    std::vector<std::string> tvars;
    for (int i = 0; i <= k; ++i) tvars.push_back("t" + std::to_string(i));
    RingPtr target = RingCtx::make(std::move(tvars), CoeffDomain::rationals(),
                                   MonomialOrder::grevlex());
    // degree-d monomials, largest first in grevlex
    std::vector<Monomial> monos;
    std::vector<int> e(k + 1, 0);
    std::function<void(int, int)> gen = [&](int pos, int left) {
        if (pos == k) {
            e[pos] = left;
            monos.push_back(Monomial::of(e));
            return;
        }
        for (int v = left; v >= 0; --v) {
            e[pos] = v;
            gen(pos + 1, left - v);
        }
    };
    gen(0, d);
    std::sort(monos.begin(), monos.end(),
              [&](const Monomial& x, const Monomial& y) {
                  return target->cmp(x, y) > 0;
              });
    std::vector<std::string> xvars;
    for (size_t i = 0; i < monos.size(); ++i)
        xvars.push_back("x" + std::to_string(i));
    RingPtr source = RingCtx::make(std::move(xvars), CoeffDomain::rationals(),
                                   MonomialOrder::grevlex());
    std::vector<Poly> images;
    images.reserve(monos.size());
    for (const auto& m : monos)
        images.push_back(
            Poly::monomial(target, m, target->domain()->one()));
    return RingMap{source, target, std::move(images)};
}

ChowFormResult chow_form(const Ideal& I) {
    RingPtr R = I.ring();
    require_rationals(R, "chow_form");
    const int n = R->nvars() - 1;
    const int k = krull_dim(I) - 1;
    if (k < 0 || k >= n)
        fail(ErrCode::DimMismatch,
             "chow_form: variety dimension " + std::to_string(k) +
                 " out of range for P^" + std::to_string(n));

    // chart variable: X must not lie inside its hyperplane
    int chart = -1;
    for (int j = n; j >= 0; --j) {
        if (!normal_form(Poly::variable(R, j), I.gb()).is_zero()) {
            chart = j;
            break;
        }
    }
    if (chart < 0)
        fail(ErrCode::DimMismatch, "chow_form: ideal contains every variable");

    // stage 1: eliminate the point to get the Stiefel-coordinate eliminant
    // of { u : X and V(u_0 x, .., u_k x) meet } on the chart x_chart = 1
    std::vector<std::string> big_vars = R->vars();
    const int ucount = (k + 1) * (n + 1);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= n; ++j)
            big_vars.push_back("u[" + std::to_string(i) + "," +
                               std::to_string(j) + "]");
    RingPtr A = RingCtx::make(big_vars, CoeffDomain::rationals(),
                              MonomialOrder::grevlex());
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(map_ring(g, A));
    for (int i = 0; i <= k; ++i) {
        PolyBuilder row(A);
        for (int j = 0; j <= n; ++j)
            row.add_term(Monomial::var(n + 1 + i * (n + 1) + j,
                                       A->nvars()).mul(
                             Monomial::var(j, A->nvars())),
                         A->domain()->one());
        gens.push_back(row.build());
    }
    gens.push_back(Poly::variable(A, chart) -
                   Poly::constant(A, A->domain()->one()));
    std::vector<int> drop;
    for (int j = 0; j <= n; ++j) drop.push_back(j);
    Ideal E1 = eliminate(Ideal(A, std::move(gens)), drop);

    // stage 2: image of the eliminant hypersurface under the minor map
    PluckerPtr Gk = plucker_ring(k, n);
    RingPtr U = E1.ring();
    std::vector<int> rows(k + 1);
    for (int i = 0; i <= k; ++i) rows[i] = i;
    std::vector<Poly> images;
    for (const auto& sub : Gk->subsets)
        images.push_back(var_matrix_minor(U, n + 1, rows, sub));
    Ideal Z = kernel(RingMap{Gk->ring, U, std::move(images)}, E1.gb().gens);
    Poly rep = hypersurface_generator(Z, Gk);

    // relabel the u-row minors to G(n-k-1, n) by the annihilator
    // identification p_I -> sign(I, I^c) p_{I^c}
    PluckerPtr Gd = plucker_ring(n - k - 1, n);
    std::vector<Poly> relabel;
    for (const auto& I2 : Gk->subsets) {
        std::vector<int> c = complement_of(I2, n);
        int idx = -1;
        for (size_t t = 0; t < Gd->subsets.size(); ++t)
            if (Gd->subsets[t] == c) {
                idx = static_cast<int>(t);
                break;
            }
        Poly v = Poly::variable(Gd->ring, idx);
        if (shuffle_sign(I2, c) < 0) v = -v;
        relabel.push_back(std::move(v));
    }
    Poly moved = apply_map(RingMap{Gk->ring, Gd->ring, std::move(relabel)}, rep);
    return make_chow_result(make_plucker_element(Gd, moved), k, n);
}

Ideal chow_equations(const ChowFormResult& w) {
    const PluckerPtr& G = w.element.grass;
    const int n = G->n;
    const int rows = G->a + 1;  // first row x, then a fresh rows y
    std::vector<std::string> vars;
    for (int j = 0; j <= n; ++j) vars.push_back("x" + std::to_string(j));
    for (int r = 1; r < rows; ++r)
        for (int j = 0; j <= n; ++j)
            vars.push_back("y[" + std::to_string(r) + "," +
                           std::to_string(j) + "]");
    RingPtr B = RingCtx::make(vars, CoeffDomain::rationals(),
                              MonomialOrder::grevlex());
    auto entry = [&](int r, int j) {
        return Poly::variable(B, r * (n + 1) + j);
    };
    std::vector<Poly> images;
    for (const auto& I : G->subsets) {
        const int s = static_cast<int>(I.size());
        std::vector<std::vector<Poly>> M(s, std::vector<Poly>(s, Poly::zero(B)));
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < s; ++j) M[i][j] = entry(i, I[j]);
        images.push_back(poly_det(M));
    }
    Poly expanded =
        apply_map(RingMap{G->ring, B, std::move(images)}, w.element.rep);

    // collect the x-parts by y-monomial
    std::map<std::vector<int>, PolyBuilder> groups;
    RingPtr X = RingCtx::make(
        std::vector<std::string>(B->vars().begin(), B->vars().begin() + n + 1),
        CoeffDomain::rationals(), MonomialOrder::grevlex());
    for (const auto& [mono, c] : expanded.terms()) {
        std::vector<int> ypart(mono.e.begin() + n + 1, mono.e.end());
        std::vector<int> xpart(mono.e.begin(), mono.e.begin() + n + 1);
        auto [it, unused] = groups.try_emplace(std::move(ypart), X);
        it->second.add_term(Monomial::of(std::move(xpart)), c);
    }
    std::vector<Poly> gens;
    for (auto& [ypart, builder] : groups) {
        Poly g = canonical_scale(builder.build());
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return Ideal(X, std::move(gens));
}

PluckerElement dualize(const PluckerElement& w) {
    const PluckerPtr& G = w.grass;
    PluckerPtr Gd = plucker_ring(G->n - G->a - 1, G->n);
    std::vector<Poly> images;
    for (const auto& I : G->subsets) {
        std::vector<int> c = complement_of(I, G->n);
        int idx = -1;
        for (size_t t = 0; t < Gd->subsets.size(); ++t)
            if (Gd->subsets[t] == c) {
                idx = static_cast<int>(t);
                break;
            }
        Poly v = Poly::variable(Gd->ring, idx);
        if (shuffle_sign(I, c) < 0) v = -v;
        images.push_back(std::move(v));
    }
    Poly moved = apply_map(RingMap{G->ring, Gd->ring, std::move(images)}, w.rep);
    return make_plucker_element(Gd, moved);
}

Poly from_plucker_to_stiefel(const PluckerElement& w) {
    const PluckerPtr& G = w.grass;
    const int rows = G->a + 1;
    RingPtr S = matrix_ring("x", rows, G->n + 1);
    std::vector<int> ridx(rows);
    for (int i = 0; i < rows; ++i) ridx[i] = i;
    std::vector<Poly> images;
    for (const auto& I : G->subsets)
        images.push_back(var_matrix_minor(S, G->n + 1, ridx, I));
    return canonical_scale(
        apply_map(RingMap{G->ring, S, std::move(images)}, w.rep));
}

CayleyTrickResult cayley_trick(const Ideal& I) {
    RingPtr R = I.ring();
    require_rationals(R, "cayley_trick");
    const int n = R->nvars() - 1;
    ChowFormResult cf = chow_form(I);
    const int k = cf.source_dim;
    Poly xres = from_plucker_to_stiefel(dualize(cf.element));
    RingPtr M = xres.ring();  // QQ[x[i,j]] = P(Mat(k+1, n+1))

    // Segre product P^k x X inside the same matrix space
    std::vector<std::string> tvars;
    for (int i = 0; i <= k; ++i) tvars.push_back("s" + std::to_string(i));
    for (const auto& v : R->vars()) tvars.push_back(v);
    RingPtr T = RingCtx::make(std::move(tvars), CoeffDomain::rationals(),
                              MonomialOrder::grevlex());
    std::vector<Poly> images;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= n; ++j)
            images.push_back(Poly::variable(T, i) *
                             Poly::variable(T, k + 1 + j));
    std::vector<Poly> rels;
    for (const auto& g : I.gens()) rels.push_back(map_ring(g, T));
    Ideal segre = kernel(RingMap{M, T, std::move(images)}, rels);
    return CayleyTrickResult{std::move(segre), Ideal(M, {xres})};
}

namespace {

// interreduce: replace each generator by its division remainder against the
// ones already kept (smallest degree / fewest terms first); the ideal is
// unchanged and redundant generators drop to zero
std::vector<Poly> prune_generators(std::vector<Poly> v) {
    if (v.empty()) return v;
    std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) {
        if (a.total_degree() != b.total_degree())
            return a.total_degree() < b.total_degree();
        return a.nterms() < b.nterms();
    });
    GroebnerBasis kept{v.front().ring(), {}};
    for (auto& p : v) {
        Poly r = normal_form(p, kept);
        if (!r.is_zero()) kept.gens.push_back(canonical_scale(r));
    }
    return kept.gens;
}

}  // namespace

Ideal dual_variety(const Ideal& I) {
    RingPtr R = I.ring();
    require_rationals(R, "dual_variety");
    const int n = R->nvars() - 1;
    const int c = n + 1 - krull_dim(I);
    if (c < 1)
        fail(ErrCode::DimMismatch, "dual_variety: input fills the space");
    if (I.gens().empty())
        fail(ErrCode::BadArgument, "dual_variety: empty ideal");
    // a smaller generating set keeps the stacked-minor count down
    std::vector<Poly> gens = prune_generators(I.gens());

    const int g = static_cast<int>(gens.size());
    std::vector<std::vector<Poly>> jx(g, std::vector<Poly>(n + 1, Poly::zero(R)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= n; ++j) jx[i][j] = derivative(gens[i], j);

    // the raw stacked-minor ideal only acquires junk components over the
    // rank-deficient locus of the Jacobian, which lies inside the zero set of
    // every c x c minor; since X is irreducible, saturating by one minor that
    // is nonzero on X removes exactly that junk
    std::vector<Poly> sing = prune_generators(poly_minors(jx, c));
    if (sing.empty())
        fail(ErrCode::BadArgument, "dual_variety: degenerate Jacobian");
    Poly witness = Poly::zero(R);
    for (const auto& m : sing)
        if (!normal_form(m, I.gb()).is_zero()) {
            witness = m;
            break;
        }
    if (witness.is_zero())
        fail(ErrCode::BadArgument,
             "dual_variety: Jacobian is rank-deficient on all of X");

    std::vector<std::string> vars = R->vars();
    std::vector<std::string> ynames;
    for (int j = 0; j <= n; ++j) {
        std::string nm = "y" + std::to_string(j);
        if (R->var_index(nm)) nm = "Y" + std::to_string(j);
        ynames.push_back(nm);
        vars.push_back(ynames.back());
    }
    RingPtr B = RingCtx::make(vars, CoeffDomain::rationals(),
                              MonomialOrder::grevlex());

    std::vector<std::vector<Poly>> jac(g, std::vector<Poly>(n + 1, Poly::zero(B)));
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= n; ++j) jac[i][j] = map_ring(jx[i][j], B);

    // stacked minors avoiding the y row are c+1 minors of the Jacobian, which
    // vanish on V(I) (rank <= codim for prime I) and so add nothing; keep only
    // the minors through the y row
    std::vector<Poly> minors;
    for (const auto& ri : subsets_lex(g, c)) {
        for (const auto& ci : subsets_lex(n + 1, c + 1)) {
            std::vector<std::vector<Poly>> sub(
                c + 1, std::vector<Poly>(c + 1, Poly::zero(B)));
            for (int i = 0; i < c; ++i)
                for (int j = 0; j <= c; ++j) sub[i][j] = jac[ri[i]][ci[j]];
            for (int j = 0; j <= c; ++j)
                sub[c][j] = Poly::variable(B, n + 1 + ci[j]);
            Poly d = poly_det(sub);
            if (!d.is_zero()) minors.push_back(std::move(d));
        }
    }

    std::vector<Poly> big;
    for (const auto& p : gens) big.push_back(map_ring(p, B));
    for (auto& m : prune_generators(std::move(minors)))
        big.push_back(std::move(m));

    Ideal conormal(B, std::move(big));
    conormal = saturate(conormal, Ideal(B, {map_ring(witness, B)}));

    std::vector<int> drop;
    for (int j = 0; j <= n; ++j) drop.push_back(j);
    Ideal E = eliminate(conormal, drop);
    // present in a clean y-ring
    RingPtr Y = RingCtx::make(ynames, CoeffDomain::rationals(),
                              MonomialOrder::grevlex());
    std::vector<Poly> out;
    for (const auto& p : E.gens()) out.push_back(canonical_scale(map_ring(p, Y)));
    return Ideal(Y, std::move(out));
}

}  // namespace eliminant
