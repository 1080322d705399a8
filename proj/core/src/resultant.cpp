#include "eliminant/resultant.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "eliminant/interp.hpp"

namespace eliminant {

namespace {

constexpr int kMaxCoordinateChanges = 5;

Int degree_product(const std::vector<int>& d, int skip = -1) {
    Int prod = 1;
    for (size_t i = 0; i < d.size(); ++i)
        if (static_cast<int>(i) != skip) prod *= d[i];
    return prod;
}

bool any_zero(const std::vector<Poly>& F) {
    for (const auto& p : F)
        if (p.is_zero()) return true;
    return false;
}

// random unimodular change expressed over the system's own domain
std::vector<Poly> change_coordinates(const std::vector<Poly>& F,
                                     std::mt19937_64& rng, int amplitude) {
    const int n = F[0].ring()->nvars();
    return linear_change(F, random_unimodular(n, rng, amplitude));
}

// substitute x_{last} -> value and drop the variable
std::vector<Poly> drop_last(const std::vector<Poly>& F, int count,
                            const Rat& value) {
    RingPtr ring = F[0].ring();
    const int n = ring->nvars() - 1;
    std::vector<std::string> vars(ring->vars().begin(),
                                  ring->vars().end() - 1);
    RingPtr small = RingCtx::make(std::move(vars), ring->domain(),
                                  MonomialOrder::grevlex());
    std::map<int, Poly> image;
    image.emplace(n, Poly::constant(small, small->domain()->from_rat(value)));
    std::vector<Poly> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back(substitute(F[i], image, small));
    return out;
}

// Poisson recursion over a field; nullopt signals a genericity failure
// (vanishing inner resultant or a non-finite quotient).
std::optional<Coeff> poisson_rec(const std::vector<Poly>& F,
                                 const std::vector<int>& d,
                                 PoissonBreakdown* top) {
    RingPtr ring = F[0].ring();
    const auto& dom = ring->domain();
    const int m = ring->nvars();
    if (m == 1) {
        return F[0].coeff_of(Monomial::var(0, 1, d[0]));
    }
    const int n = m - 1;
    std::vector<int> dbar(d.begin(), d.end() - 1);
    std::vector<Poly> Fbar = drop_last(F, n, Rat(0));
    auto inner = poisson_rec(Fbar, dbar, nullptr);
    if (!inner || dom->is_zero(*inner)) return std::nullopt;

    std::vector<Poly> f = drop_last(F, m, Rat(1));
    const Int bez = degree_product(dbar);
    Coeff det_val = dom->one();
    int dim = 0;
    if (f[n].is_constant()) {
        // Thm 1.5 pins dim A = d_0...d_{n-1} once the inner resultant is
        // nonzero, so multiplication by a constant has determinant c^dim.
        Coeff c = f[n].is_zero() ? dom->zero() : f[n].lc();
        if (!bez.fits_ulong_p()) fail(ErrCode::BadArgument, "Bezout count overflow");
        det_val = dom->pow(c, bez.get_ui());
        dim = static_cast<int>(bez.get_ui());
    } else {
        if (!bez.fits_sint_p()) fail(ErrCode::BadArgument, "Bezout count overflow");
        auto A = quotient_basis(std::vector<Poly>(f.begin(), f.end() - 1),
                                static_cast<int>(bez.get_si()));
        if (!A) return std::nullopt;
        det_val = det(mult_matrix(f[n], *A));
        dim = A->dim;
    }
    Coeff res = dom->mul(dom->pow(*inner, static_cast<unsigned long>(d[n])),
                         det_val);
    if (top) {
        top->inner_resultant = *inner;
        top->inner_exponent = d[n];
        top->mult_det = det_val;
        top->quotient_dim = dim;
    }
    return res;
}

// lift a ZZ system into QQ so the recursion runs over a field
std::vector<Poly> over_fraction_field(const std::vector<Poly>& F,
                                      RingPtr* out_ring) {
    RingPtr ring = F[0].ring();
    DomainPtr ff = ring->domain()->fraction_field();
    if (ff->same_as(*ring->domain())) {
        *out_ring = ring;
        return F;
    }
    RingPtr qr = RingCtx::make(ring->vars(), ff, ring->order());
    std::vector<Poly> out;
    out.reserve(F.size());
    for (const auto& p : F) {
        PolyBuilder b(qr);
        for (const auto& [mono, c] : p.terms()) b.add_term(mono, c);
        out.push_back(b.build());
    }
    *out_ring = qr;
    return out;
}

Coeff back_to_domain(const Coeff& value, const DomainPtr& field,
                     const DomainPtr& dom) {
    if (dom->same_as(*field)) return value;
    if (dom->kind() == DomainKind::Integers) {
        const Rat& q = value.rat();
        if (q.get_den() != 1)
            fail(ErrCode::DomainError, "resultant: non-integral value over ZZ");
        return dom->from_rat(q);
    }
    return dom->from_rat(value.rat());
}

struct ScalarPoisson {
    std::optional<Coeff> value;  // in the original domain
    int coordinate_changes = 0;
    bool certified_zero = false;
    std::optional<PoissonBreakdown> breakdown;
};

// retry loop + exact zero certificate; nullopt value = genericity unreachable
ScalarPoisson poisson_with_retries(const HomSystem& sys, std::mt19937_64& rng) {
    ScalarPoisson out;
    const DomainPtr& dom = sys.ring->domain();
    if (any_zero(sys.polys)) {
        // a vanishing form leaves n forms in P^n: a common zero always exists
        out.value = dom->zero();
        return out;
    }
    RingPtr field_ring;
    std::vector<Poly> F = over_fraction_field(sys.polys, &field_ring);
    for (int attempt = 0; attempt <= kMaxCoordinateChanges; ++attempt) {
        std::vector<Poly> Fa = F;
        if (attempt > 0) {
            Fa = change_coordinates(F, rng, attempt);
            ++out.coordinate_changes;
        }
        PoissonBreakdown bd;
        auto r = poisson_rec(Fa, sys.degrees, &bd);
        if (r) {
            out.value = back_to_domain(*r, field_ring->domain(), dom);
            out.breakdown = bd;
            return out;
        }
    }
    // Every attempt saw a vanishing inner resultant. Certify: the forms have
    // a nontrivial common zero iff the affine cone has dimension >= 1, and
    // then the resultant is exactly zero.
    if (krull_dim(Ideal(field_ring, F)) >= 1) {
        out.value = dom->zero();
        out.certified_zero = true;
    }
    return out;
}

std::vector<Monomial> monomials_of_degree(int nvars, int deg,
                                          const RingPtr& ring) {
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nvars - 1) {
            e[pos] = left;
            out.push_back(Monomial::of(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, deg);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return ring->cmp(a, b) > 0;
    });
    return out;
}

struct MacaulayRun {
    std::optional<Coeff> value;
    int coordinate_changes = 0;
};

MacaulayRun macaulay_with_retries(const HomSystem& sys, std::mt19937_64& rng) {
    MacaulayRun out;
    const DomainPtr& dom = sys.ring->domain();
    // an identically zero form meets the other n forms in P^n always
    for (const auto& f : sys.polys)
        if (f.is_zero()) {
            out.value = dom->zero();
            return out;
        }
    for (int attempt = 0; attempt <= kMaxCoordinateChanges; ++attempt) {
        HomSystem cur = sys;
        if (attempt > 0) {
            cur.polys = change_coordinates(sys.polys, rng, attempt);
            ++out.coordinate_changes;
        }
        MacaulayMatrices M = macaulay_matrices(cur);
        Coeff dp = det(M.Dp);
        if (dom->is_zero(dp)) continue;
        Coeff dd = det(M.D);
        // Macaulay's identity det D = Res * det D' specializes exactly
        out.value = dom->exact_div(dd, dp);
        return out;
    }
    return out;
}

int max_param_degree(const std::vector<Poly>& F, int which, int param) {
    int best = 0;
    for (const auto& [mono, c] : F[which].terms())
        best = std::max(best, pp_degree_in(c.param(), param));
    return best;
}

}  // namespace

HomSystem make_hom_system(const std::vector<Poly>& polys,
                          const std::vector<int>& explicit_degrees) {
    if (polys.empty()) fail(ErrCode::DimMismatch, "resultant: empty system");
    RingPtr ring = polys[0].ring();
    for (const auto& p : polys) require_same_ring(p.ring(), ring, "resultant");
    if (static_cast<int>(polys.size()) != ring->nvars())
        fail(ErrCode::DimMismatch,
             "resultant: need exactly n+1 forms in n+1 variables (got " +
                 std::to_string(polys.size()) + " forms, " +
                 std::to_string(ring->nvars()) + " variables)");
    if (!explicit_degrees.empty() &&
        explicit_degrees.size() != polys.size())
        fail(ErrCode::DimMismatch, "resultant: degree list size mismatch");
    HomSystem sys{ring, polys, {}};
    for (size_t i = 0; i < polys.size(); ++i) {
        Homogeneity h = homogeneity(polys[i]);
        if (h.tag == HomTag::No)
            fail(ErrCode::NotHomogeneous,
                 "resultant: input " + std::to_string(i) + " is not homogeneous");
        int d;
        if (h.tag == HomTag::Any) {
            if (explicit_degrees.empty())
                fail(ErrCode::BadArgument,
                     "resultant: zero polynomial needs an explicit degree");
            d = explicit_degrees[i];
        } else {
            d = h.degree;
            if (!explicit_degrees.empty() && explicit_degrees[i] != d)
                fail(ErrCode::BadArgument,
                     "resultant: declared degree disagrees with input " +
                         std::to_string(i));
        }
        if (d < 1)
            fail(ErrCode::BadArgument, "resultant: degrees must be positive");
        sys.degrees.push_back(d);
    }
    return sys;
}

std::optional<QuotientAlgebra> quotient_basis(const std::vector<Poly>& fs,
                                              int expected_dim) {
    if (fs.empty()) fail(ErrCode::BadArgument, "quotient_basis: empty system");
    RingPtr ring = fs[0].ring();
    if (!ring->domain()->is_field())
        fail(ErrCode::NonFieldCoefficients, "quotient_basis: needs a field");
    GroebnerBasis gb = buchberger(ring, fs);
    const int n = ring->nvars();
    // finite dimension <=> each variable has a pure power among the leading
    // monomials; those powers bound the standard-monomial box
    std::vector<int> bound(n, -1);
    for (const auto& g : gb.gens) {
        const Monomial& lm = g.lm();
        int support = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (lm.e[i] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = i;
        }
        if (lm.deg == 0) return std::nullopt;  // unit ideal
        if (pure && support >= 0)
            bound[support] = bound[support] < 0
                                 ? lm.e[support]
                                 : std::min(bound[support], lm.e[support]);
    }
    for (int i = 0; i < n; ++i)
        if (bound[i] < 0) return std::nullopt;

    std::vector<Monomial> basis;
    std::vector<int> e(n, 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            Monomial m = Monomial::of(e);
            for (const auto& g : gb.gens)
                if (g.lm().divides(m)) return;
            basis.push_back(m);
            return;
        }
        for (int k = 0; k < bound[pos]; ++k) {
            e[pos] = k;
            rec(pos + 1);
        }
        e[pos] = 0;
    };
    rec(0);
    if (expected_dim >= 0 && static_cast<int>(basis.size()) != expected_dim)
        return std::nullopt;
    std::sort(basis.begin(), basis.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return ring->cmp(a, b) < 0;
              });
    const int dim = static_cast<int>(basis.size());
    return QuotientAlgebra{ring, std::move(gb), std::move(basis), dim};
}

ExactMatrix mult_matrix(const Poly& f, const QuotientAlgebra& A) {
    require_same_ring(f.ring(), A.ring, "mult_matrix");
    const int dim = A.dim;
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < dim; ++i) index.emplace(A.basis[i].e, i);
    ExactMatrix M(dim, dim, A.ring->domain());
    for (int j = 0; j < dim; ++j) {
        Poly img = normal_form(
            poly_mono_mul(f, A.basis[j], A.ring->domain()->one()), A.gb);
        for (const auto& [mono, c] : img.terms()) {
            auto it = index.find(mono.e);
            if (it == index.end())
                fail(ErrCode::DomainError, "mult_matrix: non-standard monomial");
            M.at(it->second, j) = c;
        }
    }
    return M;
}

MacaulayMatrices macaulay_matrices(const HomSystem& sys) {
    RingPtr ring = sys.ring;
    const auto& dom = ring->domain();
    const int m = ring->nvars();
    int delta = -(m - 1);
    for (int d : sys.degrees) delta += d;
    if (delta < 0) fail(ErrCode::BadArgument, "macaulay: negative delta");
    std::vector<Monomial> cols = monomials_of_degree(m, delta, ring);
    const int N = static_cast<int>(cols.size());
    std::map<std::vector<int>, int> index;
    for (int c = 0; c < N; ++c) index.emplace(cols[c].e, c);

    std::vector<int> row_poly(N);
    std::vector<char> reduced(N);
    ExactMatrix D(N, N, dom);
    for (int r = 0; r < N; ++r) {
        const Monomial& alpha = cols[r];
        int owner = -1, hits = 0;
        for (int i = 0; i < m; ++i) {
            if (alpha.e[i] >= sys.degrees[i]) {
                ++hits;
                if (owner < 0) owner = i;
            }
        }
        row_poly[r] = owner;
        reduced[r] = (hits == 1);
        Monomial shift = alpha;
        shift.e[owner] -= sys.degrees[owner];
        shift.deg -= sys.degrees[owner];
        for (const auto& [mono, c] : sys.polys[owner].terms()) {
            int col = index.at(shift.mul(mono).e);
            D.at(r, col) = dom->add(D.at(r, col), c);
        }
    }

    std::vector<int> keep;
    for (int r = 0; r < N; ++r)
        if (!reduced[r]) keep.push_back(r);
    ExactMatrix Dp(static_cast<int>(keep.size()), static_cast<int>(keep.size()),
                   dom);
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j)
            Dp.at(static_cast<int>(i), static_cast<int>(j)) =
                D.at(keep[i], keep[j]);
    return MacaulayMatrices{std::move(D), std::move(Dp), std::move(cols),
                            std::move(row_poly), std::move(reduced)};
}

ResultantOutcome poisson_resultant(const HomSystem& sys, std::uint64_t seed) {
    if (sys.ring->domain()->kind() == DomainKind::PolynomialDomain)
        fail(ErrCode::BadArgument,
             "poisson: parameter coefficients need --algorithm interpolate");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    ScalarPoisson run = poisson_with_retries(sys, rng);
    if (run.value)
        return ResultantOutcome{*run.value, "poisson", run.coordinate_changes,
                                seed, run.breakdown};
    // genericity unreachable and no zero certificate: Macaulay closes it out
    MacaulayRun mac = macaulay_with_retries(sys, rng);
    if (!mac.value)
        fail(ErrCode::GenericityFailed,
             "resultant: genericity unreachable after " +
                 std::to_string(run.coordinate_changes) +
                 " coordinate changes and Macaulay denominator zero after " +
                 std::to_string(mac.coordinate_changes) + " more");
    return ResultantOutcome{*mac.value, "macaulay",
                            run.coordinate_changes + mac.coordinate_changes,
                            seed, std::nullopt};
}

ResultantOutcome macaulay_resultant(const HomSystem& sys, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ull);
    MacaulayRun mac = macaulay_with_retries(sys, rng);
    if (!mac.value)
        fail(ErrCode::ZeroDenominator,
             "macaulay: det D' = 0 after " +
                 std::to_string(mac.coordinate_changes) +
                 " coordinate changes; try poisson or interpolate");
    return ResultantOutcome{*mac.value, "macaulay", mac.coordinate_changes,
                            seed, std::nullopt};
}

namespace {

// scalar-coefficient dispatch shared by interpolation evaluations
Coeff scalar_resultant_value(const HomSystem& sys, std::uint64_t seed) {
    return poisson_resultant(sys, seed).value;
}

struct InterpPlan {
    std::vector<int> bounds;       // per-parameter degree bound
    std::optional<int> hom_degree; // total degree when parameter-homogeneous
};

InterpPlan interpolation_plan(const HomSystem& sys) {
    InterpPlan plan;
    const auto& dom = sys.ring->domain();
    const int m = dom->nparams();
    plan.bounds.assign(m, 0);
    bool homogeneous = true;
    Int hom_total = 0;
    const int k = static_cast<int>(sys.polys.size());
    for (int i = 0; i < k; ++i) {
        Int weight = degree_product(sys.degrees, i);
        for (int j = 0; j < m; ++j) {
            Int b = plan.bounds[j] + weight * max_param_degree(sys.polys, i, j);
            // bounds stay desk-scale; guard anyway
            if (!b.fits_sint_p())
                fail(ErrCode::BadArgument, "interpolate: degree bound overflow");
            plan.bounds[j] = std::max(plan.bounds[j],
                                      static_cast<int>(b.get_si()));
        }
        std::optional<int> ei;
        for (const auto& [mono, c] : sys.polys[i].terms()) {
            auto h = pp_homogeneous_degree(c.param());
            if (!h || (ei && *ei != *h)) { homogeneous = false; break; }
            ei = *h;
        }
        if (homogeneous) hom_total += weight * (ei ? *ei : 0);
    }
    if (homogeneous && m >= 2 && hom_total.fits_sint_p())
        plan.hom_degree = static_cast<int>(hom_total.get_si());
    return plan;
}

// fix bound[j] after specializing the last parameter to 1: degrees can reach
// the full homogeneous total
std::vector<int> dehomogenized_bounds(const InterpPlan& plan) {
    std::vector<int> b(plan.bounds.begin(), plan.bounds.end() - 1);
    for (auto& x : b) x = std::min(std::max(x, 0), *plan.hom_degree);
    return b;
}

std::vector<Rat> grid_offsets(int m, std::uint64_t seed, int regrid_shift) {
    std::mt19937_64 rng(seed ^ 0xa0761d6478bd642full);
    std::vector<Rat> off(m);
    for (int j = 0; j < m; ++j)
        off[j] = Rat(2 + static_cast<long>(rng() % 5) + regrid_shift);
    return off;
}

}  // namespace

ResultantOutcome interpolate_resultant(const HomSystem& sys,
                                       std::uint64_t seed, int threads) {
    const auto& dom = sys.ring->domain();
    if (dom->kind() != DomainKind::PolynomialDomain) {
        // no parameters: a single evaluation is the whole reconstruction
        Coeff v = scalar_resultant_value(sys, seed);
        return ResultantOutcome{v, "interpolate", 0, seed, std::nullopt};
    }
    const int m = dom->nparams();
    const DomainPtr base = dom->base();
    RingPtr scalar_ring =
        RingCtx::make(sys.ring->vars(), base->fraction_field(), sys.ring->order());

    auto eval = [&](const std::vector<Rat>& point, std::uint64_t tag) -> Rat {
        std::vector<Poly> Fs;
        Fs.reserve(sys.polys.size());
        for (const auto& p : sys.polys)
            Fs.push_back(specialize_params(p, point, scalar_ring));
        HomSystem s{scalar_ring, std::move(Fs), sys.degrees};
        return scalar_resultant_value(s, seed * 0x100000001b3ull + tag).rat();
    };

    InterpPlan plan = interpolation_plan(sys);
    const int nthreads = std::max(1, threads);

    auto parallel_eval = [&](const std::vector<std::vector<Rat>>& points)
        -> std::vector<Rat> {
        std::vector<Rat> vals(points.size());
        if (nthreads == 1 || points.size() < 2) {
            for (size_t i = 0; i < points.size(); ++i)
                vals[i] = eval(points[i], i);
            return vals;
        }
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                vals[i] = eval(points[i], i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        return vals;
    };

    auto reconstruct = [&](int regrid_shift) -> ParamPoly {
        std::vector<Rat> off = grid_offsets(m, seed, regrid_shift);
        if (plan.hom_degree) {
            // parameter-homogeneous: interpolate the slice t_m = 1 and
            // rehomogenize, turning a full grid into one axis fewer
            const int E = *plan.hom_degree;
            std::vector<int> b = dehomogenized_bounds(plan);
            std::vector<std::vector<int>> idx;
            std::vector<int> cur(m - 1, 0);
            std::function<void(int)> gen = [&](int pos) {
                if (pos == m - 1) { idx.push_back(cur); return; }
                for (int k = 0; k <= b[pos]; ++k) { cur[pos] = k; gen(pos + 1); }
            };
            gen(0);
            std::vector<std::vector<Rat>> pts;
            pts.reserve(idx.size());
            for (const auto& iv : idx) {
                std::vector<Rat> p(m, Rat(1));
                for (int j = 0; j < m - 1; ++j) p[j] = off[j] + iv[j];
                pts.push_back(std::move(p));
            }
            std::vector<Rat> vals = parallel_eval(pts);
            std::map<std::vector<int>, Rat> memo;
            for (size_t i = 0; i < idx.size(); ++i) memo.emplace(idx[i], vals[i]);
            auto f = [&](const std::vector<Rat>& point) -> Rat {
                std::vector<int> iv(m - 1);
                for (int j = 0; j < m - 1; ++j) {
                    Rat diff = point[j] - off[j];
                    iv[j] = static_cast<int>(diff.get_num().get_si());
                }
                return memo.at(iv);
            };
            ParamPoly slice = interpolate_grid(f, b, off);
            // pad to m parameters and rehomogenize to total degree E
            ParamPoly out;
            for (const auto& [exps, c] : slice.terms) {
                std::vector<int> e(exps.begin(), exps.end());
                int total = 0;
                for (int x : e) total += x;
                if (total > E)
                    fail(ErrCode::DomainError, "interpolate: degree overshoot");
                e.push_back(E - total);
                out.terms.push_back({std::move(e), c});
            }
            ParamPoly norm = pp_const(Rat(0), m);
            for (auto& t : out.terms)
                norm = pp_add(norm, pp_mul(pp_const(t.second, m), [&] {
                                  ParamPoly mono = pp_const(Rat(1), m);
                                  for (int j = 0; j < m; ++j)
                                      mono = pp_mul(mono,
                                                    pp_pow(pp_var(j, m),
                                                           t.first[j], m));
                                  return mono;
                              }()));
            return norm;
        }
        // general dense grid with memoized parallel evaluation
        std::vector<std::vector<int>> idx;
        std::vector<int> cur(m, 0);
        std::function<void(int)> gen = [&](int pos) {
            if (pos == m) { idx.push_back(cur); return; }
            for (int k = 0; k <= plan.bounds[pos]; ++k) { cur[pos] = k; gen(pos + 1); }
        };
        gen(0);
        std::vector<std::vector<Rat>> pts;
        pts.reserve(idx.size());
        for (const auto& iv : idx) {
            std::vector<Rat> p(m);
            for (int j = 0; j < m; ++j) p[j] = off[j] + iv[j];
            pts.push_back(std::move(p));
        }
        std::vector<Rat> vals = parallel_eval(pts);
        std::map<std::vector<int>, Rat> memo;
        for (size_t i = 0; i < idx.size(); ++i) memo.emplace(idx[i], vals[i]);
        auto f = [&](const std::vector<Rat>& point) -> Rat {
            std::vector<int> iv(m);
            for (int j = 0; j < m; ++j)
                iv[j] = static_cast<int>(Rat(point[j] - off[j]).get_num().get_si());
            return memo.at(iv);
        };
        return interpolate_grid(f, plan.bounds, off);
    };

    int max_bound = 0;
    for (int b : plan.bounds) max_bound = std::max(max_bound, b);
    for (int attempt = 0; attempt < 2; ++attempt) {
        ParamPoly result = reconstruct(attempt * (max_bound + 9));
        // verify at one extra random point
        std::mt19937_64 vrng(seed ^ 0xe7037ed1a0b428dbull + attempt);
        std::vector<Rat> vp(m);
        for (int j = 0; j < m; ++j)
            vp[j] = Rat(static_cast<long>(vrng() % 97) + max_bound + 11);
        if (pp_eval(result, vp) != eval(vp, 0xfeedu + attempt)) continue;
        // land back in the declared domain (integrality over a ZZ base)
        if (base->kind() == DomainKind::Integers)
            for (const auto& t : result.terms)
                if (t.second.get_den() != 1)
                    fail(ErrCode::DomainError,
                         "interpolate: non-integral coefficient over ZZ");
        return ResultantOutcome{Coeff(result), "interpolate", 0, seed,
                                std::nullopt};
    }
    fail(ErrCode::GenericityFailed,
         "interpolate: verification point mismatch after regrid");
}

ResultantOutcome resultant(const HomSystem& sys, ResultantAlgorithm alg,
                           std::uint64_t seed, int threads) {
    const bool params =
        sys.ring->domain()->kind() == DomainKind::PolynomialDomain;
    switch (alg) {
        case ResultantAlgorithm::Poisson:
            return poisson_resultant(sys, seed);
        case ResultantAlgorithm::Macaulay:
            return macaulay_resultant(sys, seed);
        case ResultantAlgorithm::Interpolate:
            return interpolate_resultant(sys, seed, threads);
        case ResultantAlgorithm::Auto:
            return params ? interpolate_resultant(sys, seed, threads)
                          : poisson_resultant(sys, seed);
    }
    fail(ErrCode::BadArgument, "resultant: unknown algorithm");
}

ResultantOutcome discriminant(const Poly& F, int explicit_degree,
                              ResultantAlgorithm alg, std::uint64_t seed,
                              int threads) {
    RingPtr ring = F.ring();
    const auto& dom = ring->domain();
    const int n = ring->nvars() - 1;
    Homogeneity h = homogeneity(F);
    if (h.tag == HomTag::No)
        fail(ErrCode::NotHomogeneous, "discriminant: input not homogeneous");
    int d = h.tag == HomTag::Degree ? h.degree : explicit_degree;
    if (explicit_degree >= 0 && h.tag == HomTag::Degree &&
        explicit_degree != d)
        fail(ErrCode::BadArgument, "discriminant: degree mismatch");
    if (d < 2) fail(ErrCode::BadArgument, "discriminant: need degree >= 2");

    std::vector<Poly> partials;
    partials.reserve(n + 1);
    for (int i = 0; i <= n; ++i) partials.push_back(derivative(F, i));
    HomSystem sys = make_hom_system(partials, std::vector<int>(n + 1, d - 1));
    ResultantOutcome out = resultant(sys, alg, seed, threads);

    // c_{d,n} = d^e with e = ((-1)^{n+1} - (d-1)^{n+1}) / d, always integral
    Int top = ((n + 1) % 2 == 0 ? Int(1) : Int(-1)) - pow_int(Int(d - 1), n + 1);
    if (top % d != 0)
        fail(ErrCode::DomainError, "discriminant: non-integral scale exponent");
    Int e = top / d;
    if (e >= 0) {
        Coeff scale = dom->pow(dom->from_int(d), e.get_ui());
        out.value = dom->mul(out.value, scale);
    } else {
        Coeff scale = dom->pow(dom->from_int(d), Int(-e).get_ui());
        out.value = dom->exact_div(out.value, scale);
    }
    return out;
}

}  // namespace eliminant
