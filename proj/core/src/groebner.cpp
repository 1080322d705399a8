#include <functional>
#include "eliminant/groebner.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace eliminant {

namespace {

void require_field(const RingPtr& ring, const char* what) {
    if (!ring->domain()->is_field())
        fail(ErrCode::NonFieldCoefficients,
             std::string(what) + ": needs field coefficients (QQ or GF(p))");
}

// scale to a canonical representative: primitive integer over QQ (positive
// leading coefficient), monic over GF(p)
Poly gb_normalize(const Poly& p) {
    if (p.is_zero()) return p;
    if (p.ring()->domain()->kind() == DomainKind::Rationals)
        return primitive_part(p);
    return monic(p);
}

Poly drop_leading(const Poly& p) {
    std::vector<Poly::Term> ts(p.terms().begin() + 1, p.terms().end());
    return Poly::from_terms(p.ring(), std::move(ts));
}

// one reduction step: cancel the leading term of work against g
Poly reduce_step(const Poly& work, const Poly& g) {
    const auto& dom = *work.ring()->domain();
    Monomial shift = work.lm().div(g.lm());
    if (dom.kind() == DomainKind::Rationals) {
        // fraction-free: gcd-scaled integer combination
        const Int& a = work.lc().rat().get_num();
        const Int& b = g.lc().rat().get_num();
        Int gc;
        mpz_gcd(gc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        Coeff cw = dom.from_rat(Rat(b / gc));
        Coeff cg = dom.from_rat(Rat(a / gc));
        return poly_sub(poly_coeff_mul(work, cw), poly_mono_mul(g, shift, cg));
    }
    Coeff q = dom.exact_div(work.lc(), g.lc());
    return poly_sub(work, poly_mono_mul(g, shift, q));
}

// reduce until the leading monomial is irreducible; keeps the canonical
// scaling of gb_normalize
Poly top_reduce(Poly work, const std::vector<Poly>& basis,
                const std::vector<char>* redundant = nullptr) {
    bool dirty = false;
    while (!work.is_zero()) {
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (redundant && (*redundant)[k]) continue;
            if (basis[k].lm().divides(work.lm())) {
                work = reduce_step(work, basis[k]);
                reduced = true;
                dirty = true;
                break;
            }
        }
        if (!reduced) break;
    }
    if (dirty && !work.is_zero()) work = gb_normalize(work);
    return work;
}

// exact full reduction over the field
Poly full_reduce(const Poly& p, const std::vector<Poly>& basis) {
    const auto& dom = *p.ring()->domain();
    std::vector<Poly::Term> done;
    Poly work = p;
    while (!work.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.lm().divides(work.lm())) {
                Monomial shift = work.lm().div(g.lm());
                Coeff q = dom.exact_div(work.lc(), g.lc());
                work = poly_sub(work, poly_mono_mul(g, shift, q));
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            done.push_back(work.leading());
            work = drop_leading(work);
        }
    }
    return Poly::from_terms(p.ring(), std::move(done));
}

Poly spoly(const Poly& f, const Poly& g) {
    const auto& dom = *f.ring()->domain();
    Monomial l = f.lm().lcm(g.lm());
    if (dom.kind() == DomainKind::Rationals) {
        const Int& a = f.lc().rat().get_num();
        const Int& b = g.lc().rat().get_num();
        Int gc;
        mpz_gcd(gc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return poly_sub(
            poly_mono_mul(f, l.div(f.lm()), dom.from_rat(Rat(b / gc))),
            poly_mono_mul(g, l.div(g.lm()), dom.from_rat(Rat(a / gc))));
    }
    return poly_sub(
        poly_mono_mul(f, l.div(f.lm()), dom.inv(f.lc())),
        poly_mono_mul(g, l.div(g.lm()), dom.inv(g.lc())));
}

struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& input) {
    require_field(ring, "groebner_basis");
    std::vector<Poly> basis;
    std::vector<int> sugar;
    std::vector<char> redundant;
    for (const auto& g : input) {
        require_same_ring(g.ring(), ring, "groebner_basis");
        if (g.is_zero()) continue;
        basis.push_back(gb_normalize(g));
        sugar.push_back(g.total_degree());
        redundant.push_back(0);
    }

    // Gebauer-Moller pair update: all discards happen here, soundly, so the
    // main loop processes every surviving pair
    std::vector<Pair> pending;
    auto add_pairs_for = [&](int t) {
        const Monomial lt = basis[t].lm();
        // old pairs whose lcm is strictly covered by the new leading term
        std::vector<Pair> kept;
        kept.reserve(pending.size() + t);
        for (auto& p : pending) {
            if (lt.divides(p.lcm) && !(basis[p.i].lm().lcm(lt) == p.lcm) &&
                !(basis[p.j].lm().lcm(lt) == p.lcm))
                continue;
            kept.push_back(std::move(p));
        }
        pending.swap(kept);
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            Monomial l = basis[i].lm().lcm(lt);
            int s = std::max(sugar[i] + l.deg - basis[i].lm().deg,
                             sugar[t] + l.deg - lt.deg);
            cand.push_back({i, t, l, s});
        }
        // M: a pair whose lcm is properly divided by another new lcm is gone
        std::vector<char> drop(cand.size(), 0);
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = 0; b < cand.size() && !drop[a]; ++b)
                if (a != b && cand[b].lcm.divides(cand[a].lcm) &&
                    !(cand[b].lcm == cand[a].lcm))
                    drop[a] = 1;
        // F + B: one representative per lcm class, none at all when some
        // member has coprime leading terms
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            bool coprime = basis[cand[a].i].lm().coprime(lt);
            for (size_t b = a + 1; b < cand.size(); ++b) {
                if (drop[b] || !(cand[b].lcm == cand[a].lcm)) continue;
                drop[b] = 1;
                if (basis[cand[b].i].lm().coprime(lt)) coprime = true;
            }
            if (!coprime) pending.push_back(std::move(cand[a]));
        }
    };
    for (int t = 1; t < static_cast<int>(basis.size()); ++t) add_pairs_for(t);

    while (!pending.empty()) {
        // sugar selection: lowest sugar, then smallest lcm
        size_t best = 0;
        for (size_t k = 1; k < pending.size(); ++k) {
            const Pair& a = pending[k];
            const Pair& b = pending[best];
            if (a.sugar != b.sugar) {
                if (a.sugar < b.sugar) best = k;
                continue;
            }
            int c = ring->cmp(a.lcm, b.lcm);
            if (c < 0 || (c == 0 && std::tie(a.i, a.j) < std::tie(b.i, b.j)))
                best = k;
        }
        Pair pr = pending[best];
        pending.erase(pending.begin() + best);

        Poly r = top_reduce(spoly(basis[pr.i], basis[pr.j]), basis, &redundant);
        if (r.is_zero()) continue;
        int t = static_cast<int>(basis.size());
        for (int k = 0; k < t; ++k)
            if (!redundant[k] && r.lm().divides(basis[k].lm())) redundant[k] = 1;
        basis.push_back(std::move(r));
        sugar.push_back(pr.sugar);
        redundant.push_back(0);
        add_pairs_for(t);
    }

    // minimal generating set of the leading-term ideal
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (redundant[i]) continue;
        bool covered = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j || redundant[j]) continue;
            if (basis[j].lm().divides(basis[i].lm()) &&
                !(basis[j].lm() == basis[i].lm() && j > i)) {
                covered = true;
                break;
            }
        }
        if (!covered) minimal.push_back(basis[i]);
    }
    // tail-reduce each element against the current others until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Poly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Poly r = monic(full_reduce(minimal[i], others));
            if (!r.equal(minimal[i])) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
    }
    std::vector<Poly> reduced;
    for (auto& g : minimal)
        if (!g.is_zero()) reduced.push_back(std::move(g));
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
        return ring->cmp(a.lm(), b.lm()) < 0;
    });
    return GroebnerBasis{ring, std::move(reduced)};
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_) require_same_ring(g.ring(), ring_, "Ideal");
}

const GroebnerBasis& Ideal::gb() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (!cache_)
        cache_ = std::make_shared<GroebnerBasis>(buchberger(ring_, gens_));
    return *cache_;
}

std::vector<Poly> groebner_basis(const Ideal& I) { return I.gb().gens; }

Poly normal_form(const Poly& p, const GroebnerBasis& G) {
    require_same_ring(p.ring(), G.ring, "normal_form");
    return full_reduce(p, G.gens);
}

bool ideal_contains(const Ideal& I, const Poly& p) {
    return normal_form(map_ring(p, I.gb().ring), I.gb()).is_zero();
}

Poly apply_map(const RingMap& map, const Poly& p) {
    require_same_ring(p.ring(), map.source, "apply_map");
    std::map<int, Poly> images;
    for (int v = 0; v < map.source->nvars(); ++v)
        images.emplace(v, map.images[v]);
    return substitute(p, images, map.target);
}

Ideal eliminate(const Ideal& I, const std::vector<int>& drop) {
    require_field(I.ring(), "eliminate");
    if (drop.empty()) return Ideal(I.ring(), I.gb().gens);
    const auto& ring = *I.ring();
    std::vector<char> dropped(ring.nvars(), 0);
    for (int v : drop) {
        if (v < 0 || v >= ring.nvars())
            fail(ErrCode::UnknownVariable, "eliminate: bad variable index");
        dropped[v] = 1;
    }
    std::vector<std::string> vars;
    for (int v = 0; v < ring.nvars(); ++v)
        if (dropped[v]) vars.push_back(ring.var_name(v));
    int split = static_cast<int>(vars.size());
    for (int v = 0; v < ring.nvars(); ++v)
        if (!dropped[v]) vars.push_back(ring.var_name(v));

    RingPtr elim_ring =
        RingCtx::make(vars, ring.domain(), MonomialOrder::block(split));
    std::vector<Poly> gens;
    for (const auto& g : I.gens()) gens.push_back(map_ring(g, elim_ring));
    GroebnerBasis gb = buchberger(elim_ring, gens);

    std::vector<std::string> kept(vars.begin() + split, vars.end());
    RingPtr out_ring = RingCtx::make(kept, ring.domain());
    std::vector<Poly> out;
    for (const auto& g : gb.gens) {
        bool free = true;
        for (const auto& [m, c] : g.terms())
            for (int v = 0; v < split && free; ++v)
                if (m.e[v]) free = false;
        if (free) out.push_back(map_ring(g, out_ring));
    }
    return Ideal(out_ring, std::move(out));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!I.ring()->same_as(*J.ring())) {
        // tolerate same variables/domain under a different order
        if (I.ring()->vars() != J.ring()->vars() ||
            !I.ring()->domain()->same_as(*J.ring()->domain()))
            fail(ErrCode::RingMismatch, "ideal_equal: different rings");
    }
    const GroebnerBasis& gi = I.gb();
    std::vector<Poly> jg;
    for (const auto& g : J.gens()) jg.push_back(map_ring(g, I.ring()));
    GroebnerBasis gj = buchberger(I.ring(), jg);
    if (gi.gens.size() != gj.gens.size()) return false;
    for (size_t k = 0; k < gi.gens.size(); ++k)
        if (!gi.gens[k].equal(gj.gens[k])) return false;
    return true;
}

namespace {

Ideal saturate_single(const Ideal& I, const Poly& g) {
    const auto& ring = *I.ring();
    if (g.is_constant() && !g.is_zero()) return Ideal(I.ring(), I.gens());
    std::string fresh = "_sat";
    while (ring.var_index(fresh)) fresh += "_";
    std::vector<std::string> vars;
    vars.push_back(fresh);
    for (const auto& v : ring.vars()) vars.push_back(v);
    RingPtr ext = RingCtx::make(vars, ring.domain(), MonomialOrder::block(1));
    std::vector<Poly> gens;
    for (const auto& f : I.gens()) gens.push_back(map_ring(f, ext));
    Poly y = Poly::variable(ext, 0);
    Poly onep = Poly::constant(ext, ext->domain()->one());
    gens.push_back(poly_sub(onep, poly_mul(y, map_ring(g, ext))));
    GroebnerBasis gb = buchberger(ext, gens);
    std::vector<Poly> out;
    for (const auto& f : gb.gens) {
        bool free = true;
        for (const auto& [m, c] : f.terms())
            if (m.e[0]) free = false;
        if (free) out.push_back(map_ring(f, I.ring()));
    }
    return Ideal(I.ring(), std::move(out));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
    require_field(I.ring(), "intersect");
    const auto& ring = *I.ring();
    std::string fresh = "_cap";
    while (ring.var_index(fresh)) fresh += "_";
    std::vector<std::string> vars;
    vars.push_back(fresh);
    for (const auto& v : ring.vars()) vars.push_back(v);
    RingPtr ext = RingCtx::make(vars, ring.domain(), MonomialOrder::block(1));
    Poly t = Poly::variable(ext, 0);
    Poly onemt = poly_sub(Poly::constant(ext, ext->domain()->one()), t);
    std::vector<Poly> gens;
    for (const auto& f : I.gens()) gens.push_back(poly_mul(t, map_ring(f, ext)));
    for (const auto& f : J.gens())
        gens.push_back(poly_mul(onemt, map_ring(f, ext)));
    GroebnerBasis gb = buchberger(ext, gens);
    std::vector<Poly> out;
    for (const auto& f : gb.gens) {
        bool free = true;
        for (const auto& [m, c] : f.terms())
            if (m.e[0]) free = false;
        if (free) out.push_back(map_ring(f, I.ring()));
    }
    return Ideal(I.ring(), std::move(out));
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    require_field(I.ring(), "saturate");
    if (J.gens().empty()) return Ideal(I.ring(), I.gens());
    std::optional<Ideal> acc;
    for (const auto& g : J.gens()) {
        Ideal part = saturate_single(I, map_ring(g, I.ring()));
        acc = acc ? intersect(*acc, part) : std::move(part);
    }
    return *acc;
}

Ideal kernel(const RingMap& map, const std::vector<Poly>& target_relations) {
    require_field(map.source, "kernel");
    if (map.images.size() != static_cast<size_t>(map.source->nvars()))
        fail(ErrCode::BadArgument, "kernel: image count mismatch");
    const auto& src = *map.source;
    const auto& tgt = *map.target;
    std::vector<std::string> vars = tgt.vars();
    for (const auto& v : src.vars()) vars.push_back(v);
    RingPtr graph = RingCtx::make(vars, src.domain());
    std::vector<Poly> gens;
    for (int v = 0; v < src.nvars(); ++v) {
        Poly lhs = Poly::variable(graph, tgt.nvars() + v);
        gens.push_back(poly_sub(lhs, map_ring(map.images[v], graph)));
    }
    for (const auto& q : target_relations) gens.push_back(map_ring(q, graph));
    std::vector<int> drop(tgt.nvars());
    for (int v = 0; v < tgt.nvars(); ++v) drop[v] = v;
    Ideal elim = eliminate(Ideal(graph, std::move(gens)), drop);
    std::vector<Poly> out;
    for (const auto& f : elim.gens()) out.push_back(map_ring(f, map.source));
    return Ideal(map.source, std::move(out));
}

int krull_dim(const Ideal& I) {
    require_field(I.ring(), "krull_dim");
    const int n = I.ring()->nvars();
    // supports of the leading terms
    std::vector<std::vector<int>> supports;
    for (const auto& g : I.gb().gens) {
        if (g.is_constant()) return -1;  // unit ideal
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (g.lm().e[v]) s.push_back(v);
        supports.push_back(std::move(s));
    }
    // dim = n - (minimum hitting set of the supports)
    int best = n;
    std::vector<char> hit(n, 0);
    std::function<void(size_t, int)> dfs = [&](size_t idx, int used) {
        if (used >= best) return;
        while (idx < supports.size()) {
            bool covered = false;
            for (int v : supports[idx])
                if (hit[v]) {
                    covered = true;
                    break;
                }
            if (!covered) break;
            ++idx;
        }
        if (idx == supports.size()) {
            best = used;
            return;
        }
        for (int v : supports[idx]) {
            hit[v] = 1;
            dfs(idx + 1, used + 1);
            hit[v] = 0;
        }
    };
    dfs(0, 0);
    return n - best;
}

}  // namespace eliminant
