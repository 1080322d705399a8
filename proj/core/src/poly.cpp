#include "eliminant/poly.hpp"

#include <algorithm>
#include <sstream>

namespace eliminant {

namespace {

void normalize_terms(const RingCtx& ring, std::vector<Poly::Term>& ts) {
    std::sort(ts.begin(), ts.end(),
              [&](const Poly::Term& a, const Poly::Term& b) {
                  return ring.cmp(a.first, b.first) > 0;
              });
    const auto& dom = *ring.domain();
    std::vector<Poly::Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = dom.add(out.back().second, t.second);
        } else {
            out.push_back(std::move(t));
        }
    }
    ts.clear();
    for (auto& t : out)
        if (!dom.is_zero(t.second)) ts.push_back(std::move(t));
}

}  // namespace

Poly Poly::constant(const RingPtr& ring, Coeff c) {
    Poly p(ring);
    if (!ring->domain()->is_zero(c))
        p.terms_.push_back({Monomial::one(ring->nvars()), std::move(c)});
    return p;
}

Poly Poly::from_int(const RingPtr& ring, const Int& n) {
    return constant(ring, ring->domain()->from_int(n));
}

Poly Poly::variable(const RingPtr& ring, int idx, int power) {
    Poly p(ring);
    p.terms_.push_back(
        {Monomial::var(idx, ring->nvars(), power), ring->domain()->one()});
    return p;
}

Poly Poly::monomial(const RingPtr& ring, Monomial m, Coeff c) {
    Poly p(ring);
    if (!ring->domain()->is_zero(c))
        p.terms_.push_back({std::move(m), std::move(c)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly p(ring);
    normalize_terms(*ring, terms);
    p.terms_ = std::move(terms);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.deg);
    return d;
}

int Poly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
}

const Coeff& Poly::coeff_of(const Monomial& m) const {
    static const Coeff zero{};
    for (const auto& t : terms_)
        if (t.first == m) return t.second;
    return zero;
}

bool Poly::equal(const Poly& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    const auto& dom = *ring_->domain();
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!(terms_[i].first == other.terms_[i].first)) return false;
        if (!dom.equal(terms_[i].second, other.terms_[i].second)) return false;
    }
    return true;
}

void PolyBuilder::add_poly(const Poly& p) {
    for (const auto& t : p.terms()) terms_.push_back(t);
}

void PolyBuilder::add_poly_scaled(const Poly& p, const Coeff& c,
                                  const Monomial& shift) {
    const auto& dom = *ring_->domain();
    for (const auto& [m, pc] : p.terms())
        terms_.push_back({m.mul(shift), dom.mul(pc, c)});
}

Poly PolyBuilder::build() {
    return Poly::from_terms(ring_, std::move(terms_));
}

Poly poly_add_impl(const Poly& a, const Poly& b, bool negate_b) {
    require_same_ring(a.ring(), b.ring(), "add");
    const auto& ring = *a.ring();
    const auto& dom = *ring.domain();
    Poly r(a.ring());
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = ring.cmp(a.terms_[i].first, b.terms_[j].first);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            auto t = b.terms_[j++];
            if (negate_b) t.second = dom.neg(t.second);
            r.terms_.push_back(std::move(t));
        } else {
            Coeff s = negate_b ? dom.sub(a.terms_[i].second, b.terms_[j].second)
                               : dom.add(a.terms_[i].second, b.terms_[j].second);
            if (!dom.is_zero(s))
                r.terms_.push_back({a.terms_[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
        auto t = b.terms_[j];
        if (negate_b) t.second = dom.neg(t.second);
        r.terms_.push_back(std::move(t));
    }
    return r;
}

Poly poly_add(const Poly& a, const Poly& b) { return poly_add_impl(a, b, false); }
Poly poly_sub(const Poly& a, const Poly& b) { return poly_add_impl(a, b, true); }

Poly poly_neg(const Poly& a) {
    Poly r = a;
    const auto& dom = *a.ring()->domain();
    for (auto& t : r.terms_) t.second = dom.neg(t.second);
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring(), "mul");
    const auto& dom = *a.ring()->domain();
    PolyBuilder acc(a.ring());
    const Poly& big = a.terms_.size() >= b.terms_.size() ? a : b;
    const Poly& small = a.terms_.size() >= b.terms_.size() ? b : a;
    for (const auto& [m, c] : small.terms_) acc.add_poly_scaled(big, c, m);
    return acc.build();
}

Poly poly_pow(const Poly& a, unsigned long e) {
    Poly r = Poly::constant(a.ring(), a.ring()->domain()->one());
    Poly base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

Poly poly_coeff_mul(const Poly& a, const Coeff& c) {
    const auto& dom = *a.ring()->domain();
    if (dom.is_zero(c)) return Poly::zero(a.ring());
    Poly r = a;
    for (auto& t : r.terms_) t.second = dom.mul(t.second, c);
    return r;
}

Poly poly_mono_mul(const Poly& a, const Monomial& m, const Coeff& c) {
    const auto& dom = *a.ring()->domain();
    if (dom.is_zero(c)) return Poly::zero(a.ring());
    Poly r(a.ring());
    r.terms_.reserve(a.terms_.size());
    for (const auto& [am, ac] : a.terms_)
        r.terms_.push_back({am.mul(m), dom.mul(ac, c)});
    return r;
}

Homogeneity homogeneity(const Poly& p) {
    if (p.is_zero()) return {HomTag::Any};
    int d = p.terms()[0].first.deg;
    for (const auto& [m, c] : p.terms())
        if (m.deg != d) return {HomTag::No};
    return {HomTag::Degree, d};
}

Poly substitute(const Poly& p, const std::map<int, Poly>& images, RingPtr target) {
    const auto& src = *p.ring();
    for (const auto& [var, img] : images) {
        if (var < 0 || var >= src.nvars())
            fail(ErrCode::UnknownVariable, "substitute: bad variable index");
        require_same_ring(img.ring(), target, "substitute");
    }
    // images for untouched variables: same-named variable in target
    std::vector<Poly> var_image;
    std::vector<std::vector<Poly>> powers(src.nvars());
    for (int v = 0; v < src.nvars(); ++v) {
        auto it = images.find(v);
        if (it != images.end()) {
            var_image.push_back(it->second);
        } else {
            auto idx = target->var_index(src.var_name(v));
            if (!idx) {
                // variable absent from target: only an error if actually used
                var_image.push_back(Poly::zero(target));
                continue;
            }
            var_image.push_back(Poly::variable(target, *idx));
        }
    }
    Poly result = Poly::zero(target);
    const auto& tdom = *target->domain();
    for (const auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(target, c);
        for (int v = 0; v < src.nvars(); ++v) {
            int e = m.e[v];
            if (!e) continue;
            if (images.find(v) == images.end() &&
                !target->var_index(src.var_name(v)))
                fail(ErrCode::UnknownVariable,
                     "substitute: variable " + src.var_name(v) +
                         " missing from target ring");
            auto& pw = powers[v];
            if (pw.empty()) pw.push_back(var_image[v]);
            while (static_cast<int>(pw.size()) < e)
                pw.push_back(poly_mul(pw.back(), var_image[v]));
            term = poly_mul(term, pw[e - 1]);
        }
        result = poly_add(result, term);
    }
    (void)tdom;
    return result;
}

Poly set_var(const Poly& p, int var, const Coeff& value) {
    const auto& dom = *p.ring()->domain();
    PolyBuilder acc(p.ring());
    for (const auto& [m, c] : p.terms()) {
        int e = m.e[var];
        Monomial m2 = m;
        m2.deg -= e;
        m2.e[var] = 0;
        acc.add_term(m2, e ? dom.mul(c, dom.pow(value, e)) : c);
    }
    return acc.build();
}

Poly map_ring(const Poly& p, RingPtr target) {
    const auto& src = *p.ring();
    if (!src.domain()->same_as(*target->domain()))
        fail(ErrCode::RingMismatch, "map_ring: different coefficient domains");
    std::vector<int> idx(src.nvars(), -1);
    Poly r(target);
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        Monomial tm = Monomial::one(target->nvars());
        for (int v = 0; v < src.nvars(); ++v) {
            if (!m.e[v]) continue;
            if (idx[v] < 0) {
                auto i = target->var_index(src.var_name(v));
                if (!i)
                    fail(ErrCode::UnknownVariable,
                         "map_ring: variable " + src.var_name(v) +
                             " missing from target ring");
                idx[v] = *i;
            }
            tm.e[idx[v]] += m.e[v];
            tm.deg += m.e[v];
        }
        terms.push_back({std::move(tm), c});
    }
    return Poly::from_terms(target, std::move(terms));
}

Poly specialize_params(const Poly& p, const std::vector<Rat>& point,
                       RingPtr target) {
    const auto& dom = *p.ring()->domain();
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : p.terms())
        terms.push_back({m, dom.specialize(c, point)});
    return Poly::from_terms(target, std::move(terms));
}

Poly lift_to_param_domain(const Poly& p, RingPtr target) {
    const auto& tdom = *target->domain();
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : p.terms()) terms.push_back({m, tdom.lift(c)});
    return Poly::from_terms(target, std::move(terms));
}

Poly derivative(const Poly& p, int var) {
    const auto& dom = *p.ring()->domain();
    std::vector<Poly::Term> terms;
    for (const auto& [m, c] : p.terms()) {
        int e = m.e[var];
        if (!e) continue;
        Monomial m2 = m;
        m2.e[var] -= 1;
        m2.deg -= 1;
        terms.push_back({std::move(m2), dom.mul(c, dom.from_int(e))});
    }
    return Poly::from_terms(p.ring(), std::move(terms));
}

Poly primitive_part(const Poly& p, Rat* content) {
    const auto kind = p.ring()->domain()->kind();
    if (kind != DomainKind::Integers && kind != DomainKind::Rationals)
        fail(ErrCode::DomainError, "primitive_part needs ZZ or QQ coefficients");
    if (p.is_zero()) {
        if (content) *content = 0;
        return p;
    }
    Int g = 0, l = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.rat().get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rat().get_den_mpz_t());
    }
    Rat cont(g, l);
    cont.canonicalize();
    if (p.lc().rat() < 0) cont = -cont;
    if (content) *content = cont;
    Coeff inv = Coeff(Rat(1 / cont));
    return poly_coeff_mul(p, inv);
}

Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    const auto& dom = *p.ring()->domain();
    return poly_coeff_mul(p, dom.inv(p.lc()));
}

std::string poly_to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    const auto& ring = *p.ring();
    const auto& dom = *ring.domain();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        // decide sign/rendering of the coefficient
        std::string cs;
        bool negative = false;
        bool needs_parens = false;
        switch (dom.kind()) {
            case DomainKind::Integers:
            case DomainKind::Rationals: {
                Rat a = c.rat();
                if (a < 0) {
                    negative = true;
                    a = -a;
                }
                cs = a.get_str();
                break;
            }
            case DomainKind::PrimeField:
                cs = std::to_string(c.mod());
                break;
            case DomainKind::PolynomialDomain: {
                const ParamPoly& q = c.param();
                if (q.is_constant()) {
                    Rat a = q.constant_value();
                    if (a < 0) {
                        negative = true;
                        a = -a;
                    }
                    cs = a.get_str();
                } else {
                    cs = pp_to_string(q, dom.params());
                    needs_parens = true;
                }
                break;
            }
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool coeff_one = !needs_parens && cs == "1";
        if (needs_parens) {
            os << "(" << cs << ")";
        } else if (!coeff_one || m.is_one()) {
            os << cs;
        }
        bool printed = needs_parens || !coeff_one || m.is_one();
        for (int v = 0; v < ring.nvars(); ++v) {
            if (!m.e[v]) continue;
            if (printed) os << "*";
            os << ring.var_name(v);
            if (m.e[v] > 1) os << "^" << m.e[v];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace eliminant
