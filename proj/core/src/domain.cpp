#include "eliminant/domain.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eliminant {

namespace {

// grevlex, >0 if a > b
int pp_cmp(const std::vector<int>& a, const std::vector<int>& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct PPDesc {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        return pp_cmp(a, b) > 0;
    }
};

ParamPoly pp_from_map(std::map<std::vector<int>, Rat, PPDesc>& acc) {
    ParamPoly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms.push_back({m, std::move(c)});
    return r;
}

}  // namespace

bool ParamPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() != 1) return false;
    for (int x : terms[0].first)
        if (x) return false;
    return true;
}

Rat ParamPoly::constant_value() const {
    return terms.empty() ? Rat(0) : terms[0].second;
}

ParamPoly pp_const(const Rat& c, int nparams) {
    ParamPoly r;
    if (c != 0) r.terms.push_back({std::vector<int>(nparams, 0), c});
    return r;
}

ParamPoly pp_var(int idx, int nparams) {
    ParamPoly r;
    std::vector<int> e(nparams, 0);
    e[idx] = 1;
    r.terms.push_back({std::move(e), Rat(1)});
    return r;
}

ParamPoly pp_add(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = pp_cmp(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Rat s = a.terms[i].second + b.terms[j].second;
            if (s != 0) r.terms.push_back({a.terms[i].first, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

ParamPoly pp_neg(const ParamPoly& a) {
    ParamPoly r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

ParamPoly pp_sub(const ParamPoly& a, const ParamPoly& b) {
    return pp_add(a, pp_neg(b));
}

ParamPoly pp_mul(const ParamPoly& a, const ParamPoly& b) {
    std::map<std::vector<int>, Rat, PPDesc> acc;
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> m = ma;
            for (size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
            acc[std::move(m)] += ca * cb;
        }
    }
    return pp_from_map(acc);
}

ParamPoly pp_pow(const ParamPoly& a, unsigned long e, int nparams) {
    ParamPoly r = pp_const(Rat(1), nparams);
    ParamPoly base = a;
    while (e) {
        if (e & 1) r = pp_mul(r, base);
        e >>= 1;
        if (e) base = pp_mul(base, base);
    }
    return r;
}

std::optional<ParamPoly> pp_exact_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) return std::nullopt;
    ParamPoly rem = a, quot;
    const auto& ltm = b.terms[0].first;
    const Rat& ltc = b.terms[0].second;
    while (!rem.is_zero()) {
        const auto& rm = rem.terms[0].first;
        std::vector<int> q = rm;
        for (size_t k = 0; k < q.size(); ++k) {
            q[k] -= ltm[k];
            if (q[k] < 0) return std::nullopt;
        }
        Rat qc = rem.terms[0].second / ltc;
        ParamPoly t;
        t.terms.push_back({std::move(q), std::move(qc)});
        quot = pp_add(quot, t);
        rem = pp_sub(rem, pp_mul(t, b));
    }
    return quot;
}

Rat pp_eval(const ParamPoly& a, const std::vector<Rat>& point) {
    Rat r(0);
    for (const auto& [m, c] : a.terms) {
        Rat t = c;
        for (size_t k = 0; k < m.size(); ++k)
            if (m[k]) t *= pow_rat(point[k], m[k]);
        r += t;
    }
    return r;
}

int pp_degree_in(const ParamPoly& a, int var) {
    int d = -1;
    for (const auto& [m, c] : a.terms) d = std::max(d, m[var]);
    return d;
}

int pp_total_degree(const ParamPoly& a) {
    int d = -1;
    for (const auto& [m, c] : a.terms) {
        int s = 0;
        for (int x : m) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::optional<int> pp_homogeneous_degree(const ParamPoly& a) {
    if (a.is_zero()) return 0;
    int d = -1;
    for (const auto& [m, c] : a.terms) {
        int s = 0;
        for (int x : m) s += x;
        if (d < 0)
            d = s;
        else if (d != s)
            return std::nullopt;
    }
    return d;
}

bool pp_equal(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i)
        if (a.terms[i].first != b.terms[i].first ||
            a.terms[i].second != b.terms[i].second)
            return false;
    return true;
}

std::string pp_to_string(const ParamPoly& a, const std::vector<std::string>& names) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a.terms) {
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool mono_one = true;
        for (int x : m)
            if (x) mono_one = false;
        bool coeff_one = (ac == 1);
        if (!coeff_one || mono_one) os << ac.get_str();
        bool printed = !coeff_one || mono_one;
        for (size_t k = 0; k < m.size(); ++k) {
            if (!m[k]) continue;
            if (printed) os << "*";
            os << names[k];
            if (m[k] > 1) os << "^" << m[k];
            printed = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

DomainPtr CoeffDomain::integers() {
    static DomainPtr d = [] {
        auto p = std::shared_ptr<CoeffDomain>(new CoeffDomain());
        p->kind_ = DomainKind::Integers;
        return p;
    }();
    return d;
}

DomainPtr CoeffDomain::rationals() {
    static DomainPtr d = [] {
        auto p = std::shared_ptr<CoeffDomain>(new CoeffDomain());
        p->kind_ = DomainKind::Rationals;
        return p;
    }();
    return d;
}

DomainPtr CoeffDomain::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p) || p >= (1ull << 62))
        fail(ErrCode::DomainError, "GF(p) requires a prime p < 2^62");
    auto d = std::shared_ptr<CoeffDomain>(new CoeffDomain());
    d->kind_ = DomainKind::PrimeField;
    d->p_ = p;
    return d;
}

DomainPtr CoeffDomain::polynomial(DomainPtr base, std::vector<std::string> params) {
    if (!base || base->kind_ == DomainKind::PolynomialDomain)
        fail(ErrCode::DomainError,
             "polynomial-domain base must be ZZ, QQ, or GF(p)");
    if (base->kind_ == DomainKind::PrimeField)
        fail(ErrCode::DomainError,
             "parameters over prime fields are not supported");
    if (params.empty())
        fail(ErrCode::DomainError, "polynomial-domain needs parameters");
    auto d = std::shared_ptr<CoeffDomain>(new CoeffDomain());
    d->kind_ = DomainKind::PolynomialDomain;
    d->base_ = std::move(base);
    d->params_ = std::move(params);
    return d;
}

bool CoeffDomain::same_as(const CoeffDomain& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return true;
        case DomainKind::PrimeField:
            return p_ == other.p_;
        case DomainKind::PolynomialDomain:
            return params_ == other.params_ && base_->same_as(*other.base_);
    }
    return false;
}

DomainPtr CoeffDomain::fraction_field() const {
    switch (kind_) {
        case DomainKind::Integers:
            return rationals();
        case DomainKind::Rationals:
            return rationals();
        case DomainKind::PrimeField:
            return prime_field(p_);
        case DomainKind::PolynomialDomain:
            fail(ErrCode::DomainError,
                 "no computable fraction field for polynomial-domains");
    }
    return nullptr;
}

Coeff CoeffDomain::zero() const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(Rat(0));
        case DomainKind::PrimeField:
            return Coeff(std::uint64_t(0));
        case DomainKind::PolynomialDomain:
            return Coeff(ParamPoly{});
    }
    return Coeff();
}

Coeff CoeffDomain::one() const { return from_int(1); }

Coeff CoeffDomain::from_int(const Int& n) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(Rat(n));
        case DomainKind::PrimeField: {
            Int r = n % Int(static_cast<unsigned long>(p_));
            if (r < 0) r += Int(static_cast<unsigned long>(p_));
            return Coeff(static_cast<std::uint64_t>(r.get_ui()));
        }
        case DomainKind::PolynomialDomain:
            return Coeff(pp_const(Rat(n), nparams()));
    }
    return Coeff();
}

Coeff CoeffDomain::from_rat(const Rat& q) const {
    switch (kind_) {
        case DomainKind::Integers:
            if (q.get_den() != 1)
                fail(ErrCode::DomainError, "non-integer value in ZZ");
            return Coeff(q);
        case DomainKind::Rationals:
            return Coeff(q);
        case DomainKind::PrimeField: {
            Coeff num = from_int(q.get_num());
            Int den = q.get_den() % Int(static_cast<unsigned long>(p_));
            if (den == 0)
                fail(ErrCode::DomainError, "denominator divisible by p");
            return Coeff(mod_mul(num.mod(), mod_inv(den.get_ui(), p_), p_));
        }
        case DomainKind::PolynomialDomain:
            if (base_->kind() == DomainKind::Integers && q.get_den() != 1)
                fail(ErrCode::DomainError, "non-integer value in ZZ-based domain");
            return Coeff(pp_const(q, nparams()));
    }
    return Coeff();
}

Coeff CoeffDomain::param_var(int idx) const {
    if (kind_ != DomainKind::PolynomialDomain)
        fail(ErrCode::DomainError, "domain has no parameters");
    return Coeff(pp_var(idx, nparams()));
}

Coeff CoeffDomain::add(const Coeff& a, const Coeff& b) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(a.rat() + b.rat());
        case DomainKind::PrimeField:
            return Coeff(mod_add(a.mod(), b.mod(), p_));
        case DomainKind::PolynomialDomain:
            return Coeff(pp_add(a.param(), b.param()));
    }
    return Coeff();
}

Coeff CoeffDomain::sub(const Coeff& a, const Coeff& b) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(a.rat() - b.rat());
        case DomainKind::PrimeField:
            return Coeff(mod_sub(a.mod(), b.mod(), p_));
        case DomainKind::PolynomialDomain:
            return Coeff(pp_sub(a.param(), b.param()));
    }
    return Coeff();
}

Coeff CoeffDomain::mul(const Coeff& a, const Coeff& b) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(a.rat() * b.rat());
        case DomainKind::PrimeField:
            return Coeff(mod_mul(a.mod(), b.mod(), p_));
        case DomainKind::PolynomialDomain:
            return Coeff(pp_mul(a.param(), b.param()));
    }
    return Coeff();
}

Coeff CoeffDomain::neg(const Coeff& a) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(Rat(-a.rat()));
        case DomainKind::PrimeField:
            return Coeff(a.mod() == 0 ? 0 : p_ - a.mod());
        case DomainKind::PolynomialDomain:
            return Coeff(pp_neg(a.param()));
    }
    return Coeff();
}

Coeff CoeffDomain::pow(const Coeff& a, unsigned long e) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return Coeff(pow_rat(a.rat(), static_cast<long>(e)));
        case DomainKind::PrimeField:
            return Coeff(mod_pow(a.mod(), e, p_));
        case DomainKind::PolynomialDomain:
            return Coeff(pp_pow(a.param(), e, nparams()));
    }
    return Coeff();
}

Coeff CoeffDomain::inv(const Coeff& a) const {
    if (is_zero(a)) fail(ErrCode::DomainError, "inverse of zero");
    switch (kind_) {
        case DomainKind::Rationals:
            return Coeff(Rat(1 / a.rat()));
        case DomainKind::PrimeField:
            return Coeff(mod_inv(a.mod(), p_));
        default:
            fail(ErrCode::DomainError, "inverse requires a field");
    }
}

std::optional<Coeff> CoeffDomain::try_exact_div(const Coeff& a, const Coeff& b) const {
    if (is_zero(b)) return std::nullopt;
    switch (kind_) {
        case DomainKind::Integers: {
            if (!divides(b.rat().get_num(), a.rat().get_num()))
                return std::nullopt;
            return Coeff(Rat(a.rat() / b.rat()));
        }
        case DomainKind::Rationals:
            return Coeff(Rat(a.rat() / b.rat()));
        case DomainKind::PrimeField:
            return Coeff(mod_mul(a.mod(), mod_inv(b.mod(), p_), p_));
        case DomainKind::PolynomialDomain: {
            auto q = pp_exact_div(a.param(), b.param());
            if (!q) return std::nullopt;
            if (base_->kind() == DomainKind::Integers) {
                for (const auto& [m, c] : q->terms)
                    if (c.get_den() != 1) return std::nullopt;
            }
            return Coeff(std::move(*q));
        }
    }
    return std::nullopt;
}

Coeff CoeffDomain::exact_div(const Coeff& a, const Coeff& b) const {
    auto q = try_exact_div(a, b);
    if (!q)
        fail(ErrCode::DomainError,
             "inexact division: " + to_string(a) + " by " + to_string(b));
    return *q;
}

bool CoeffDomain::is_zero(const Coeff& a) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return a.rat() == 0;
        case DomainKind::PrimeField:
            return a.mod() == 0;
        case DomainKind::PolynomialDomain:
            return a.param().is_zero();
    }
    return true;
}

bool CoeffDomain::is_one(const Coeff& a) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return a.rat() == 1;
        case DomainKind::PrimeField:
            return a.mod() == 1;
        case DomainKind::PolynomialDomain:
            return a.param().is_constant() && a.param().constant_value() == 1;
    }
    return false;
}

bool CoeffDomain::equal(const Coeff& a, const Coeff& b) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return a.rat() == b.rat();
        case DomainKind::PrimeField:
            return a.mod() == b.mod();
        case DomainKind::PolynomialDomain:
            return pp_equal(a.param(), b.param());
    }
    return false;
}

Coeff CoeffDomain::specialize(const Coeff& a, const std::vector<Rat>& point) const {
    if (kind_ != DomainKind::PolynomialDomain)
        fail(ErrCode::DomainError, "specialize: domain has no parameters");
    if (static_cast<int>(point.size()) != nparams())
        fail(ErrCode::BadArgument, "specialize: wrong point dimension");
    return base_->from_rat(pp_eval(a.param(), point));
}

Coeff CoeffDomain::lift(const Coeff& base_elem) const {
    if (kind_ != DomainKind::PolynomialDomain)
        fail(ErrCode::DomainError, "lift: not a polynomial-domain");
    return Coeff(pp_const(base_elem.rat(), nparams()));
}

std::string CoeffDomain::to_string(const Coeff& a) const {
    switch (kind_) {
        case DomainKind::Integers:
        case DomainKind::Rationals:
            return a.rat().get_str();
        case DomainKind::PrimeField:
            return std::to_string(a.mod());
        case DomainKind::PolynomialDomain:
            return pp_to_string(a.param(), params_);
    }
    return "";
}

std::string CoeffDomain::name() const {
    switch (kind_) {
        case DomainKind::Integers:
            return "ZZ";
        case DomainKind::Rationals:
            return "QQ";
        case DomainKind::PrimeField:
            return "GF(" + std::to_string(p_) + ")";
        case DomainKind::PolynomialDomain: {
            std::string s = base_->name() + "[";
            for (size_t i = 0; i < params_.size(); ++i) {
                if (i) s += ",";
                s += params_[i];
            }
            return s + "]";
        }
    }
    return "";
}

const char* err_code_name(ErrCode c) {
    switch (c) {
        case ErrCode::RingMismatch: return "RING_MISMATCH";
        case ErrCode::DomainError: return "DOMAIN_ERROR";
        case ErrCode::NonSquare: return "NON_SQUARE";
        case ErrCode::SingularMatrix: return "SINGULAR_MATRIX";
        case ErrCode::NotHomogeneous: return "NOT_HOMOGENEOUS";
        case ErrCode::GenericityFailed: return "GENERICITY_FAILED";
        case ErrCode::ZeroDenominator: return "ZERO_DENOMINATOR";
        case ErrCode::NonFieldCoefficients: return "NON_FIELD_COEFFICIENTS";
        case ErrCode::DimMismatch: return "DIM_MISMATCH";
        case ErrCode::UnknownVariable: return "UNKNOWN_VARIABLE";
        case ErrCode::ParseError: return "PARSE_ERROR";
        case ErrCode::BadArgument: return "BAD_ARGUMENT";
    }
    return "UNKNOWN";
}

}  // namespace eliminant
