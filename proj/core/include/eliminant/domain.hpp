#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "eliminant/error.hpp"
#include "eliminant/numeric.hpp"

namespace eliminant {

// Sparse polynomial in the *parameter* variables of a polynomial-domain,
// with rational coefficients (integrality over a ZZ base is checked by the
// owning CoeffDomain where it matters). Terms are kept sorted descending
// grevlex, no zero coefficients.
struct ParamPoly {
    using Term = std::pair<std::vector<int>, Rat>;
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    // constant term value (0 if absent); only meaningful when is_constant()
    Rat constant_value() const;
};

ParamPoly pp_const(const Rat& c, int nparams);
ParamPoly pp_var(int idx, int nparams);
ParamPoly pp_add(const ParamPoly& a, const ParamPoly& b);
ParamPoly pp_sub(const ParamPoly& a, const ParamPoly& b);
ParamPoly pp_neg(const ParamPoly& a);
ParamPoly pp_mul(const ParamPoly& a, const ParamPoly& b);
ParamPoly pp_pow(const ParamPoly& a, unsigned long e, int nparams);
// exact multivariate division; nullopt if b does not divide a
std::optional<ParamPoly> pp_exact_div(const ParamPoly& a, const ParamPoly& b);
Rat pp_eval(const ParamPoly& a, const std::vector<Rat>& point);
int pp_degree_in(const ParamPoly& a, int var);
int pp_total_degree(const ParamPoly& a);  // -1 for zero
// returns degree if homogeneous in the params, nullopt otherwise (zero: 0)
std::optional<int> pp_homogeneous_degree(const ParamPoly& a);
bool pp_equal(const ParamPoly& a, const ParamPoly& b);
std::string pp_to_string(const ParamPoly& a, const std::vector<std::string>& names);

class CoeffDomain;
using DomainPtr = std::shared_ptr<const CoeffDomain>;

// One element of a coefficient domain. Interpreted through the domain that
// produced it: Rat for integers/rationals, a reduced residue for GF(p),
// ParamPoly for polynomial-domains.
class Coeff {
public:
    std::variant<Rat, std::uint64_t, ParamPoly> v;

    Coeff() : v(Rat(0)) {}
    explicit Coeff(Rat r) : v(std::move(r)) {}
    explicit Coeff(std::uint64_t m) : v(m) {}
    explicit Coeff(ParamPoly p) : v(std::move(p)) {}

    const Rat& rat() const { return std::get<Rat>(v); }
    std::uint64_t mod() const { return std::get<std::uint64_t>(v); }
    const ParamPoly& param() const { return std::get<ParamPoly>(v); }
};

enum class DomainKind { Integers, Rationals, PrimeField, PolynomialDomain };

class CoeffDomain : public std::enable_shared_from_this<CoeffDomain> {
public:
    static DomainPtr integers();
    static DomainPtr rationals();
    static DomainPtr prime_field(std::uint64_t p);
    static DomainPtr polynomial(DomainPtr base, std::vector<std::string> params);

    DomainKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return kind_ == DomainKind::PrimeField ? p_ : base_ ? base_->characteristic() : 0; }
    std::uint64_t prime() const { return p_; }
    bool is_field() const {
        return kind_ == DomainKind::Rationals || kind_ == DomainKind::PrimeField;
    }
    const DomainPtr& base() const { return base_; }
    const std::vector<std::string>& params() const { return params_; }
    int nparams() const { return static_cast<int>(params_.size()); }
    bool same_as(const CoeffDomain& other) const;

    // the fraction field (QQ for ZZ; fields map to themselves;
    // polynomial-domains have none here)
    DomainPtr fraction_field() const;

    Coeff zero() const;
    Coeff one() const;
    Coeff from_int(const Int& n) const;
    Coeff from_rat(const Rat& q) const;  // DomainError if not representable
    Coeff param_var(int idx) const;      // idx-th parameter as an element

    Coeff add(const Coeff& a, const Coeff& b) const;
    Coeff sub(const Coeff& a, const Coeff& b) const;
    Coeff mul(const Coeff& a, const Coeff& b) const;
    Coeff neg(const Coeff& a) const;
    Coeff pow(const Coeff& a, unsigned long e) const;
    Coeff inv(const Coeff& a) const;  // fields only
    std::optional<Coeff> try_exact_div(const Coeff& a, const Coeff& b) const;
    Coeff exact_div(const Coeff& a, const Coeff& b) const;

    bool is_zero(const Coeff& a) const;
    bool is_one(const Coeff& a) const;
    bool equal(const Coeff& a, const Coeff& b) const;

    // specializes parameters at a rational point, landing in base()
    Coeff specialize(const Coeff& a, const std::vector<Rat>& point) const;
    // lifts a base-domain element into this polynomial-domain
    Coeff lift(const Coeff& base_elem) const;

    std::string to_string(const Coeff& a) const;
    std::string name() const;

private:
    CoeffDomain() = default;
    DomainKind kind_ = DomainKind::Integers;
    std::uint64_t p_ = 0;
    DomainPtr base_;
    std::vector<std::string> params_;
};

}  // namespace eliminant
