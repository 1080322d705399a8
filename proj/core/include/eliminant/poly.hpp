#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eliminant/ring.hpp"

namespace eliminant {

// Sparse distributed polynomial. Terms are kept in strictly descending ring
// order with nonzero coefficients (canonical form); equality is term-wise.
class Poly {
public:
    using Term = std::pair<Monomial, Coeff>;

    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(const RingPtr& ring, Coeff c);
    static Poly from_int(const RingPtr& ring, const Int& n);
    static Poly variable(const RingPtr& ring, int idx, int power = 1);
    static Poly monomial(const RingPtr& ring, Monomial m, Coeff c);
    // sorts, merges duplicates, drops zeros
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t nterms() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().first; }
    const Coeff& lc() const { return terms_.front().second; }

    int total_degree() const;         // -1 for zero
    int degree_in(int var) const;     // -1 for zero
    const Coeff& coeff_of(const Monomial& m) const;  // zero if absent

    bool equal(const Poly& other) const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    friend Poly poly_add_impl(const Poly&, const Poly&, bool);
    friend Poly poly_mul(const Poly&, const Poly&);
    friend Poly poly_neg(const Poly&);
    friend Poly poly_coeff_mul(const Poly&, const Coeff&);
    friend Poly poly_mono_mul(const Poly&, const Monomial&, const Coeff&);
    friend class PolyBuilder;
};

// Accumulates terms unordered, then normalizes once.
class PolyBuilder {
public:
    explicit PolyBuilder(RingPtr ring) : ring_(std::move(ring)) {}
    void add_term(const Monomial& m, const Coeff& c) { terms_.push_back({m, c}); }
    void add_poly(const Poly& p);
    void add_poly_scaled(const Poly& p, const Coeff& c, const Monomial& shift);
    Poly build();

private:
    RingPtr ring_;
    std::vector<Poly::Term> terms_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, unsigned long e);
Poly poly_coeff_mul(const Poly& a, const Coeff& c);
Poly poly_mono_mul(const Poly& a, const Monomial& m, const Coeff& c);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }
inline Poly operator-(const Poly& a) { return poly_neg(a); }
inline bool operator==(const Poly& a, const Poly& b) { return a.equal(b); }

enum class HomTag { No, Degree, Any };
struct Homogeneity {
    HomTag tag;
    int degree = 0;  // valid when tag == Degree
};
// zero polynomial is homogeneous of any degree
Homogeneity homogeneity(const Poly& p);

// simultaneous substitution var -> Poly (images live in `target`; variables
// without an image must exist in target under the same name)
Poly substitute(const Poly& p, const std::map<int, Poly>& images, RingPtr target);
// convenience: substitute a single variable by a scalar, stay in the ring
Poly set_var(const Poly& p, int var, const Coeff& value);
// maps a poly into another ring by variable name (used variables must exist)
Poly map_ring(const Poly& p, RingPtr target);
// specialize all domain parameters at a rational point; target ring has the
// same variables over the base domain
Poly specialize_params(const Poly& p, const std::vector<Rat>& point,
                       RingPtr target);
// lift a poly over a base domain into the same variables over a
// polynomial-domain extension
Poly lift_to_param_domain(const Poly& p, RingPtr target);

Poly derivative(const Poly& p, int var);

// over ZZ/QQ: divides out rational content so coefficients are coprime
// integers with positive leading coefficient; returns the removed content
Poly primitive_part(const Poly& p, Rat* content = nullptr);
// over a field: scales to leading coefficient 1
Poly monic(const Poly& p);

std::string poly_to_string(const Poly& p);

}  // namespace eliminant
