#pragma once

#include <mutex>
#include <vector>

#include "eliminant/poly.hpp"

namespace eliminant {

// Reduced Groebner basis: pairwise NF-irreducible, monic leading
// coefficients, generators sorted by ascending leading monomial. Unique for
// its ring order.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Poly> gens;
};

// Finite generator list with a publish-once GB cache for the ring's order.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Poly> gens);
    Ideal(const Ideal& o) : ring_(o.ring_), gens_(o.gens_) {}
    Ideal(Ideal&& o) noexcept : ring_(std::move(o.ring_)), gens_(std::move(o.gens_)) {}
    Ideal& operator=(const Ideal& o) {
        ring_ = o.ring_;
        gens_ = o.gens_;
        cache_.reset();
        return *this;
    }
    Ideal& operator=(Ideal&& o) noexcept {
        ring_ = std::move(o.ring_);
        gens_ = std::move(o.gens_);
        cache_.reset();
        return *this;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    const GroebnerBasis& gb() const;

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<const GroebnerBasis> cache_;
};

struct RingMap {
    RingPtr source;
    RingPtr target;
    std::vector<Poly> images;  // one target Poly per source variable
};

Poly apply_map(const RingMap& map, const Poly& p);

// Buchberger with sugar selection and the coprime/chain pair criteria.
// Requires field coefficients (QQ or GF(p)).
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Poly>& gens);

std::vector<Poly> groebner_basis(const Ideal& I);

// Remainder with no term divisible by any leading term of G.
Poly normal_form(const Poly& p, const GroebnerBasis& G);

bool ideal_contains(const Ideal& I, const Poly& p);

// I cap k[vars without drop], via a two-block elimination order.
Ideal eliminate(const Ideal& I, const std::vector<int>& drop);

// I cap J, by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& I, const Ideal& J);

// I : J^infinity = the intersection over generators g of I : g^infinity,
// each computed by the extra-variable trick.
Ideal saturate(const Ideal& I, const Ideal& J);

// kernel of the ring map (optionally through target relations Q, i.e. the
// kernel of source -> target/Q)
Ideal kernel(const RingMap& map, const std::vector<Poly>& target_relations = {});

// Krull dimension of ring/I, combinatorially from the leading-term ideal.
int krull_dim(const Ideal& I);

bool ideal_equal(const Ideal& I, const Ideal& J);

}  // namespace eliminant
