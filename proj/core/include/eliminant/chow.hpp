#pragma once

#include <memory>
#include <string>
#include <vector>

#include "eliminant/groebner.hpp"
#include "eliminant/poly.hpp"

namespace eliminant {

// Coordinate ring of the Grassmannian G(a, P^n) of projective a-planes:
// one variable p_I per (a+1)-subset I of {0..n} (displayed x[i,j,...], colex
// subset order mirroring the minor labeling), plus the Plücker quadrics.
struct PluckerRingData {
    int a = 0;
    int n = 0;
    RingPtr ring;
    std::vector<std::vector<int>> subsets;  // variable index -> sorted subset
    std::shared_ptr<Ideal> relations;       // GB cached inside the Ideal
};
using PluckerPtr = std::shared_ptr<const PluckerRingData>;

PluckerPtr plucker_ring(int a, int n);

// Residue class modulo the Plücker relations, held by its canonical
// representative: normal form w.r.t. the relations GB, integer-primitive,
// first (leading) coefficient positive.
struct PluckerElement {
    PluckerPtr grass;
    Poly rep;
};

PluckerElement make_plucker_element(PluckerPtr grass, const Poly& raw);
bool plucker_equal(const PluckerElement& a, const PluckerElement& b);

struct ChowFormResult {
    PluckerElement element;  // on G(n-k-1, n)
    int source_dim = 0;      // k
    int source_degree = 0;   // d = degree of the form
    int ambient = 0;         // n
};

inline ChowFormResult make_chow_result(PluckerElement elem, int k, int n) {
    int d = elem.rep.total_degree();
    return ChowFormResult{std::move(elem), k, d, n};
}

// degree-d monomial map P^k -> P^{binom(k+d,k)-1}; source is the big space,
// so kernel(veronese(k,d)) is the ideal of the image variety
RingMap veronese(int k, int d);

// I defines X in P^n of projective dimension k; the Chow form lives on
// G(n-k-1, n) via the annihilator relabeling of u-row minors
ChowFormResult chow_form(const Ideal& I);

// coefficients of the y-monomials after p_I -> minor_I([x; y-rows]); an ideal
// in QQ[x0..xn] whose saturation recovers I(X) on the test corpus
Ideal chow_equations(const ChowFormResult& w);

// p_I -> sign(I, I^c) p_{I^c} on the dual Grassmannian
PluckerElement dualize(const PluckerElement& w);

// p_I -> maximal minor of an (a+1) x (n+1) matrix of fresh x[i,j]
Poly from_plucker_to_stiefel(const PluckerElement& w);

struct CayleyTrickResult {
    Ideal segre;        // ideal of P^k x X in P(Mat(k+1, n+1))
    Ideal x_resultant;  // principal: stiefel(dualize(chow_form(I)))
};

CayleyTrickResult cayley_trick(const Ideal& I);

// conormal construction: minors of the Jacobian stacked with the dual row,
// saturated to the closure over the smooth locus, then x eliminated. The
// input must define an irreducible variety.
Ideal dual_variety(const Ideal& I);

}  // namespace eliminant
