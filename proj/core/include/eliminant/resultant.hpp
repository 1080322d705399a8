#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eliminant/groebner.hpp"
#include "eliminant/matrix.hpp"
#include "eliminant/poly.hpp"

namespace eliminant {

// n+1 homogeneous forms in n+1 variables with their declared degrees
// (explicit degrees let a zero polynomial participate).
struct HomSystem {
    RingPtr ring;
    std::vector<Poly> polys;
    std::vector<int> degrees;
};

// validates counts, homogeneity, and positive degrees
HomSystem make_hom_system(const std::vector<Poly>& polys,
                          const std::vector<int>& explicit_degrees = {});

// K[x_0..x_{n-1}]/(f_0..f_{n-1}) presented by GB standard monomials.
struct QuotientAlgebra {
    RingPtr ring;
    GroebnerBasis gb;
    std::vector<Monomial> basis;
    int dim = 0;
};

// Grevlex GB of the dehomogenized system plus its standard-monomial basis.
// nullopt when the quotient is not finite of the expected (Bezout) dimension
// -- the genericity signal consumed by the Poisson retry loop. Pass
// expected_dim < 0 to accept any finite dimension.
std::optional<QuotientAlgebra> quotient_basis(const std::vector<Poly>& fs,
                                              int expected_dim = -1);

// matrix of b |-> normal_form(f*b) in the standard-monomial basis
ExactMatrix mult_matrix(const Poly& f, const QuotientAlgebra& A);

struct MacaulayMatrices {
    ExactMatrix D;
    ExactMatrix Dp;                 // reduced rows/columns deleted
    std::vector<Monomial> cols;     // degree-delta monomials labeling D
    std::vector<int> row_poly;      // which F_i produced each row of D
    std::vector<char> reduced;      // per label: divisible by x_i^{d_i} for exactly one i
};

MacaulayMatrices macaulay_matrices(const HomSystem& sys);

enum class ResultantAlgorithm { Auto, Poisson, Macaulay, Interpolate };

// Top level of the Poisson recursion, exposed for inspection:
// Res = inner_resultant^inner_exponent * mult_det.
struct PoissonBreakdown {
    Coeff inner_resultant;
    int inner_exponent = 0;
    Coeff mult_det;
    int quotient_dim = 0;
};

struct ResultantOutcome {
    Coeff value;
    std::string algorithm;
    int coordinate_changes = 0;
    std::uint64_t seed = 0;
    std::optional<PoissonBreakdown> poisson;
};

ResultantOutcome resultant(const HomSystem& sys,
                           ResultantAlgorithm alg = ResultantAlgorithm::Auto,
                           std::uint64_t seed = 0, int threads = 1);

ResultantOutcome poisson_resultant(const HomSystem& sys, std::uint64_t seed = 0);
ResultantOutcome macaulay_resultant(const HomSystem& sys, std::uint64_t seed = 0);
ResultantOutcome interpolate_resultant(const HomSystem& sys,
                                       std::uint64_t seed = 0, int threads = 1);

// Dis(F) = c_{d,n} * Res(dF/dx_0,...,dF/dx_n) with
// c_{d,n} = d^{((-1)^{n+1}-(d-1)^{n+1})/d}; explicit_degree covers forms not
// using every variable.
ResultantOutcome discriminant(const Poly& F, int explicit_degree = -1,
                              ResultantAlgorithm alg = ResultantAlgorithm::Auto,
                              std::uint64_t seed = 0, int threads = 1);

}  // namespace eliminant
