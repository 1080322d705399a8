#pragma once

#include <random>
#include <vector>

#include "eliminant/poly.hpp"

namespace eliminant {

// Dense matrix over an exact coefficient domain.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols, DomainPtr domain);
    static ExactMatrix identity(int n, DomainPtr domain);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const DomainPtr& domain() const { return dom_; }

    Coeff& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Coeff& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    ExactMatrix mul(const ExactMatrix& other) const;
    ExactMatrix transpose() const;

private:
    int rows_, cols_;
    DomainPtr dom_;
    std::vector<Coeff> a_;
};

enum class DetStrategy { Auto, Bareiss, Cofactor, Interpolate };

// Exact determinant. Auto picks cofactor expansion for small or
// few-parameter symbolic matrices and Bareiss fraction-free elimination
// otherwise; Interpolate routes parameter entries through
// evaluation/interpolation.
Coeff det(const ExactMatrix& M, DetStrategy strategy = DetStrategy::Auto);

// Exact solution of M x = b over the fraction field of M's domain.
std::vector<Coeff> solve(const ExactMatrix& M, const std::vector<Coeff>& b);

// All rows x rows minors, column subsets in lexicographic order.
std::vector<Coeff> maximal_minors(const ExactMatrix& M);

// Integer matrix with determinant exactly 1: product of a random unit lower-
// and unit upper-triangular matrix with off-diagonal entries in
// [-amplitude, amplitude]. Deterministic for a given rng state.
ExactMatrix random_unimodular(int size, std::mt19937_64& rng, int amplitude);

// Each F_i(x) becomes F_i(A x); A entries must live in the polys' domain.
std::vector<Poly> linear_change(const std::vector<Poly>& polys,
                                const ExactMatrix& A);

// Laplace-expansion determinant of a small matrix of polynomials.
Poly poly_det(const std::vector<std::vector<Poly>>& M);
// All maximal minors of a wide matrix of polynomials, lexicographic column
// subsets.
std::vector<Poly> poly_maximal_minors(const std::vector<std::vector<Poly>>& M);

// ordered size-k subsets of {0..n-1}, lexicographic
std::vector<std::vector<int>> subsets_lex(int n, int k);

}  // namespace eliminant
