#pragma once

#include <vector>

#include "evalg/ring.hpp"

namespace evalg {

using Matrix = std::vector<std::vector<Element>>;

/// Laplace expansion along the first row.
Element cofactor_determinant(const Matrix& a, const Ring& ring);
/// Fraction-free Gaussian elimination; every division is exact.
Element bareiss_determinant(const Matrix& a, const Ring& ring);
/// Cofactor expansion for n <= 5, Bareiss above.
Element determinant(const Matrix& a, const Ring& ring);

/// Minor with row r and column c removed.
Matrix minor_matrix(const Matrix& a, std::size_t r, std::size_t c);

/// x with A x = b by Cramer's rule (ratios of determinants via exact_divide).
/// Throws DivisionByZero for singular A and NotDivisible when a ratio is not in `ring`.
std::vector<Element> cramer_solve(const Matrix& a, const std::vector<Element>& b, const Ring& ring);
/// Same contract, fraction-free elimination followed by back substitution.
std::vector<Element> bareiss_solve(const Matrix& a, const std::vector<Element>& b, const Ring& ring);

/// Rows l = 0..n-1, columns j: points[j]^l.
Matrix vandermonde(const std::vector<Element>& points);

}  // namespace evalg
