#include "evalg/linalg.hpp"

namespace evalg {

namespace {

void check_square(const Matrix& a) {
    for (const auto& row : a)
        if (row.size() != a.size()) raise(ErrorCode::InvalidArgument, "matrix is not square");
}

}  // namespace

Matrix minor_matrix(const Matrix& a, std::size_t r, std::size_t c) {
    Matrix m;
    m.reserve(a.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r) continue;
        std::vector<Element> row;
        row.reserve(a.size() - 1);
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (j != c) row.push_back(a[i][j]);
        m.push_back(std::move(row));
    }
    return m;
}

Element cofactor_determinant(const Matrix& a, const Ring& ring) {
    check_square(a);
    const std::size_t n = a.size();
    if (n == 0) return Element::one(ring);
    if (n == 1) return a[0][0];
    if (n == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    Element acc = Element::zero(ring);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        Element term = a[0][j] * cofactor_determinant(minor_matrix(a, 0, j), ring);
        if (j % 2 == 0) acc += term;
        else acc -= term;
    }
    return acc;
}

Element bareiss_determinant(const Matrix& input, const Ring& ring) {
    check_square(input);
    Matrix a = input;
    const std::size_t n = a.size();
    if (n == 0) return Element::one(ring);
    bool negate = false;
    Element prev = Element::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return Element::zero(ring);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

Element determinant(const Matrix& a, const Ring& ring) {
    return a.size() <= 5 ? cofactor_determinant(a, ring) : bareiss_determinant(a, ring);
}

std::vector<Element> cramer_solve(const Matrix& a, const std::vector<Element>& b, const Ring& ring) {
    check_square(a);
    if (b.size() != a.size()) raise(ErrorCode::InvalidArgument, "right-hand side length mismatch");
    const Element d = determinant(a, ring);
    if (d.is_zero()) raise(ErrorCode::DivisionByZero, "singular system");
    std::vector<Element> x;
    x.reserve(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        Matrix aj = a;
        for (std::size_t i = 0; i < a.size(); ++i) aj[i][j] = b[i];
        x.push_back(exact_divide(determinant(aj, ring), d));
    }
    return x;
}

std::vector<Element> bareiss_solve(const Matrix& input, const std::vector<Element>& rhs, const Ring& ring) {
    check_square(input);
    const std::size_t n = input.size();
    if (rhs.size() != n) raise(ErrorCode::InvalidArgument, "right-hand side length mismatch");
    if (n == 0) return {};
    // Augmented matrix; after elimination row k holds k-th order leading minors.
    Matrix a = input;
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(rhs[i]);
    Element prev = Element::one(ring);
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) raise(ErrorCode::DivisionByZero, "singular system");
            std::swap(a[k], a[r]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j)
                a[i][j] = exact_divide(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
            a[i][k] = Element::zero(ring);
        }
        prev = a[k][k];
    }
    const Element det = a[n - 1][n - 1];
    // y_i = det * x_i lies in the ring; solve the triangular system for y.
    std::vector<Element> y(n, Element::zero(ring));
    for (std::size_t i = n; i-- > 0;) {
        Element acc = det * a[i][n];
        for (std::size_t j = i + 1; j < n; ++j) acc -= a[i][j] * y[j];
        y[i] = exact_divide(acc, a[i][i]);
    }
    std::vector<Element> x;
    x.reserve(n);
    for (const auto& v : y) x.push_back(exact_divide(v, det));
    return x;
}

Matrix vandermonde(const std::vector<Element>& points) {
    const std::size_t n = points.size();
    Matrix m(n);
    for (std::size_t l = 0; l < n; ++l) {
        m[l].reserve(n);
        for (const auto& k : points) m[l].push_back(k.pow(l));
    }
    return m;
}

}  // namespace evalg
