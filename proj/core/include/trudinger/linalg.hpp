// Small dense vector/matrix helpers for low-dimensional (n <= 3 in practice)
// pointwise calculus. Dimensions are runtime values; nothing here is tuned.

#ifndef TRUDINGER_LINALG_HPP
#define TRUDINGER_LINALG_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "trudinger/errors.hpp"

namespace trudinger {

using Vec = std::vector<double>;

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec operator*(double s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline double dist(const Vec& a, const Vec& b) { return norm(Vec(a - b)); }

// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n, double fill = 0.0) : n_(n), a_(static_cast<std::size_t>(n) * n, fill) {}
    Matrix(int n, std::initializer_list<double> vals) : n_(n), a_(vals) {
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw InvalidInput("Matrix: initializer size mismatch");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix diag(const Vec& d) {
        Matrix m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n_; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
        return m;
    }
    // a * u u^T + b * (I - u u^T) for a unit vector u: the radial Hessian shape.
    static Matrix radial(const Vec& unit, double along, double across) {
        const int n = static_cast<int>(unit.size());
        Matrix m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const double uij = unit[static_cast<std::size_t>(i)] * unit[static_cast<std::size_t>(j)];
                m(i, j) = along * uij + across * ((i == j ? 1.0 : 0.0) - uij);
            }
        return m;
    }

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += (*this)(i, i);
        return s;
    }
    bool symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }
    // q^T X q
    double quad(std::span<const double> q) const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) s += q[static_cast<std::size_t>(i)] * (*this)(i, j) * q[static_cast<std::size_t>(j)];
        return s;
    }

    Matrix& operator*=(double s) {
        for (double& v : a_) v *= s;
        return *this;
    }
    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

inline Matrix operator*(double s, Matrix m) {
    m *= s;
    return m;
}

inline Matrix outer(const Vec& a, const Vec& b) {
    Matrix m(static_cast<int>(a.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) m(i, j) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return m;
}

} // namespace trudinger

#endif
