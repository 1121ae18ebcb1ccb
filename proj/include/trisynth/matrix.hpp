#pragma once

#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

#include "trisynth/cyclotomic.hpp"
#include "trisynth/error.hpp"

namespace trisynth {

/**
 * Dense row-major matrix over an exact coefficient ring (LocalOmega or
 * LocalZeta).  Everything is exact; there is no floating-point path in here.
 * The design envelope is dim ≤ 243, so schoolbook products are fine and no
 * sparse storage is attempted.
 */
template <typename R>
class Matrix {
public:
    Matrix() : _rows(0), _cols(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _e(rows * cols, R::zero()) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R::one();
        return m;
    }

    std::size_t rows() const { return _rows; }
    std::size_t cols() const { return _cols; }
    bool square() const { return _rows == _cols; }

    R& at(std::size_t i, std::size_t j) { return _e[i * _cols + j]; }
    const R& at(std::size_t i, std::size_t j) const { return _e[i * _cols + j]; }

    bool operator==(const Matrix& o) const {
        return _rows == o._rows && _cols == o._cols && _e == o._e;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix& o) const {
        if (_cols != o._rows) throw DimensionError("matrix product: shape mismatch");
        Matrix r(_rows, o._cols);
        for (std::size_t i = 0; i < _rows; ++i)
            for (std::size_t k = 0; k < _cols; ++k) {
                const R& x = at(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < o._cols; ++j) {
                    const R& y = o.at(k, j);
                    if (y.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + x * y;
                }
            }
        return r;
    }

    Matrix operator*(const R& s) const {
        Matrix r(_rows, _cols);
        for (std::size_t i = 0; i < _e.size(); ++i) r._e[i] = _e[i] * s;
        return r;
    }

    Matrix dagger() const {
        Matrix r(_cols, _rows);
        for (std::size_t i = 0; i < _rows; ++i)
            for (std::size_t j = 0; j < _cols; ++j) r.at(j, i) = at(i, j).conj();
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m._rows; ++i) {
            for (std::size_t j = 0; j < m._cols; ++j) {
                if (j) os << "  ";
                os << m.at(i, j);
            }
            os << "\n";
        }
        return os;
    }

private:
    std::size_t _rows, _cols;
    std::vector<R> _e;
};

template <typename R>
bool is_unitary(const Matrix<R>& m) {
    if (!m.square()) return false;
    return m * m.dagger() == Matrix<R>::identity(m.rows());
}

template <typename R>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : _e(dim, R::zero()) {}

    static Vector basis(std::size_t dim, std::size_t i) {
        Vector v(dim);
        v.at(i) = R::one();
        return v;
    }

    std::size_t dim() const { return _e.size(); }
    R& at(std::size_t i) { return _e[i]; }
    const R& at(std::size_t i) const { return _e[i]; }

    bool operator==(const Vector& o) const { return _e == o._e; }
    bool operator!=(const Vector& o) const { return !(*this == o); }

    // Σ x_j · conj(x_j); a unit vector has norm_sq exactly 1.
    R norm_sq() const {
        R acc = R::zero();
        for (const R& x : _e) acc = acc + x * x.conj();
        return acc;
    }

private:
    std::vector<R> _e;
};

template <typename R>
Vector<R> operator*(const Matrix<R>& m, const Vector<R>& v) {
    if (m.cols() != v.dim()) throw DimensionError("matrix-vector product: shape mismatch");
    Vector<R> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        R acc = R::zero();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(i, j).is_zero() || v.at(j).is_zero()) continue;
            acc = acc + m.at(i, j) * v.at(j);
        }
        r.at(i) = acc;
    }
    return r;
}

template <typename R>
Vector<R> column(const Matrix<R>& m, std::size_t j) {
    Vector<R> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v.at(i) = m.at(i, j);
    return v;
}

// sde of a column over Z[1/3, ω]: the max of the entrywise exponents.
inline unsigned column_sde(const Vector<LocalOmega>& v) {
    unsigned f = 0;
    for (std::size_t i = 0; i < v.dim(); ++i) f = std::max(f, v.at(i).sde());
    return f;
}

template <typename R>
Matrix<R> kron(const Matrix<R>& a, const Matrix<R>& b) {
    Matrix<R> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    r.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return r;
}

inline Matrix<LocalZeta> to_zeta_ring(const Matrix<LocalOmega>& m) {
    Matrix<LocalZeta> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = LocalZeta::from_local_omega(m.at(i, j));
    return r;
}

inline Vector<LocalZeta> to_zeta_ring(const Vector<LocalOmega>& v) {
    Vector<LocalZeta> r(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) r.at(i) = LocalZeta::from_local_omega(v.at(i));
    return r;
}

}  // namespace trisynth
