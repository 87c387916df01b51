#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace polypack {

template <class S>
using Vec = std::vector<S>;

template <class S>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, num::from_int<S>(0)) {}
    Matrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows.begin()->size();
        for (auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (auto v : r) data_.push_back(num::from_int<S>(v));
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = num::from_int<S>(1);
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<S>>& cols) {
        if (cols.empty()) return {};
        Matrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec<S> column(std::size_t j) const {
        Vec<S> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec<S> row(std::size_t i) const { return Vec<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (num::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Vec<S> operator*(const Matrix& a, const Vec<S>& x) {
        if (a.cols_ != x.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
        Vec<S> y(a.rows_, num::from_int<S>(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    friend Matrix operator*(const S& s, Matrix a) {
        for (auto& v : a.data_) v = s * v;
        return a;
    }

    // entrywise equality up to the scalar's notion of equality
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            if (!num::eq(a.data_[i], b.data_[i])) return false;
        return true;
    }

    const std::vector<S>& data() const { return data_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> data_;
};

template <class S>
S dot(const Vec<S>& x, const Vec<S>& y) {
    S s = num::from_int<S>(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

// Rescale by a positive rational so the coefficients are coprime integers.
template <class S>
void make_primitive(Vec<S>& v) {
    if constexpr (!std::is_same_v<S, double>) {
        detail::i128 l = 1, g = 0;
        auto fold = [&](const Rational& r) { l = l / detail::gcd128(l, r.den()) * r.den(); };
        for (auto& x : v) {
            fold(x.a());
            fold(x.b());
        }
        for (auto& x : v)
            for (const Rational* r : {&x.a(), &x.b()}) g = detail::gcd128(g, detail::i128(r->num()) * (l / r->den()));
        if (g == 0) return;
        S scale(Rational::from128(l, g));
        for (auto& x : v) x = x * scale;
    }
}

template <class S>
bool vec_eq(const Vec<S>& x, const Vec<S>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!num::eq(x[i], y[i])) return false;
    return true;
}

namespace detail {

template <class S>
double magnitude(const S& x) {
    return std::abs(num::to_double(x));
}

// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<std::size_t> rref(Matrix<S>& a) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t best = a.rows();
        double bestmag = -1;
        for (std::size_t i = r; i < a.rows(); ++i) {
            if (num::is_zero(a(i, c))) continue;
            double m = magnitude(a(i, c));
            if (m > bestmag) {
                best = i;
                bestmag = m;
            }
            if constexpr (!std::is_same_v<S, double>) break;
        }
        if (best == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
        S inv = num::from_int<S>(1) / a(r, c);
        for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || num::is_zero(a(i, c))) continue;
            S f = a(i, c);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class S>
std::size_t rank(Matrix<S> a) {
    return detail::rref(a).size();
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
    std::size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = num::from_int<S>(1);
    }
    auto piv = detail::rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Solves A x = b. Returns one solution (free variables zero) or nullopt if inconsistent.
template <class S>
std::optional<Vec<S>> solve(const Matrix<S>& a, const Vec<S>& b) {
    Matrix<S> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = detail::rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
    Vec<S> x(a.cols(), num::from_int<S>(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols());
    return x;
}

// Basis of the right null space.
template <class S>
std::vector<Vec<S>> nullspace(Matrix<S> a) {
    auto piv = detail::rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec<S>> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<S> v(a.cols(), num::from_int<S>(0));
        v[f] = num::from_int<S>(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Indices of a maximal linearly independent subset of the given vectors, greedily in order.
template <class S>
std::vector<std::size_t> independent_subset(const std::vector<Vec<S>>& vs) {
    std::vector<std::size_t> chosen;
    std::vector<Vec<S>> cols;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        cols.push_back(vs[i]);
        if (rank(Matrix<S>::from_columns(cols)) == cols.size())
            chosen.push_back(i);
        else
            cols.pop_back();
    }
    return chosen;
}

template <class S>
S determinant(Matrix<S> a) {
    std::size_t n = a.rows();
    S det = num::from_int<S>(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && num::is_zero(a(p, c))) ++p;
        if (p == n) return num::from_int<S>(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (num::is_zero(a(i, c))) continue;
            S f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

template <class S>
Matrix<double> to_double(const Matrix<S>& a) {
    Matrix<double> d(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) d(i, j) = num::to_double(a(i, j));
    return d;
}

template <class S>
Vec<double> to_double(const Vec<S>& v) {
    Vec<double> d;
    for (auto& x : v) d.push_back(num::to_double(x));
    return d;
}

}  // namespace polypack
