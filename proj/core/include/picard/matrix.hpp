#pragma once

#include "picard/gaussian.hpp"

#include <array>
#include <initializer_list>
#include <ostream>

namespace picard {

/// Dense NxN matrix over GaussInt or GaussRat.
template <class T, int N>
struct Matrix {
    std::array<T, static_cast<std::size_t>(N) * N> e{};

    T& operator()(int i, int j) { return e[static_cast<std::size_t>(i) * N + j]; }
    const T& operator()(int i, int j) const { return e[static_cast<std::size_t>(i) * N + j]; }

    static Matrix identity() {
        Matrix m;
        for (int i = 0; i < N; ++i) m(i, i) = T(1, 0);
        return m;
    }

    Matrix conj_transpose() const {
        Matrix m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m(i, j) = (*this)(j, i).conj();
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix m;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                T acc = a(i, 0) * b(0, j);
                for (int k = 1; k < N; ++k) acc += a(i, k) * b(k, j);
                m(i, j) = acc;
            }
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.e == b.e; }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
};

using Mat2z = Matrix<GaussInt, 2>;
using Mat2q = Matrix<GaussRat, 2>;
using Mat4z = Matrix<GaussInt, 4>;
using Mat4q = Matrix<GaussRat, 4>;

template <class T>
struct Vec4 {
    std::array<T, 4> v{};
    T& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    const T& operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Vec4& a, const Vec4& b) { return a.v == b.v; }
};

using Vec4q = Vec4<GaussRat>;

template <class T>
Vec4<T> operator*(const Matrix<T, 4>& m, const Vec4<T>& x) {
    Vec4<T> y;
    for (int i = 0; i < 4; ++i) {
        T acc = m(i, 0) * x[0];
        for (int k = 1; k < 4; ++k) acc += m(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

inline Mat4q widen(const Mat4z& m) {
    Mat4q q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) q(i, j) = GaussRat(m(i, j));
    return q;
}

inline Mat2q widen(const Mat2z& m) {
    Mat2q q;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) q(i, j) = GaussRat(m(i, j));
    return q;
}

/// Exact narrowing; throws if any entry has a denominator.
inline Mat4z narrow(const Mat4q& m) {
    Mat4z z;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) z(i, j) = m(i, j).to_gauss_int();
    return z;
}

inline Mat2z narrow(const Mat2q& m) {
    Mat2z z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z(i, j) = m(i, j).to_gauss_int();
    return z;
}

template <class T, int N>
std::ostream& operator<<(std::ostream& os, const Matrix<T, N>& m) {
    for (int i = 0; i < N; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < N; ++j) os << m(i, j) << (j + 1 < N ? ", " : "");
        os << "]" << (i + 1 < N ? ",\n" : "]");
    }
    return os;
}

} // namespace picard
