#pragma once

#include <cmath>

#include "qn/types.hpp"

namespace qn {

/// Two-photon quadrature vector {cosine, sine}. Depending on context it is
/// used as a column (a field) or as a row (a readout coefficient).
struct Quad2 {
    Complex c{};
    Complex s{};

    friend Quad2 operator+(const Quad2& a, const Quad2& b) { return {a.c + b.c, a.s + b.s}; }
    friend Quad2 operator-(const Quad2& a, const Quad2& b) { return {a.c - b.c, a.s - b.s}; }
    friend Quad2 operator*(Complex k, const Quad2& v) { return {k * v.c, k * v.s}; }
    friend Quad2 operator*(const Quad2& v, Complex k) { return k * v; }
    friend bool operator==(const Quad2&, const Quad2&) = default;

    /// Bilinear row-times-column product a^T b (no conjugation).
    friend Complex dot(const Quad2& a, const Quad2& b) { return a.c * b.c + a.s * b.s; }

    Real norm_sq() const { return std::norm(c) + std::norm(s); }
    Real norm() const { return std::sqrt(norm_sq()); }
    bool is_zero() const { return c == Complex{} && s == Complex{}; }
};

/// 2x2 complex matrix in quadrature space, rows/cols ordered {c, s}.
struct Mat2 {
    Complex cc{}, cs{};
    Complex sc{}, ss{};

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 zero() { return {}; }
    /// k * [[1, 0], [lower, 1]], the tuned optomechanical form.
    static Mat2 unit_lower(Complex k, Complex lower) { return {k, 0, k * lower, k}; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.cc * b.cc + a.cs * b.sc, a.cc * b.cs + a.cs * b.ss,
                a.sc * b.cc + a.ss * b.sc, a.sc * b.cs + a.ss * b.ss};
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.cc + b.cc, a.cs + b.cs, a.sc + b.sc, a.ss + b.ss};
    }
    friend Mat2 operator*(Complex k, const Mat2& m) {
        return {k * m.cc, k * m.cs, k * m.sc, k * m.ss};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    /// M v, v as a column.
    friend Quad2 operator*(const Mat2& m, const Quad2& v) {
        return {m.cc * v.c + m.cs * v.s, m.sc * v.c + m.ss * v.s};
    }
    /// v^T M, v as a row.
    friend Quad2 operator*(const Quad2& v, const Mat2& m) {
        return {v.c * m.cc + v.s * m.sc, v.c * m.cs + v.s * m.ss};
    }

    Mat2 adjoint() const { return {std::conj(cc), std::conj(sc), std::conj(cs), std::conj(ss)}; }
    Mat2 transpose() const { return {cc, sc, cs, ss}; }
    Complex det() const { return cc * ss - cs * sc; }
};

}  // namespace qn
