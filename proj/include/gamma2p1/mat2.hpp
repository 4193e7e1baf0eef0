#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace gamma2p1 {

using Complex = std::complex<double>;
using Vec2 = std::array<Complex, 2>;

inline constexpr Complex kI{0.0, 1.0};

/// 2x2 complex matrix, row-major value type.
struct Mat2 {
    std::array<Complex, 4> e{};  // e[2*row + col]

    constexpr Complex& operator()(std::size_t r, std::size_t c) { return e[2 * r + c]; }
    constexpr const Complex& operator()(std::size_t r, std::size_t c) const { return e[2 * r + c]; }

    static constexpr Mat2 identity() { return Mat2{{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}}}; }
    static constexpr Mat2 zero() { return Mat2{}; }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (std::size_t i = 0; i < 4; ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    friend Mat2 operator-(const Mat2& a) {
        Mat2 r;
        for (std::size_t i = 0; i < 4; ++i) r.e[i] = -a.e[i];
        return r;
    }
    friend Mat2 operator*(const Complex& s, const Mat2& a) {
        Mat2 r;
        for (std::size_t i = 0; i < 4; ++i) r.e[i] = s * a.e[i];
        return r;
    }
    friend Mat2 operator*(const Mat2& a, const Complex& s) { return s * a; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 r;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
        return r;
    }
    friend Vec2 operator*(const Mat2& a, const Vec2& v) {
        return {a.e[0] * v[0] + a.e[1] * v[1], a.e[2] * v[0] + a.e[3] * v[1]};
    }
};

inline Complex trace(const Mat2& m) { return m.e[0] + m.e[3]; }
inline Complex det(const Mat2& m) { return m.e[0] * m.e[3] - m.e[1] * m.e[2]; }

inline Mat2 adjoint(const Mat2& m) {
    return Mat2{{std::conj(m.e[0]), std::conj(m.e[2]), std::conj(m.e[1]), std::conj(m.e[3])}};
}

inline Mat2 transpose(const Mat2& m) { return Mat2{{m.e[0], m.e[2], m.e[1], m.e[3]}}; }

/// Max entrywise modulus.
inline double max_abs(const Mat2& m) {
    double r = 0.0;
    for (const auto& z : m.e) r = std::max(r, std::abs(z));
    return r;
}

/// Frobenius norm.
inline double fro_norm(const Mat2& m) {
    double s = 0.0;
    for (const auto& z : m.e) s += std::norm(z);
    return std::sqrt(s);
}

inline Mat2 inverse(const Mat2& m) {
    const Complex d = det(m);
    return (Complex{1.0} / d) * Mat2{{m.e[3], -m.e[1], -m.e[2], m.e[0]}};
}

inline Complex dot(const Vec2& a, const Vec2& b) {
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

inline double norm(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

inline Vec2 operator*(const Complex& s, const Vec2& v) { return {s * v[0], s * v[1]}; }

inline bool all_finite(const Mat2& m) {
    for (const auto& z : m.e)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

}  // namespace gamma2p1
