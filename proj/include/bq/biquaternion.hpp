#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "bq/errors.hpp"

namespace bq {

using cplx = std::complex<double>;

/// Quaternion with complex coefficients: q = w + x*e1 + y*e2 + z*e3.
///
/// Basis law: e_i * e_j = -delta_ij + eps_ijk * e_k, the ordinary Hamilton
/// table extended bilinearly over complex scalars. The algebra has zero
/// divisors (null elements with q * bar(q) = 0), which are legal values
/// everywhere except inverse().
struct Biquaternion {
    cplx w{}, x{}, y{}, z{};

    constexpr Biquaternion() = default;
    constexpr Biquaternion(cplx w_, cplx x_, cplx y_, cplx z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Biquaternion scalar(cplx s) { return {s, 0.0, 0.0, 0.0}; }
    static constexpr Biquaternion vector(cplx vx, cplx vy, cplx vz) { return {0.0, vx, vy, vz}; }

    constexpr bool operator==(const Biquaternion&) const = default;

    Biquaternion operator-() const { return {-w, -x, -y, -z}; }

    Biquaternion& operator+=(const Biquaternion& o) {
        w += o.w; x += o.x; y += o.y; z += o.z;
        return *this;
    }
    Biquaternion& operator-=(const Biquaternion& o) {
        w -= o.w; x -= o.x; y -= o.y; z -= o.z;
        return *this;
    }
    Biquaternion& operator*=(cplx s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    Biquaternion& operator/=(cplx s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }

    friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
    friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
    friend Biquaternion operator*(Biquaternion a, cplx s) { return a *= s; }
    friend Biquaternion operator*(cplx s, Biquaternion a) { return a *= s; }
    friend Biquaternion operator*(Biquaternion a, double s) { return a *= cplx(s); }
    friend Biquaternion operator*(double s, Biquaternion a) { return a *= cplx(s); }
    friend Biquaternion operator/(Biquaternion a, cplx s) { return a /= s; }
    friend Biquaternion operator/(Biquaternion a, double s) { return a /= cplx(s); }

    // Hamilton product, complex-bilinear.
    friend Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

inline constexpr Biquaternion one() { return Biquaternion::scalar(1.0); }
inline constexpr Biquaternion e1() { return Biquaternion::vector(1.0, 0.0, 0.0); }
inline constexpr Biquaternion e2() { return Biquaternion::vector(0.0, 1.0, 0.0); }
inline constexpr Biquaternion e3() { return Biquaternion::vector(0.0, 0.0, 1.0); }

inline cplx scalar_part(const Biquaternion& q) { return q.w; }
inline Biquaternion vector_part(const Biquaternion& q) { return {0.0, q.x, q.y, q.z}; }

/// Euclidean magnitude sqrt(sum |coefficient|^2); zero iff q == 0.
inline double abs(const Biquaternion& q) {
    return std::sqrt(std::norm(q.w) + std::norm(q.x) + std::norm(q.y) + std::norm(q.z));
}

/// Quaternion conjugation: negates the vector part. Anti-automorphism.
inline Biquaternion bar(const Biquaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

/// Complex conjugation of all four coefficients. Automorphism.
inline Biquaternion star(const Biquaternion& q) {
    return {std::conj(q.w), std::conj(q.x), std::conj(q.y), std::conj(q.z)};
}

/// Bi-conjugation star(bar(q)). Anti-automorphism.
inline Biquaternion tilde(const Biquaternion& q) {
    return {std::conj(q.w), -std::conj(q.x), -std::conj(q.y), -std::conj(q.z)};
}

enum class Involution { bar, star, tilde };

inline Biquaternion involution(const Biquaternion& q, Involution kind) {
    switch (kind) {
        case Involution::bar: return bar(q);
        case Involution::star: return star(q);
        case Involution::tilde: return tilde(q);
    }
    throw Error("unknown involution kind");
}

/// Complex semi-norm N(q) = q * bar(q) = w^2 + x^2 + y^2 + z^2.
/// Multiplicative, but not positive: null elements have N = 0.
inline cplx semi_norm(const Biquaternion& q) {
    return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

namespace detail {

inline bool is_vector(const Biquaternion& q, double rel_tol = 1e-9) {
    return std::abs(q.w) <= rel_tol * std::max(1.0, abs(q));
}

inline bool is_real_unit_vector(const Biquaternion& u, double tol = 1e-9) {
    if (!is_vector(u, tol)) return false;
    const double imag =
        std::sqrt(u.x.imag() * u.x.imag() + u.y.imag() * u.y.imag() + u.z.imag() * u.z.imag());
    if (imag > tol) return false;
    const double len2 = u.x.real() * u.x.real() + u.y.real() * u.y.real() + u.z.real() * u.z.real();
    return std::abs(len2 - 1.0) <= tol;
}

} // namespace detail

/// Complex Euclidean dot of two pure vectors: sum_k a_k * b_k. Symmetric and
/// bilinear, no conjugation; cdot(v, v) = 0 characterizes null vectors.
inline cplx cdot(const Biquaternion& a, const Biquaternion& b) {
    if (!detail::is_vector(a) || !detail::is_vector(b))
        throw std::domain_error("cdot requires pure-vector arguments");
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

/// exp(c*u) = cos(c) + u*sin(c) for a real unit vector u and complex angle c.
/// Real c rotates about u, imaginary c boosts along it; the result is always
/// a unit biquaternion.
inline Biquaternion exp_along(const Biquaternion& u, cplx c) {
    if (!detail::is_real_unit_vector(u))
        throw std::domain_error("exp_along requires a real unit vector axis");
    return Biquaternion::scalar(std::cos(c)) + u * std::sin(c);
}

/// Unit biquaternion (|N(L) - 1| <= 1e-9); acts as a Lorentz transformation
/// on vectors via L () bar(L).
struct Rotor {
    static constexpr double kUnitTol = 1e-9;

    explicit Rotor(const Biquaternion& q) : value_(q) {
        if (std::abs(semi_norm(q) - cplx(1.0)) > kUnitTol)
            throw std::domain_error("rotor must be a unit biquaternion");
    }

    const Biquaternion& value() const { return value_; }

  private:
    Biquaternion value_;
};

/// L * q * bar(L). Preserves scalar parts, the vector/scalar split, and the
/// cdot form on vectors.
inline Biquaternion rotor_apply(const Rotor& L, const Biquaternion& q) {
    return L.value() * q * bar(L.value());
}

/// bar(q) / N(q). Throws NullElementError when N(q) = 0 (relative test).
inline Biquaternion inverse(const Biquaternion& q) {
    const cplx n = semi_norm(q);
    const double scale = abs(q);
    if (std::abs(n) <= 1e-12 * std::max(scale * scale, 1e-300))
        throw NullElementError();
    return bar(q) / n;
}

/// Principal complex square root: Re >= 0, the boundary Re = 0 resolved to
/// Im >= 0 (so sqrt of a negative real is +i*sqrt|z|).
inline cplx sqrt_principal(cplx z) {
    cplx r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) r = -r;
    return r;
}

/// exp of a pure complex vector v: cos(lam) + v*sin(lam)/lam with
/// lam = sqrt_principal(cdot(v,v)); unit for every v.
inline Biquaternion exp_vector(const Biquaternion& v) {
    if (!detail::is_vector(v)) throw std::domain_error("exp_vector requires a pure vector");
    const cplx lam2 = v.x * v.x + v.y * v.y + v.z * v.z;
    const cplx lam = sqrt_principal(lam2);
    cplx sinc;
    if (std::abs(lam) < 1e-4) {
        sinc = 1.0 - lam2 / 6.0 + lam2 * lam2 / 120.0;
    } else {
        sinc = std::sin(lam) / lam;
    }
    return Biquaternion::scalar(std::cos(lam)) + v * sinc;
}

} // namespace bq
