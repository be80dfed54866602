#pragma once

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <cmath>
#include <utility>
#include <vector>

#include "bq/biquaternion.hpp"
#include "bq/errors.hpp"

namespace bq {

inline constexpr double kNullFieldRelTol = 1e-9;  // relative null-field rejection
inline constexpr double kDegenerateAxisTol = 1e-8; // |1 + f.u| gate for the rotor formula

/// Polar data of a non-null field: F = rho * e^{i*beta} * L u bar(L) with
/// rho > 0, beta the duality angle, L a rotor and u a fixed real unit axis.
/// The associated spinor is psi = sqrt(rho) * e^{i*beta/2} * L, so beta and
/// beta + 2*pi give the same field through opposite spinor signs.
struct SpinorDecomposition {
    double rho;
    double beta;
    Rotor L;
    Biquaternion u;

    SpinorDecomposition(double rho_, double beta_, Rotor L_, const Biquaternion& u_)
        : rho(rho_), beta(beta_), L(std::move(L_)), u(u_) {
        if (!(rho > 0.0)) throw std::domain_error("decomposition requires rho > 0");
        if (!detail::is_real_unit_vector(u)) throw std::domain_error("axis must be a real unit vector");
    }

    Biquaternion spinor() const {
        return std::sqrt(rho) * std::exp(cplx(0.0, beta / 2.0)) * L.value();
    }
};

/// Duality invariant of a non-null field: the principal root of cdot(F, F)
/// written as rho * e^{i*beta}, rho > 0. Throws NullFieldError when
/// |cdot(F,F)| <= 1e-9 * |F|^2.
inline std::pair<double, double> invariant_scale(const Biquaternion& F) {
    const cplx s = cdot(F, F);
    const double n = abs(F);
    if (std::abs(s) <= kNullFieldRelTol * n * n) throw NullFieldError();
    const cplx lambda = sqrt_principal(s);
    return {std::abs(lambda), std::arg(lambda)};
}

/// psi u bar(psi) = rho * e^{i*beta} * L u bar(L); always a pure vector.
inline Biquaternion compose(const SpinorDecomposition& dec) {
    const Biquaternion psi = dec.spinor();
    return psi * dec.u * bar(psi);
}

/// Closed-form rotor carrying the axis u onto the field direction f = F/lambda:
/// L = (f + u) / sqrt(2 (1 + f.u)). Degenerates when f.u -> -1, in which case
/// the caller should retry with -u.
inline SpinorDecomposition decompose(const Biquaternion& F, const Biquaternion& u) {
    if (!detail::is_real_unit_vector(u)) throw std::domain_error("axis must be a real unit vector");
    const auto [rho, beta] = invariant_scale(F);
    const cplx lambda = rho * std::exp(cplx(0.0, beta));
    const Biquaternion f = F / lambda;
    const cplx fu = cdot(f, u);
    if (std::abs(1.0 + fu) <= kDegenerateAxisTol) throw DegenerateAxisError();
    const Biquaternion L = (f + u) / sqrt_principal(2.0 * (1.0 + fu));
    return {rho, beta, Rotor(L), u};
}

/// Replaces L by L * exp(c*u). Leaves compose() unchanged for every complex
/// c; the new rotor is still unit since exp(c*u) * bar(exp(c*u)) = 1.
inline SpinorDecomposition gauge_shift(const SpinorDecomposition& dec, cplx c) {
    return {dec.rho, dec.beta, Rotor(dec.L.value() * exp_along(dec.u, c)), dec.u};
}

/// Recovers c with L2 = L1 * exp(c*u) from the scalar and u-components of
/// bar(L1) * L2. Throws NotOnOrbitError when components outside span{1, u}
/// exceed 1e-9.
inline cplx gauge_log(const Rotor& L1, const Rotor& L2, const Biquaternion& u) {
    if (!detail::is_real_unit_vector(u)) throw std::domain_error("axis must be a real unit vector");
    const Biquaternion g = bar(L1.value()) * L2.value();
    const cplx along = g.x * u.x.real() + g.y * u.y.real() + g.z * u.z.real();
    const Biquaternion rest = vector_part(g) - along * u;
    if (std::abs(g.w) * 0.0 + abs(rest) > 1e-9)
        throw NotOnOrbitError();
    // g = cos(c) + u sin(c) = e^{ic} under (scalar, u-component) -> alpha + i*upsilon
    const cplx c = cplx(0.0, -1.0) * std::log(g.w + cplx(0.0, 1.0) * along);
    return c;
}

/// Result of the degrees-of-freedom analysis at one decomposition: the
/// singular spectrum of the 6x8 real Jacobian of (rho, beta, rotor chart) ->
/// F, padded to 8 entries with the structural zeros of the rank-deficient
/// map. gauge_overlap is the squared smallest principal-angle cosine between
/// the numerical null space and the two exp(c*u) chart directions.
struct DofResult {
    int rank = 0;
    int nullity = 0;
    std::vector<double> singular_values; // 8 entries, descending
    double gauge_overlap = 0.0;
};

inline constexpr double kDofRankRelTol = 1e-4;
inline constexpr double kDofNullRelTol = 1e-8;

namespace detail {

/// Right-handed real orthonormal triad {u, a, b}.
inline void real_triad(const Biquaternion& u, std::array<double, 3>& a, std::array<double, 3>& b) {
    const std::array<double, 3> un{u.x.real(), u.y.real(), u.z.real()};
    // seed with the axis least aligned with u
    std::array<double, 3> seed{1.0, 0.0, 0.0};
    if (std::abs(un[1]) < std::abs(un[0])) seed = {0.0, 1.0, 0.0};
    if (std::abs(un[2]) < std::abs(un[0]) && std::abs(un[2]) < std::abs(un[1]))
        seed = {0.0, 0.0, 1.0};
    a = {un[1] * seed[2] - un[2] * seed[1], un[2] * seed[0] - un[0] * seed[2],
         un[0] * seed[1] - un[1] * seed[0]};
    const double la = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    for (double& c : a) c /= la;
    b = {un[1] * a[2] - un[2] * a[1], un[2] * a[0] - un[0] * a[2], un[0] * a[1] - un[1] * a[0]};
}

} // namespace detail

/// Numerical rank of the 8-real-parameter map (rho, beta, unit-shell rotor
/// chart) -> 6 real field components, by 4th-order-free central differences
/// and SVD. The rotor chart is L * exp_vector(s), with the two gauge
/// directions u and i*u included explicitly as chart coordinates 2 and 3.
/// Expected outcome for a non-degenerate decomposition: rank 6, nullity 2,
/// null space aligned with the gauge plane.
inline DofResult dof_rank(const SpinorDecomposition& dec) {
    std::array<double, 3> a{}, b{};
    detail::real_triad(dec.u, a, b);
    const Biquaternion av = Biquaternion::vector(a[0], a[1], a[2]);
    const Biquaternion bv = Biquaternion::vector(b[0], b[1], b[2]);
    const cplx iu(0.0, 1.0);
    // chart directions for the rotor factor; 0,1 span the gauge orbit
    const std::array<Biquaternion, 6> dirs = {dec.u, iu * dec.u, av, iu * av, bv, iu * bv};

    auto field_at = [&](const std::array<double, 8>& p) {
        const Biquaternion L = dec.L.value() *
                               exp_vector(p[2] * dirs[0] + p[3] * dirs[1] + p[4] * dirs[2] +
                                          p[5] * dirs[3] + p[6] * dirs[4] + p[7] * dirs[5]);
        const cplx scale = (dec.rho + p[0]) * std::exp(cplx(0.0, dec.beta + p[1]));
        const Biquaternion F = scale * (L * dec.u * bar(L));
        return std::array<double, 6>{F.x.real(), F.x.imag(), F.y.real(),
                                     F.y.imag(), F.z.real(), F.z.imag()};
    };

    const double h = 1e-4;
    Eigen::MatrixXd J(6, 8);
    for (int k = 0; k < 8; ++k) {
        const double hk = (k == 0) ? h * std::max(1.0, dec.rho) : h;
        std::array<double, 8> pp{}, pm{};
        pp[k] = hk;
        pm[k] = -hk;
        const auto fp = field_at(pp);
        const auto fm = field_at(pm);
        for (int r = 0; r < 6; ++r) J(r, k) = (fp[r] - fm[r]) / (2.0 * hk);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    DofResult out;
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    out.singular_values.resize(8, 0.0); // structural zeros of the 6x8 map
    const double smax = out.singular_values.empty() ? 0.0 : out.singular_values[0];

    std::vector<int> null_cols;
    for (int k = 0; k < 8; ++k) {
        const double s = out.singular_values[static_cast<std::size_t>(k)];
        if (s >= kDofRankRelTol * smax) ++out.rank;
        if (s <= kDofNullRelTol * smax) null_cols.push_back(k);
    }
    out.nullity = static_cast<int>(null_cols.size());

    // principal angles between the numerical null space and the gauge plane
    // (chart coordinates 2 and 3)
    if (!null_cols.empty()) {
        Eigen::MatrixXd NG(2, null_cols.size());
        const Eigen::MatrixXd& V = svd.matrixV();
        for (std::size_t j = 0; j < null_cols.size(); ++j) {
            NG(0, static_cast<Eigen::Index>(j)) = V(2, null_cols[j]);
            NG(1, static_cast<Eigen::Index>(j)) = V(3, null_cols[j]);
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> ang(NG);
        const auto cosines = ang.singularValues();
        const double cmin = cosines(cosines.size() - 1);
        out.gauge_overlap = cmin * cmin;
    }
    return out;
}

enum class PhaseConvention { bar, bar_star };

/// Evaluates the field bilinear after replacing psi by e^{i*theta} * psi.
/// With the bar pairing the phase acts as a duality rotation,
/// psi u bar(psi) -> e^{2i*theta} F; with the bar-star pairing the result is
/// independent of theta.
inline Biquaternion phase_probe(const SpinorDecomposition& dec, double theta,
                                PhaseConvention convention) {
    const Biquaternion psi = std::exp(cplx(0.0, theta)) * dec.spinor();
    switch (convention) {
        case PhaseConvention::bar: return psi * dec.u * bar(psi);
        case PhaseConvention::bar_star: return psi * dec.u * bar(star(psi));
    }
    throw Error("unknown phase convention");
}

} // namespace bq
