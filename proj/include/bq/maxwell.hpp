#pragma once

#include <array>
#include <utility>
#include <vector>

#include "bq/fields.hpp"
#include "bq/report.hpp"

namespace bq {

// Biquaternion form of Maxwell's equations.
//
// Operator convention: D = i*d_t - e1*d_1 - e2*d_2 - e3*d_3 acting by left
// multiplication, and a mirrored operator acting on the right of the
// coefficient-conjugated field F* = E - iB. With J = charge - i*current,
//
//   left - right                = 2i (div B) - 2 (d_t B + curl E)
//   (left + right)/2 - J        = (div E - charge) + i (d_t E - curl B + current)
//
// so the difference vanishes exactly on the homogeneous Maxwell pair and the
// sum reproduces the source pair. Note the right slot uses plain coefficient
// conjugation: on pure vectors the composed involution star(bar(F)) equals
// -F*, and switching to that sign merely swaps which combination is called
// homogeneous. The assignment here is pinned by the classical div/curl
// correspondence that equivalence_check enforces.

namespace detail {

/// Left operator product: i*d_t F - sum_k e_k (d_k F).
inline Biquaternion dstar_left(const EMField& f, const Event& e) {
    const cplx i(0.0, 1.0);
    Biquaternion out = i * f.partial(0, e);
    out -= e1() * f.partial(1, e);
    out -= e2() * f.partial(2, e);
    out -= e3() * f.partial(3, e);
    return out;
}

/// Right operator product on the conjugated field: i*d_t F* - sum_k (d_k F*) e_k.
inline Biquaternion dstar_right(const EMField& f, const Event& e) {
    const cplx i(0.0, 1.0);
    Biquaternion out = i * star(f.partial(0, e));
    out -= star(f.partial(1, e)) * e1();
    out -= star(f.partial(2, e)) * e2();
    out -= star(f.partial(3, e)) * e3();
    return out;
}

} // namespace detail

/// The two first-order operator products whose difference and sum make up the
/// field equations.
inline std::pair<Biquaternion, Biquaternion> dstar_products(const EMField& f, const Event& e) {
    return {detail::dstar_left(f, e), detail::dstar_right(f, e)};
}

/// hom = left - right (vanishes for any field obeying the homogeneous pair);
/// src = (left + right)/2 - J (vanishes when the declared source is correct).
inline std::pair<Biquaternion, Biquaternion> maxwell_residual(const EMField& f, const Event& e) {
    const auto [left, right] = dstar_products(f, e);
    const Biquaternion hom = left - right;
    const Biquaternion src = (left + right) / 2.0 - f.source(e).packed();
    return {hom, src};
}

/// Textbook div/curl residuals, componentwise:
///   [0]    div E - charge
///   [1..3] curl B - d_t E - current
///   [4]    div B
///   [5..7] curl E + d_t B
inline std::array<double, 8> classical_residual(const EMField& f, const Event& e) {
    const Biquaternion dt = f.partial(0, e);
    const Biquaternion d1 = f.partial(1, e);
    const Biquaternion d2 = f.partial(2, e);
    const Biquaternion d3 = f.partial(3, e);
    const SourceDensity J = f.source(e);

    // components: dE[k][j] = d_k E_j, similarly for B
    auto comp = [](const Biquaternion& q, int j) { return j == 0 ? q.x : (j == 1 ? q.y : q.z); };
    double dE[4][3], dB[4][3];
    const Biquaternion* parts[4] = {&dt, &d1, &d2, &d3};
    for (int mu = 0; mu < 4; ++mu)
        for (int j = 0; j < 3; ++j) {
            dE[mu][j] = comp(*parts[mu], j).real();
            dB[mu][j] = comp(*parts[mu], j).imag();
        }

    const double divE = dE[1][0] + dE[2][1] + dE[3][2];
    const double divB = dB[1][0] + dB[2][1] + dB[3][2];
    const std::array<double, 3> curlE{dE[2][2] - dE[3][1], dE[3][0] - dE[1][2],
                                      dE[1][1] - dE[2][0]};
    const std::array<double, 3> curlB{dB[2][2] - dB[3][1], dB[3][0] - dB[1][2],
                                      dB[1][1] - dB[2][0]};

    return {divE - J.charge,
            curlB[0] - dE[0][0] - J.current[0],
            curlB[1] - dE[0][1] - J.current[1],
            curlB[2] - dE[0][2] - J.current[2],
            divB,
            curlE[0] + dB[0][0],
            curlE[1] + dB[0][1],
            curlE[2] + dB[0][2]};
}

/// Asserts the fixed real-linear correspondence between the biquaternion and
/// classical residuals at every event. This is an identity in the partial
/// derivatives, so it must hold for arbitrary smooth fields, Maxwell
/// solutions or not.
inline Report equivalence_check(const EMField& f, const std::vector<Event>& events,
                                double tol = 1e-10) {
    double worst = 0.0;
    for (const Event& e : events) {
        const auto [hom, src] = maxwell_residual(f, e);
        const auto c = classical_residual(f, e);

        const double mismatches[16] = {
            hom.w.real(),
            hom.w.imag() - 2.0 * c[4],
            hom.x.real() + 2.0 * c[5],
            hom.y.real() + 2.0 * c[6],
            hom.z.real() + 2.0 * c[7],
            hom.x.imag(),
            hom.y.imag(),
            hom.z.imag(),
            src.w.real() - c[0],
            src.w.imag(),
            src.x.real(),
            src.y.real(),
            src.z.real(),
            src.x.imag() + c[1],
            src.y.imag() + c[2],
            src.z.imag() + c[3],
        };
        for (double m : mismatches) worst = std::max(worst, std::abs(m));
    }
    Report r = make_report("maxwell_equivalence:" + f.name, worst, tol);
    r.details.push_back({"events", static_cast<double>(events.size())});
    return r;
}

/// Max |hom| and |src| over the events; passes when both residuals stay
/// within tol (1e-10 for analytic partials, 1e-6 for finite differences).
inline Report residual_check(const EMField& f, const std::vector<Event>& events,
                             double tol = 1e-10) {
    double worst_hom = 0.0, worst_src = 0.0;
    for (const Event& e : events) {
        const auto [hom, src] = maxwell_residual(f, e);
        worst_hom = std::max(worst_hom, abs(hom));
        worst_src = std::max(worst_src, abs(src));
    }
    Report r = make_report("maxwell_residual:" + f.name, std::max(worst_hom, worst_src), tol);
    r.details.push_back({"max_hom", worst_hom});
    r.details.push_back({"max_src", worst_src});
    return r;
}

/// Bosonic time reversal: E'(t,x) = E(-t,x), B'(t,x) = -B(-t,x), current
/// flipped. Maps solutions to solutions and squares to the identity
/// pointwise (T^2 = +1).
inline EMField time_reversal_em(const EMField& f) {
    auto flip = [](const Event& e) { return Event{-e.t, e.x1, e.x2, e.x3}; };
    EMField out;
    out.name = f.name + "+treversed";
    auto eval = f.eval;
    auto partial = f.partial;
    auto source = f.source;
    out.eval = [eval, flip](const Event& e) { return star(eval(flip(e))); };
    out.partial = [partial, flip](int mu, const Event& e) {
        const Biquaternion p = star(partial(mu, flip(e)));
        return mu == 0 ? -p : p;
    };
    out.source = [source, flip](const Event& e) {
        SourceDensity s = source(flip(e));
        s.current = {-s.current[0], -s.current[1], -s.current[2]};
        return s;
    };
    return out;
}

} // namespace bq
