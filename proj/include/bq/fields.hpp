#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bq/biquaternion.hpp"
#include "bq/errors.hpp"
#include "bq/report.hpp"

namespace bq {

/// Spacetime point, natural units (c = 1). Coordinate index mu: 0 = t, 1..3 = x_k.
struct Event {
    double t = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    double coord(int mu) const {
        switch (mu) {
            case 0: return t;
            case 1: return x1;
            case 2: return x2;
            case 3: return x3;
        }
        throw std::out_of_range("coordinate index must be 0..3");
    }

    Event shifted(int mu, double d) const {
        Event e = *this;
        switch (mu) {
            case 0: e.t += d; break;
            case 1: e.x1 += d; break;
            case 2: e.x2 += d; break;
            case 3: e.x3 += d; break;
            default: throw std::out_of_range("coordinate index must be 0..3");
        }
        return e;
    }

    std::array<double, 3> spatial() const { return {x1, x2, x3}; }
    double radius() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }
};

/// Charge/current pair, packaged as the biquaternion J = charge - i*current.
struct SourceDensity {
    double charge = 0.0;
    std::array<double, 3> current{0.0, 0.0, 0.0};

    Biquaternion packed() const {
        const cplx i(0.0, 1.0);
        return {charge, -i * current[0], -i * current[1], -i * current[2]};
    }
};

/// Electromagnetic field as the pure-vector biquaternion F = E + iB, with
/// analytic partial derivatives and a declared source. Evaluators are pure;
/// sharing one field across threads is safe.
struct EMField {
    std::string name;
    std::function<Biquaternion(const Event&)> eval;
    std::function<Biquaternion(int, const Event&)> partial; // mu in 0..3
    std::function<SourceDensity(const Event&)> source;
};

/// Biquaternion-valued spacetime field (not restricted to vectors), with
/// analytic first partials and, when available, second partials.
struct SpinorField {
    std::string name;
    std::function<Biquaternion(const Event&)> eval;
    std::function<Biquaternion(int, const Event&)> partial;
    std::function<Biquaternion(int, int, const Event&)> second; // optional

    bool has_second() const { return static_cast<bool>(second); }
};

/// Central-difference stencil parameters. The step is scaled per coordinate:
/// h_mu = step * max(1, |coordinate_mu|).
struct FDParams {
    double step = 1e-5;
    int order = 4; // fixed 4th-order stencil
    double tolerance = 1e-6;
};

namespace detail {

/// 4th-order central difference of a biquaternion-valued evaluator.
inline Biquaternion fd4_partial(const std::function<Biquaternion(const Event&)>& f, int mu,
                                const Event& e, double base_step) {
    const double h = base_step * std::max(1.0, std::abs(e.coord(mu)));
    const Biquaternion f2p = f(e.shifted(mu, 2.0 * h));
    const Biquaternion f1p = f(e.shifted(mu, h));
    const Biquaternion f1m = f(e.shifted(mu, -h));
    const Biquaternion f2m = f(e.shifted(mu, -2.0 * h));
    return (-1.0 * f2p + 8.0 * f1p - 8.0 * f1m + 1.0 * f2m) / (12.0 * h);
}

} // namespace detail

// --- analytic field catalog ---------------------------------------------

/// Uniform field F = E0 + i*B0; source-free, all partials vanish.
inline EMField constant_field(std::array<double, 3> E, std::array<double, 3> B) {
    const cplx i(0.0, 1.0);
    const Biquaternion F{0.0, E[0] + i * B[0], E[1] + i * B[1], E[2] + i * B[2]};
    EMField f;
    f.name = "constant";
    f.eval = [F](const Event&) { return F; };
    f.partial = [](int, const Event&) { return Biquaternion{}; };
    f.source = [](const Event&) { return SourceDensity{}; };
    return f;
}

/// Uniform parallel electric and magnetic fields along e3; the canonical
/// frame of a duality-reduced non-null field.
inline EMField parallel_field(double E0, double B0) {
    EMField f = constant_field({0.0, 0.0, E0}, {0.0, 0.0, B0});
    f.name = "parallel";
    return f;
}

inline constexpr double kCoulombGuardRadius = 1e-3;

/// Point charge: E = q * x / |x|^3, B = 0. Singular within radius 1e-3 of
/// the spatial origin; source-free elsewhere.
inline EMField coulomb_field(double q) {
    auto guard = [](const Event& e) {
        if (e.radius() < kCoulombGuardRadius)
            throw SingularPointError("coulomb field evaluated too close to the origin");
    };
    EMField f;
    f.name = "coulomb";
    f.eval = [q, guard](const Event& e) {
        guard(e);
        const double r = e.radius();
        const double s = q / (r * r * r);
        return Biquaternion::vector(s * e.x1, s * e.x2, s * e.x3);
    };
    f.partial = [q, guard](int mu, const Event& e) {
        guard(e);
        if (mu == 0) return Biquaternion{};
        const double r = e.radius();
        const double r5 = std::pow(r, 5);
        const auto xs = e.spatial();
        const double xk = xs[mu - 1];
        cplx comps[3];
        for (int j = 0; j < 3; ++j) {
            const double delta = (j == mu - 1) ? 1.0 : 0.0;
            comps[j] = q * (delta * r * r - 3.0 * xs[j] * xk) / r5;
        }
        return Biquaternion::vector(comps[0], comps[1], comps[2]);
    };
    f.source = [guard](const Event& e) {
        guard(e);
        return SourceDensity{};
    };
    return f;
}

/// Linearly polarized wave along e3: E = cos(k(x3 - t)) e1,
/// B = cos(k(x3 - t)) e2. Null everywhere: cdot(F, F) = 0.
inline EMField plane_wave_field(double k) {
    const cplx i(0.0, 1.0);
    const Biquaternion pol = e1() + i * e2();
    EMField f;
    f.name = "plane_wave";
    f.eval = [k, pol](const Event& e) { return std::cos(k * (e.x3 - e.t)) * pol; };
    f.partial = [k, pol](int mu, const Event& e) {
        const double s = k * std::sin(k * (e.x3 - e.t));
        if (mu == 0) return s * pol;
        if (mu == 3) return -s * pol;
        return Biquaternion{};
    };
    f.source = [](const Event&) { return SourceDensity{}; };
    return f;
}

/// Superposition of two unit waves with distinct propagation directions:
/// a1 * cos(k1(x3 - t)) polarized along e1 plus a2 * cos(k2(x1 - t))
/// polarized along e2. Generically non-null.
inline EMField two_wave_field(double k1, double k2, double a1, double a2) {
    const cplx i(0.0, 1.0);
    const Biquaternion pol1 = e1() + i * e2();
    const Biquaternion pol2 = e2() + i * e3();
    EMField f;
    f.name = "two_wave";
    f.eval = [=](const Event& e) {
        return a1 * std::cos(k1 * (e.x3 - e.t)) * pol1 + a2 * std::cos(k2 * (e.x1 - e.t)) * pol2;
    };
    f.partial = [=](int mu, const Event& e) {
        const double s1 = a1 * k1 * std::sin(k1 * (e.x3 - e.t));
        const double s2 = a2 * k2 * std::sin(k2 * (e.x1 - e.t));
        Biquaternion out;
        if (mu == 0) out += s1 * pol1 + s2 * pol2;
        if (mu == 3) out -= s1 * pol1;
        if (mu == 1) out -= s2 * pol2;
        return out;
    };
    f.source = [](const Event&) { return SourceDensity{}; };
    return f;
}

/// Catalog dispatch by name with positional parameters:
///   constant:   [Ex, Ey, Ez, Bx, By, Bz]
///   parallel:   [E0, B0]
///   coulomb:    [q]
///   plane_wave: [k]
///   two_wave:   [k1, k2, a1, a2]
/// Missing parameters take the documented defaults.
inline EMField catalog(const std::string& name, const std::vector<double>& params = {}) {
    auto get = [&params](std::size_t i, double dflt) {
        return i < params.size() ? params[i] : dflt;
    };
    if (name == "constant")
        return constant_field({get(0, 1.0), get(1, 0.0), get(2, 0.0)},
                              {get(3, 0.0), get(4, 0.0), get(5, 0.0)});
    if (name == "parallel") return parallel_field(get(0, 1.0), get(1, 1.0));
    if (name == "coulomb") return coulomb_field(get(0, 1.0));
    if (name == "plane_wave") return plane_wave_field(get(0, 1.0));
    if (name == "two_wave")
        return two_wave_field(get(0, 1.0), get(1, 1.3), get(2, 1.0), get(3, 0.7));
    throw std::invalid_argument("unknown catalog field: " + name);
}

/// Replaces analytic partials by finite differences of eval. Residual checks
/// against such a field should use the relaxed 1e-6 tolerance.
inline EMField with_fd_partials(EMField f, FDParams fd = {}) {
    auto eval = f.eval;
    f.partial = [eval, fd](int mu, const Event& e) {
        return detail::fd4_partial(eval, mu, e, fd.step);
    };
    f.name += "+fd";
    return f;
}

// --- finite-difference validation ----------------------------------------

namespace detail {

inline Report fd_validate_impl(const std::string& name,
                               const std::function<Biquaternion(const Event&)>& eval,
                               const std::function<Biquaternion(int, const Event&)>& partial,
                               const std::vector<Event>& events, const FDParams& fd) {
    double worst = 0.0;
    int worst_mu = -1;
    std::size_t worst_event = 0;
    for (std::size_t n = 0; n < events.size(); ++n) {
        for (int mu = 0; mu < 4; ++mu) {
            const double dev = abs(partial(mu, events[n]) - fd4_partial(eval, mu, events[n], fd.step));
            if (dev > worst) {
                worst = dev;
                worst_mu = mu;
                worst_event = n;
            }
        }
    }
    Report r = make_report("fd_validate:" + name, worst, fd.tolerance);
    if (worst_mu >= 0) {
        r.details.push_back({"worst_mu", static_cast<double>(worst_mu)});
        r.details.push_back({"worst_event", static_cast<double>(worst_event)});
    }
    return r;
}

} // namespace detail

/// Checks every analytic partial against the 4th-order stencil at the given
/// events; passes when the maximum deviation stays within fd.tolerance.
inline Report fd_validate(const EMField& field, const std::vector<Event>& events,
                          const FDParams& fd = {}) {
    return detail::fd_validate_impl(field.name, field.eval, field.partial, events, fd);
}

inline Report fd_validate(const SpinorField& field, const std::vector<Event>& events,
                          const FDParams& fd = {}) {
    return detail::fd_validate_impl(field.name, field.eval, field.partial, events, fd);
}

} // namespace bq
