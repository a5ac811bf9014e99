#ifndef ZETACRIT_QUADRATURE_HPP
#define ZETACRIT_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "zetacrit/errors.hpp"

namespace zetacrit {

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    std::vector<double> breakpoints_used;
};

// Decay model for the omitted tail of an improper integral:
// |integrand(t)| <= k_coeff * (growth_a + growth_b * ln t) / t^3 past t_cut.
struct KernelSpec {
    double k_coeff = 1.0;
    double growth_a = 2.0;
    double growth_b = 1.0;
    double decay_power = 3.0; // must be at least cubic
};

struct TailBound {
    double t_cut;
    double bound;
};

// Certified bound on the omitted tail, from
//   int_T^inf t^-3 dt = 1/(2T^2),  int_T^inf ln(t)/t^3 dt = ln(T)/(2T^2) + 1/(4T^2).
inline TailBound improper_tail_bound(const KernelSpec& kernel, double t_cut) {
    if (!(t_cut >= 100.0)) throw DomainError("tail bound needs t_cut >= 100");
    if (kernel.decay_power < 3.0)
        throw UnsupportedKernel("tail model needs at least cubic decay");
    const double inv2 = 1.0 / (2.0 * t_cut * t_cut);
    const double bound =
        kernel.k_coeff *
        (kernel.growth_a * inv2 +
         kernel.growth_b * (std::log(t_cut) * inv2 + 0.5 * inv2));
    return {t_cut, bound};
}

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 abscissae).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double error;
    bool at_rounding_floor; // estimate pinned at 50 eps |f|; splitting is futile
};

template <class F>
PanelResult gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(fc) * kWgk[7];
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        fv1[j] = f(c - x);
        fv2[j] = f(c + x);
        const double fsum = fv1[j] + fv2[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    // QUADPACK-style scaled error estimate
    const double reskh = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] *
                  (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(h);
    resabs *= std::abs(h);
    double err = std::abs(resk - resg) * std::abs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * 1.1102230246251565e-16 * resabs;
    const bool floored = err <= eps50;
    return {resk * h, std::max(err, eps50), floored};
}

// Globally adaptive refinement of one piece: always split the panel with
// the worst error estimate, stop once the summed estimate meets tol.
// (Local tolerance-halving cannot terminate on an interior jump; the
// global strategy resolves one in O(log(1/tol)) splits.)
template <class F>
void adapt_piece(F&& f, double a, double b, double tol, double& value,
                 double& err_total, long& evals) {
    struct Seg {
        double err, a, b, val;
        int depth;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::priority_queue<Seg> active;
    // panels kept as-is: machine width, or pinned at the rounding floor
    // (their estimate is pure accumulated-roundoff; children inherit the
    // same total floor, so splitting cannot reduce it)
    std::vector<Seg> frozen;

    const PanelResult p0 = gk15(f, a, b);
    evals += 15;
    double live_err = 0.0, frozen_err = 0.0;
    if (p0.at_rounding_floor) {
        frozen.push_back({p0.error, a, b, p0.kronrod, 0});
        frozen_err += p0.error;
    } else {
        active.push({p0.error, a, b, p0.kronrod, 0});
        live_err += p0.error;
    }

    while (!active.empty() && live_err + frozen_err > tol) {
        const Seg s = active.top();
        active.pop();
        live_err -= s.err;
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b) {
            frozen.push_back(s);
            frozen_err += s.err;
            continue;
        }
        if (s.depth >= 60)
            throw NonConvergent("adaptive quadrature hit depth 60");
        const PanelResult halves[2] = {gk15(f, s.a, mid), gk15(f, mid, s.b)};
        const double ends[3] = {s.a, mid, s.b};
        evals += 30;
        for (int i = 0; i < 2; ++i) {
            const Seg c = {halves[i].error, ends[i], ends[i + 1],
                           halves[i].kronrod, s.depth + 1};
            if (halves[i].at_rounding_floor) {
                frozen.push_back(c);
                frozen_err += c.err;
            } else {
                active.push(c);
                live_err += c.err;
            }
        }
    }

    // accumulate in interval order so the result is schedule-independent
    std::vector<Seg> segs = std::move(frozen);
    while (!active.empty()) {
        segs.push_back(active.top());
        active.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const Seg& x, const Seg& y) { return x.a < y.a; });
    for (const Seg& s : segs) {
        value += s.val;
        err_total += s.err;
    }
}

} // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b], split first at the
// given breakpoints (sorted, strictly inside (a, b)).  Each piece gets an
// equal share tol/#pieces.  f is never evaluated at a breakpoint.
inline IntegrationResult integrate_adaptive(
    const std::function<double(double)>& f, double a, double b,
    const std::vector<double>& breakpoints, double tol) {
    if (!(a < b)) throw DomainError("integrate_adaptive needs a < b");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    IntegrationResult out;
    std::vector<double> pts;
    pts.push_back(a);
    for (double x : breakpoints) {
        if (!(x > a && x < b))
            throw DomainError("breakpoint outside open interval");
        if (x <= pts.back()) throw DomainError("breakpoints not sorted");
        pts.push_back(x);
        out.breakpoints_used.push_back(x);
    }
    pts.push_back(b);

    const double piece_tol = tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        detail::adapt_piece(f, pts[i], pts[i + 1], piece_tol, out.value,
                            out.error_estimate, out.evaluations);
    return out;
}

// Cauchy principal value across a simple pole inside (a, b).  The symmetric
// window around the pole is folded, g(u) = f(pole+u) + f(pole-u), which is
// bounded for a simple pole; the leftover one-sided piece is integrated
// directly.  A Richardson-extrapolated eps-limit run cross-checks the result
// and is folded into the error estimate.
inline IntegrationResult integrate_principal_value(
    const std::function<double(double)>& f, double a, double b, double pole,
    double tol) {
    if (!(a < pole && pole < b))
        throw DomainError("pole must lie strictly inside (a, b)");
    const double h = std::min(pole - a, b - pole);

    // simple-pole check: the folded integrand must stay bounded as u -> 0
    const double g3 = f(pole + h * 1e-3) + f(pole - h * 1e-3);
    const double g5 = f(pole + h * 1e-5) + f(pole - h * 1e-5);
    if (std::abs(g5) > 50.0 * (std::abs(g3) + 1.0))
        throw NotSimplePole("folded integrand unbounded near pole");

    auto folded = [&](double u) { return f(pole + u) + f(pole - u); };
    IntegrationResult r = integrate_adaptive(folded, 0.0, h, {}, 0.5 * tol);

    IntegrationResult side;
    if (pole - a < b - pole)
        side = integrate_adaptive(f, pole + h, b, {}, 0.5 * tol);
    else if (b - pole < pole - a)
        side = integrate_adaptive(f, a, pole - h, {}, 0.5 * tol);

    IntegrationResult out;
    out.value = r.value + side.value;
    out.error_estimate = r.error_estimate + side.error_estimate;
    out.evaluations = r.evaluations + side.evaluations + 4;

    // eps-limit cross-check, linear Richardson over eps = 1e-3, 1e-4
    double pv_eps[2];
    const double eps_list[2] = {1e-3, 1e-4};
    for (int i = 0; i < 2; ++i) {
        const double eps = eps_list[i];
        auto left = integrate_adaptive(f, a, pole - eps, {}, 0.25 * tol);
        auto right = integrate_adaptive(f, pole + eps, b, {}, 0.25 * tol);
        pv_eps[i] = left.value + right.value;
        out.evaluations += left.evaluations + right.evaluations;
    }
    const double richardson = pv_eps[1] + (pv_eps[1] - pv_eps[0]) / 9.0;
    out.error_estimate =
        std::max(out.error_estimate, std::abs(out.value - richardson));
    return out;
}

} // namespace zetacrit

#endif
