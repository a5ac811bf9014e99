#ifndef ZETACRIT_ARG_TRACKER_HPP
#define ZETACRIT_ARG_TRACKER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "zetacrit/constants.hpp"
#include "zetacrit/errors.hpp"
#include "zetacrit/gamma.hpp"
#include "zetacrit/zeta.hpp"

namespace zetacrit {

struct PhaseSample {
    Complex point;
    double accumulated_arg; // radians, continuous from the anchor
};

// Phase record along the polyline 2 -> 2+it -> b+it, starting from
// arg = 0 at the anchor (zeta(2) > 0).
struct PhasePath {
    Complex anchor;   // always 2 + 0i
    Complex corner;   // 2 + it
    Complex endpoint; // b + it
    std::vector<PhaseSample> samples;
    double final_arg = 0.0;
};

namespace detail {

constexpr double kZeroGuard = 1.0e-9;

inline Complex zeta_guarded(const Complex& s, double tol) {
    const Complex z = zeta(s, tol).value;
    if (std::abs(z) < kZeroGuard)
        throw PathThroughZero("phase path sample too close to a zeta zero");
    return z;
}

// One adaptive step: accumulate arg(z1/z0), bisecting until the phase
// increment drops below pi/2 so unwrapping stays valid.
inline void phase_step(const Complex& p0, const Complex& z0,
                       const Complex& p1, const Complex& z1, double tol,
                       int depth, double& acc,
                       std::vector<PhaseSample>* samples) {
    const double d = std::arg(z1 / z0);
    if (std::abs(d) < 0.5 * MathConstants::pi) {
        acc += d;
        if (samples) samples->push_back({p1, acc});
        return;
    }
    if (depth >= 42)
        throw PathThroughZero("phase increment will not settle below pi/2");
    const Complex mid = 0.5 * (p0 + p1);
    const Complex zm = zeta_guarded(mid, tol);
    phase_step(p0, z0, mid, zm, tol, depth + 1, acc, samples);
    phase_step(mid, zm, p1, z1, tol, depth + 1, acc, samples);
}

// Straight-line leg with initial_samples uniform samples, refined per step.
inline Complex walk_leg(const Complex& from, const Complex& to,
                        Complex z_from, double tol, double& acc,
                        std::vector<PhaseSample>* samples,
                        int initial_samples = 64) {
    Complex p0 = from, z0 = z_from;
    for (int k = 1; k <= initial_samples; ++k) {
        const Complex p1 =
            from + (to - from) * (static_cast<double>(k) / initial_samples);
        const Complex z1 = zeta_guarded(p1, tol);
        phase_step(p0, z0, p1, z1, tol, 0, acc, samples);
        p0 = p1;
        z0 = z1;
    }
    return z0;
}

} // namespace detail

// Full phase path with samples; arg_zeta below is the plain-value form.
inline PhasePath trace_phase_path(double b, double t, double tol) {
    if (!(b > -2.0)) throw DomainError("arg tracking needs b > -2");
    if (!(t >= 0.0)) throw DomainError("arg tracking needs t >= 0");
    // the horizontal leg at t = 0 would cross the pole at z = 1
    if (t == 0.0 && b < 1.0)
        throw PathThroughZero("t = 0 path crosses the pole at z = 1");
    PhasePath path;
    path.anchor = {2.0, 0.0};
    path.corner = {2.0, t};
    path.endpoint = {b, t};
    path.samples.push_back({path.anchor, 0.0});

    const double ztol = std::min(1.0e-12, tol);
    double acc = 0.0;
    Complex z = detail::zeta_guarded(path.anchor, ztol);
    if (t > 0.0)
        z = detail::walk_leg(path.anchor, path.corner, z, ztol, acc,
                             &path.samples);
    if (b != 2.0)
        detail::walk_leg(path.corner, path.endpoint, z, ztol, acc,
                         &path.samples);
    path.final_arg = acc;
    return path;
}

// arg zeta(b+it) by continuous variation along 2 -> 2+it -> b+it.
inline double arg_zeta(double b, double t, double tol) {
    return trace_phase_path(b, t, tol).final_arg;
}

// Zero-counting function
//   N(x) = 1 - x ln(pi)/(2 pi) + Im log Gamma(1/4 + ix/2)/pi
//          + arg zeta(1/2 + ix)/pi
// Returns the real value; it must sit within 1e-3 of an integer or the
// phase path mis-unwrapped.
inline double counting_n(double x, double tol = 1.0e-12) {
    if (!(x > 0.0)) throw DomainError("counting_n needs x > 0");
    const double pi = MathConstants::pi;
    const double v = 1.0 - x * MathConstants::ln_pi / (2.0 * pi) +
                     log_gamma(Complex{0.25, 0.5 * x}).imag() / pi +
                     arg_zeta(0.5, x, tol) / pi;
    if (std::abs(v - std::round(v)) > 1.0e-3)
        throw UnwrapInconsistent("counting function not near an integer");
    return v;
}

// Continuous arg zeta(b+it) for fixed b > 1/2, cached along the vertical
// line.  Queries walk from the nearest cached anchor, so near-sorted access
// (the quadrature pattern) costs a handful of zeta evaluations per call.
// The region to the right of b contains no zeros or poles for t > 0, so
// continuation along the line agrees with the polyline definition.
// Not safe for concurrent use of a single instance.
class VerticalArgTracker {
public:
    VerticalArgTracker(double b, double tol) : b_(b), tol_(tol) {
        if (!(b > 0.5))
            throw DomainError("vertical tracker needs b > 1/2; "
                              "use the zero table on the critical line");
    }

    double arg(double t) {
        if (!(t > 0.0)) throw DomainError("tracker needs t > 0");
        if (anchors_.empty()) {
            const double a = arg_zeta(b_, t, tol_);
            anchors_.emplace(t, a);
            return a;
        }
        auto it = anchors_.lower_bound(t);
        if (it != anchors_.end() && it->first == t) return it->second;
        // nearest anchor in t
        double t0, a0;
        if (it == anchors_.end()) {
            t0 = std::prev(it)->first;
            a0 = std::prev(it)->second;
        } else if (it == anchors_.begin()) {
            t0 = it->first;
            a0 = it->second;
        } else {
            auto lo = std::prev(it);
            if (t - lo->first <= it->first - t) {
                t0 = lo->first; a0 = lo->second;
            } else {
                t0 = it->first; a0 = it->second;
            }
        }
        const double ztol = std::min(1.0e-12, tol_);
        // short hops (the quadrature access pattern) need few samples;
        // phase_step still bisects whenever an increment is too large
        const int n_init = static_cast<int>(std::clamp(
            std::ceil(std::abs(t - t0) * 4.0), 1.0, 64.0));
        double acc = 0.0;
        Complex z0 = detail::zeta_guarded({b_, t0}, ztol);
        detail::walk_leg({b_, t0}, {b_, t}, z0, ztol, acc, nullptr, n_init);
        const double a = a0 + acc;
        anchors_.emplace(t, a);
        if (anchors_.size() > 200000) anchors_.clear(); // fresh start
        return a;
    }

    double b() const { return b_; }

private:
    double b_;
    double tol_;
    std::map<double, double> anchors_;
};

} // namespace zetacrit

#endif
