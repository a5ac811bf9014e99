#ifndef ZETACRIT_ZERO_LOCATOR_HPP
#define ZETACRIT_ZERO_LOCATOR_HPP

#include <cmath>
#include <string>
#include <vector>

#include "zetacrit/arg_tracker.hpp"
#include "zetacrit/errors.hpp"
#include "zetacrit/gamma.hpp"
#include "zetacrit/zero_table.hpp"

namespace zetacrit {

namespace detail {

// Average zero spacing near height t is 2 pi / ln(t / 2 pi); scan at a
// quarter of that so near-coincident pairs still produce sign changes.
inline double scan_step(double t) {
    const double g = 2.0 * MathConstants::pi /
                     std::log(std::max(t, 20.0) / (2.0 * MathConstants::pi));
    return std::min(0.25, 0.25 * g);
}

// Bracketed root of Z: bisection to safety, then secant polish.
inline double refine_zero(double lo, double hi, double z_lo, double tol,
                          double ztol) {
    double z_hi = hardy_z(hi, ztol);
    for (int i = 0; i < 20 && hi - lo > 1e-6; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double zm = hardy_z(mid, ztol);
        if ((zm < 0.0) == (z_lo < 0.0)) {
            lo = mid; z_lo = zm;
        } else {
            hi = mid; z_hi = zm;
        }
    }
    // secant iterations inside the bracket
    double a = lo, b = hi, fa = z_lo, fb = z_hi;
    for (int i = 0; i < 60 && std::abs(b - a) > tol; ++i) {
        double c = b - fb * (b - a) / (fb - fa);
        if (!(c > lo && c < hi)) c = 0.5 * (a + b);
        const double fc = hardy_z(c, ztol);
        if ((fc < 0.0) == (z_lo < 0.0)) {
            a = c; fa = fc;
        } else {
            b = c; fb = fc;
        }
        if (z_lo < 0.0) { lo = a; hi = b; } else { lo = b; hi = a; }
        if (std::abs(fc) == 0.0) return c;
        if (std::abs(hi - lo) <= tol) break;
        if (std::abs(b - a) <= tol) break;
    }
    return 0.5 * (a + b);
}

inline void scan_range(double lo, double hi, double step, double tol,
                       double ztol, std::vector<double>& found) {
    double t = lo;
    double z0 = hardy_z(t, ztol);
    while (t < hi) {
        double t1 = std::min(t + step, hi);
        double z1 = hardy_z(t1, ztol);
        if ((z0 < 0.0) != (z1 < 0.0))
            found.push_back(refine_zero(t, t1, z0, tol, ztol));
        t = t1;
        z0 = z1;
    }
}

} // namespace detail

// Count check against the counting function at x (nudged off ordinates).
inline bool verify_zero_count(const ZeroTable& table, double x) {
    if (!(x > 0.0 && x <= table.height))
        throw DomainError("checkpoint outside table height");
    double probe = x;
    // keep the probe away from an ordinate so counting_n is well defined
    for (const auto& z : table.ordinates)
        if (std::abs(z.t - probe) < 1e-6) probe = z.t + 1e-5;
    const double n = counting_n(probe);
    const double have = static_cast<double>(table.count_below(probe));
    return std::abs(have - n) < 1e-3;
}

// Locate every critical-line zero ordinate below T by sign changes of
// Hardy's Z, refined to |dt| <= tol.  Completeness is certified against
// the counting function; gaps are hunted down by counting-guided
// bisection plus a finer rescan.
inline ZeroTable find_zeros_up_to(double T, double tol = 1e-12) {
    if (!(T > 0.0 && T <= 1e5))
        throw DomainError("find_zeros_up_to supports 0 < T <= 1e5");
    tol = std::max(tol, 1e-13);
    const double ztol = 1e-13;

    std::vector<double> found;
    if (T > 10.0) {
        double t = 10.0;
        while (t < T) {
            const double t1 = std::min(t + 50.0, T);
            detail::scan_range(t, t1, detail::scan_step(t1), tol, ztol,
                               found);
            t = t1;
        }
    }

    const long expected = std::lround(counting_n(
        std::abs(hardy_z(T, ztol)) < 1e-6 ? T + 1e-5 : T));
    int round = 0;
    while (static_cast<long>(found.size()) < expected && round < 4) {
        // localize a gap: walk checkpoints until counts disagree
        ++round;
        std::vector<double> pts;
        pts.push_back(10.0);
        for (double x : found) pts.push_back(x);
        pts.push_back(T);
        std::vector<double> fixed;
        long seen = 0;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            const double hi = pts[i + 1];
            const double probe = hi - 1e-4 * (hi - pts[i]);
            const long want = std::lround(counting_n(probe));
            const long have = static_cast<long>(seen);
            if (want > have) {
                detail::scan_range(
                    pts[i], hi,
                    detail::scan_step(hi) / std::pow(8.0, round), tol, ztol,
                    fixed);
                for (double x : fixed)
                    if (x > pts[i] && x < hi) found.push_back(x);
                fixed.clear();
            }
            if (i + 1 < pts.size() - 1) ++seen;
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end(),
                                [tol](double a, double b) {
                                    return std::abs(a - b) < 4.0 * tol;
                                }),
                    found.end());
    }
    if (static_cast<long>(found.size()) != expected)
        throw MissedZero("zero scan disagrees with the counting function");

    ZeroTable table;
    table.height = T;
    table.ordinates.reserve(found.size());
    for (double t : found)
        table.ordinates.push_back({t, 1, ZeroSource::computed, 0.5});
    return table;
}

// Import a Ref-style ordinate file and validate its count against the
// counting function just above the top entry.
inline ZeroTable load_zero_table(const std::string& path) {
    ZeroTable table = read_zero_table_file(path);
    if (table.ordinates.empty()) return table;
    const double top = table.ordinates.back().t;
    const double n = counting_n(top + 1e-4);
    if (std::abs(n - static_cast<double>(table.ordinates.size())) > 1e-3)
        throw CountMismatch(
            "imported table holds " + std::to_string(table.ordinates.size()) +
            " ordinates but the counting function expects " +
            std::to_string(std::lround(n)));
    return table;
}

} // namespace zetacrit

#endif
