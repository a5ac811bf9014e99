#ifndef ZETACRIT_ZETA_HPP
#define ZETACRIT_ZETA_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "zetacrit/constants.hpp"
#include "zetacrit/errors.hpp"

namespace zetacrit {

using Complex = std::complex<double>;

// A point s = sigma + i t; both components must be finite.
using ComplexPoint = Complex;

struct EvalResult {
    Complex value;
    double abs_error_bound; // dominates the truncation error of the scheme
};

namespace detail {

// B_{2k} / (2k)!  for k = 1..30 (Euler-Maclaurin correction coefficients)
inline constexpr double kEmCoeff[30] = {
    0.0833333333333333333,    -0.00138888888888888889,
    0.0000330687830687830688, -8.26719576719576720e-7,
    2.08767569878680990e-8,   -5.28419013868749318e-10,
    1.33825365306846788e-11,  -3.38968029632258287e-13,
    8.58606205627784456e-15,  -2.17486869855806187e-16,
    5.50900282836022952e-18,  -1.39544646858125233e-19,
    3.53470703962946747e-21,  -8.95351742703754685e-23,
    2.26795245233768306e-24,  -5.74479066887220245e-26,
    1.45517247561486490e-27,  -3.68599494066531018e-29,
    9.33673425709504467e-31,  -2.36502241570062993e-32,
    5.99067176248213430e-34,  -1.51745488446829026e-35,
    3.84375812545418823e-37,  -9.73635307264669104e-39,
    2.46624704420068096e-40,  -6.24707674182074369e-42,
    1.58240302446449143e-43,  -4.00827368594893597e-45,
    1.01530758555695563e-46,  -2.57180415824187175e-48,
};

// Cached ln(n), grown on demand.  thread_local so evaluation stays pure
// and safe under concurrent use.
inline const std::vector<double>& log_table(std::size_t up_to) {
    thread_local std::vector<double> logs{0.0, 0.0}; // logs[0] unused
    while (logs.size() <= up_to)
        logs.push_back(std::log(static_cast<double>(logs.size())));
    return logs;
}

inline void check_point(const Complex& s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("non-finite complex point");
}

// n^{-s} given ln n.
inline Complex power_term(double sigma, double t, double ln_n) {
    const double mag = std::exp(-sigma * ln_n);
    const double ph = t * ln_n;
    return {mag * std::cos(ph), -mag * std::sin(ph)};
}

struct EmSums {
    Complex zeta;
    Complex zeta_deriv;
    double bound;       // truncation bound for zeta
    double deriv_bound; // truncation bound for zeta'
    bool certified;
};

// One Euler-Maclaurin pass with cutoff N:
//   zeta(s) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
//             + sum_k B_{2k}/(2k)! * (s)(s+1)...(s+2k-2) * N^{-s-2k+1}
// The remainder after K corrections is bounded by
//   |first omitted term| * |s+2K+1| / (sigma+2K+1)   (valid for sigma > -(2K+1)).
// Derivatives are taken term by term (no differencing).
inline EmSums euler_maclaurin(const Complex& s, long n_cut, double tol,
                              bool want_deriv) {
    const double sigma = s.real(), t = s.imag();
    const auto& logs = log_table(static_cast<std::size_t>(n_cut));

    Complex sum{0.0, 0.0}, dsum{0.0, 0.0};
    for (long n = 1; n < n_cut; ++n) {
        const double ln_n = logs[static_cast<std::size_t>(n)];
        const Complex term = power_term(sigma, t, ln_n);
        sum += term;
        if (want_deriv) dsum -= ln_n * term;
    }

    const double ln_N = logs[static_cast<std::size_t>(n_cut)];
    const Complex n_pow = power_term(sigma, t, ln_N); // N^{-s}
    const Complex sm1 = s - 1.0;
    const Complex integral = n_pow * static_cast<double>(n_cut) / sm1;
    sum += integral + 0.5 * n_pow;
    if (want_deriv)
        dsum += integral * (-ln_N - 1.0 / sm1) - 0.5 * ln_N * n_pow;

    // Bernoulli corrections.  poch = (s)(s+1)...(s+2k-2), built up
    // two factors at a time; harm = sum of 1/(s+j) for the derivative.
    Complex poch = s;
    Complex harm = 1.0 / s;
    Complex tail_pow = n_pow / static_cast<double>(n_cut); // N^{-s-2k+1} at k=1
    const double inv_n2 = 1.0 / (static_cast<double>(n_cut) * n_cut);

    EmSums out{};
    out.certified = false;
    double prev_mag = HUGE_VAL;
    for (int k = 1; k <= 30; ++k) {
        const Complex term = kEmCoeff[k - 1] * poch * tail_pow;
        const double mag = std::abs(term);
        if (mag > prev_mag) break; // asymptotic series started diverging
        prev_mag = mag;
        sum += term;
        if (want_deriv) dsum += term * (harm - ln_N);

        // remainder bound via the first omitted term
        const Complex f1 = s + static_cast<double>(2 * k - 1);
        const Complex f2 = s + static_cast<double>(2 * k);
        const Complex poch_next = poch * f1 * f2;
        const Complex tail_next = tail_pow * inv_n2;
        const Complex omitted = kEmCoeff[k] * poch_next * tail_next;

        const double denom = sigma + 2.0 * k + 1.0;
        if (denom <= 0.0) { poch = poch_next; harm += 1.0 / f1 + 1.0 / f2;
                            tail_pow = tail_next; continue; }
        const double factor = std::abs(s + (2.0 * k + 1.0)) / denom;
        const double bound = std::abs(omitted) * factor;
        if (bound <= tol) {
            out.zeta = sum;
            out.bound = bound;
            if (want_deriv) {
                out.zeta_deriv = dsum;
                out.deriv_bound =
                    bound * (std::abs(harm) + 2.0 / denom + ln_N);
            }
            out.certified = true;
            return out;
        }
        poch = poch_next;
        harm += 1.0 / f1 + 1.0 / f2;
        tail_pow = tail_next;
    }
    out.zeta = sum;
    out.zeta_deriv = dsum;
    out.bound = prev_mag;
    out.deriv_bound = prev_mag * (1.0 + ln_N);
    return out;
}

inline long em_cutoff(const Complex& s) {
    const double t = std::abs(s.imag());
    return std::max<long>(20, static_cast<long>(std::ceil(1.5 * t)));
}

inline EmSums zeta_core(const Complex& s, double tol, bool want_deriv) {
    check_point(s);
    if (s == Complex{1.0, 0.0}) throw PoleAtOne("zeta pole at s = 1");
    if (std::abs(s.imag()) > 1.0e6)
        throw DomainError("|Im s| beyond supported range 1e6");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

    long n_cut = em_cutoff(s);
    for (int attempt = 0; attempt < 3; ++attempt, n_cut *= 2) {
        EmSums r = euler_maclaurin(s, n_cut, tol, want_deriv);
        if (r.certified) return r;
    }
    throw ToleranceUnachievable("Euler-Maclaurin cannot certify tolerance");
}

} // namespace detail

// Riemann zeta via Euler-Maclaurin with certified truncation bound.
inline EvalResult zeta(const ComplexPoint& s, double tol) {
    auto r = detail::zeta_core(s, tol, false);
    return {r.zeta, r.bound};
}

// ln|zeta(s)|.  Raises LogOfZero when the value is numerically a zero.
inline double log_abs_zeta(const ComplexPoint& s, double tol) {
    auto r = zeta(s, tol);
    const double a = std::abs(r.value);
    if (a <= r.abs_error_bound || a < 1.0e-300)
        throw LogOfZero("zeta underflows at evaluation point");
    return std::log(a);
}

// zeta'(s)/zeta(s) with propagated error bound.
inline EvalResult log_deriv_zeta(const ComplexPoint& s, double tol) {
    detail::check_point(s);
    if (s.real() <= 0.0) throw DomainError("log_deriv_zeta needs Re s > 0");
    auto r = detail::zeta_core(s, tol, true);
    const double az = std::abs(r.zeta);
    if (az <= r.bound || az < 1.0e-300)
        throw ZeroDenominator("zeta vanishes at evaluation point");
    const Complex q = r.zeta_deriv / r.zeta;
    const double bound = (r.deriv_bound + std::abs(q) * r.bound) / az;
    return {q, bound};
}

} // namespace zetacrit

#endif
