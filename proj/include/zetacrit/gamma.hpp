#ifndef ZETACRIT_GAMMA_HPP
#define ZETACRIT_GAMMA_HPP

#include <cmath>
#include <complex>

#include "zetacrit/constants.hpp"
#include "zetacrit/errors.hpp"
#include "zetacrit/zeta.hpp"

namespace zetacrit {

namespace detail {

// B_{2k} / (2k(2k-1)) for the Stirling series, k = 1..15
inline constexpr double kStirlingCoeff[15] = {
    0.0833333333333333333,  -0.00277777777777777778,
    0.000793650793650793651, -0.000595238095238095238,
    0.000841750841750841751, -0.00191752691752691753,
    0.00641025641025641026,  -0.0295506535947712418,
    0.179644372368830573,    -1.39243221690590112,
    13.4028640441683920,     -156.848284626002017,
    2193.10333333333333,     -36108.7712537249894,
    691472.268851313067,
};

// Stirling expansion, valid and ~machine accurate once Re z >= 10.
inline Complex stirling_log_gamma(const Complex& z) {
    const Complex lz = std::log(z);
    Complex r = (z - 0.5) * lz - z + MathConstants::half_ln_two_pi;
    const Complex z2 = z * z;
    Complex zp = z;
    for (double c : kStirlingCoeff) {
        r += c / zp;
        zp *= z2;
    }
    return r;
}

} // namespace detail

// Principal-branch log Gamma for Re s > 0: shift right by recurrence
// until Stirling applies, then subtract the shifted factors back out.
// Each s+j stays in the right half-plane, so principal logs compose
// without branch crossings.
inline Complex log_gamma(const ComplexPoint& s) {
    detail::check_point(s);
    if (s.real() <= 0.0) throw DomainError("log_gamma needs Re s > 0");
    Complex shift{0.0, 0.0};
    Complex z = s;
    while (z.real() < 10.0) {
        shift += std::log(z);
        z += 1.0;
    }
    return detail::stirling_log_gamma(z) - shift;
}

// Riemann-Siegel theta: theta(t) = Im log Gamma(1/4 + it/2) - (t/2) ln pi.
inline double riemann_siegel_theta(double t) {
    if (!(t >= 0.0)) throw DomainError("riemann_siegel_theta needs t >= 0");
    return log_gamma(Complex{0.25, 0.5 * t}).imag() -
           0.5 * t * MathConstants::ln_pi;
}

// Hardy's Z: Z(t) = e^{i theta(t)} zeta(1/2 + it), real for real t.
// The imaginary residue of the computed product is checked as an
// internal consistency certificate.
inline double hardy_z(double t, double tol) {
    if (!(t >= 0.0)) throw DomainError("hardy_z needs t >= 0");
    const double th = riemann_siegel_theta(t);
    const Complex z = zeta(Complex{0.5, t}, tol).value;
    const Complex w = std::polar(1.0, th) * z;
    if (std::abs(w.imag()) >= 1.0e-8 * (1.0 + std::abs(w)))
        throw DomainError("hardy_z lost realness; tolerance too loose");
    return w.real();
}

} // namespace zetacrit

#endif
