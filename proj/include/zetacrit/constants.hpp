#ifndef ZETACRIT_CONSTANTS_HPP
#define ZETACRIT_CONSTANTS_HPP

namespace zetacrit {

struct MathConstants {
    // Euler-Mascheroni constant, 0.5772156649... (20 digits)
    static constexpr double euler_gamma = 0.57721566490153286061;
    static constexpr double pi = 3.14159265358979323846;
    static constexpr double ln_pi = 1.14472988584940017414;
    static constexpr double half_ln_two_pi = 0.91893853320467274178;
};

} // namespace zetacrit

#endif
