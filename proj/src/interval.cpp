#include "choreo/interval.hpp"

#include <array>
#include <cstdint>

namespace choreo {

namespace {

// Taylor enclosures on |x| <= pi/4 + few ulps.
// sin: terms through x^17/17!, remainder |x|^19/19!  (~1e-19 at pi/4)
// cos: terms through x^16/16!, remainder |x|^18/18!
Iv sin_taylor(const Iv& x) {
    const Iv x2 = sqr(x);
    Iv term = x;
    Iv s = x;
    for (int k = 1; k <= 8; ++k) {
        const double denom = static_cast<double>(2 * k) * static_cast<double>(2 * k + 1);
        term = term * x2;
        term = Iv{-term.hi, -term.lo} / Iv{denom};
        s += term;
    }
    const double m = x.mag();
    double rem = 1.0;
    for (int i = 0; i < 19; ++i) rem = mul_up(rem, m);
    for (int i = 2; i <= 19; ++i) rem = div_up(rem, static_cast<double>(i));
    s += Iv{-rem, rem};
    return s;
}

Iv cos_taylor(const Iv& x) {
    const Iv x2 = sqr(x);
    Iv term{1.0};
    Iv c{1.0};
    for (int k = 1; k <= 8; ++k) {
        const double denom = static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
        term = term * x2;
        term = Iv{-term.hi, -term.lo} / Iv{denom};
        c += term;
    }
    const double m = x.mag();
    double rem = 1.0;
    for (int i = 0; i < 18; ++i) rem = mul_up(rem, m);
    for (int i = 2; i <= 18; ++i) rem = div_up(rem, static_cast<double>(i));
    c += Iv{-rem, rem};
    return c;
}

void sincos_reduced(const Iv& r, long long quadrant, Iv& s, Iv& c) {
    const Iv sr = sin_taylor(r);
    const Iv cr = cos_taylor(r);
    switch (((quadrant % 4) + 4) % 4) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
    // clamp to [-1,1]; sin/cos images can never exceed it
    s = Iv{std::max(s.lo, -1.0), std::min(s.hi, 1.0)};
    c = Iv{std::max(c.lo, -1.0), std::min(c.hi, 1.0)};
}

}  // namespace

void iv_sincos(const Iv& theta, Iv& s, Iv& c) {
    check_finite(theta);
    if (theta.mag() > 1e15 || theta.width() > 1.0) {
        s = Iv{-1.0, 1.0};
        c = Iv{-1.0, 1.0};
        return;
    }
    const Iv half_pi = iv_pi() / Iv{2.0};
    const double qd = std::round(theta.mid() / half_pi.mid());
    const long long q = static_cast<long long>(qd);
    const Iv r = theta - Iv{qd} * half_pi;
    if (r.mag() > 0.9) {  // reduction failed to land near [-pi/4,pi/4]
        s = Iv{-1.0, 1.0};
        c = Iv{-1.0, 1.0};
        return;
    }
    sincos_reduced(r, q, s, c);
}

void iv_sincos_two_pi_frac(long long num, long long den, Iv& s, Iv& c) {
    if (den <= 0) throw std::invalid_argument("iv_sincos_two_pi_frac: den <= 0");
    long long a = num % den;
    if (a < 0) a += den;
    // theta = 2*pi*a/den in [0, 2*pi)
    const Iv theta = (iv_pi() * Iv{2.0 * static_cast<double>(a)}) / Iv{static_cast<double>(den)};
    const Iv half_pi = iv_pi() / Iv{2.0};
    const double qd = std::round(theta.mid() / half_pi.mid());
    const Iv r = theta - Iv{qd} * half_pi;
    sincos_reduced(r, static_cast<long long>(qd), s, c);
}

}  // namespace choreo
