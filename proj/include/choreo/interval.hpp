// Outward-rounded real intervals and rectangular complex intervals.
//
// Every operation returns an interval that contains the exact result of the
// corresponding set operation.  Outward rounding is done by one-ulp stepping
// (std::nextafter) from results computed in round-to-nearest: if e is the
// exact value and c = rn(e), then pred(c) < e < succ(c), so stepping the
// computed extremes outward always yields a true enclosure.  No rounding-mode
// state is touched, so all operations are safe to call concurrently.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace choreo {

// Directed helpers on plain doubles.  `up(x)`/`dn(x)` step a freshly computed
// round-to-nearest result outward; the *_up/*_dn composites bound a single
// arithmetic operation from above/below.
inline double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double dn(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
inline double add_up(double a, double b) { return up(a + b); }
inline double add_dn(double a, double b) { return dn(a + b); }
inline double sub_up(double a, double b) { return up(a - b); }
inline double sub_dn(double a, double b) { return dn(a - b); }
inline double mul_up(double a, double b) { return up(a * b); }
inline double mul_dn(double a, double b) { return dn(a * b); }
inline double div_up(double a, double b) { return up(a / b); }
inline double div_dn(double a, double b) { return dn(a / b); }

struct Iv {
    double lo{0.0};
    double hi{0.0};

    Iv() = default;
    Iv(double x) : lo(x), hi(x) {}
    Iv(double l, double h) : lo(l), hi(h) {
        if (!(l <= h)) throw std::invalid_argument("Iv: lo > hi");
    }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Iv& o) const { return lo <= o.lo && o.hi <= hi; }
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return up(hi - lo); }
    // mag/mig: largest/smallest absolute value over the interval.
    double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
    double mig() const {
        if (lo <= 0.0 && 0.0 <= hi) return 0.0;
        return std::min(std::fabs(lo), std::fabs(hi));
    }
};

inline void check_finite(const Iv& r) {
    if (!std::isfinite(r.lo) || !std::isfinite(r.hi))
        throw std::overflow_error("interval arithmetic overflow");
}

inline Iv operator-(const Iv& a) { return Iv{-a.hi, -a.lo}; }

inline Iv operator+(const Iv& a, const Iv& b) {
    Iv r{dn(a.lo + b.lo), up(a.hi + b.hi)};
    check_finite(r);
    return r;
}

inline Iv operator-(const Iv& a, const Iv& b) {
    Iv r{dn(a.lo - b.hi), up(a.hi - b.lo)};
    check_finite(r);
    return r;
}

inline Iv operator*(const Iv& a, const Iv& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Iv r{dn(std::min(std::min(p1, p2), std::min(p3, p4))),
         up(std::max(std::max(p1, p2), std::max(p3, p4)))};
    check_finite(r);
    return r;
}

// point * interval (hot path in the validator's matrix products)
inline Iv mul_pi(double p, const Iv& b) {
    Iv r = (p >= 0.0) ? Iv{dn(p * b.lo), up(p * b.hi)} : Iv{dn(p * b.hi), up(p * b.lo)};
    check_finite(r);
    return r;
}

inline Iv operator/(const Iv& a, const Iv& b) {
    if (b.lo <= 0.0 && 0.0 <= b.hi)
        throw std::domain_error("interval division by interval containing zero");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    Iv r{dn(std::min(std::min(p1, p2), std::min(p3, p4))),
         up(std::max(std::max(p1, p2), std::max(p3, p4)))};
    check_finite(r);
    return r;
}

inline Iv& operator+=(Iv& a, const Iv& b) { a = a + b; return a; }
inline Iv& operator-=(Iv& a, const Iv& b) { a = a - b; return a; }
inline Iv& operator*=(Iv& a, const Iv& b) { a = a * b; return a; }

inline Iv sqrt(const Iv& a) {
    if (a.lo < 0.0) throw std::domain_error("interval sqrt of negative domain");
    // IEEE sqrt is correctly rounded, so one-ulp steps are enough.
    return Iv{std::max(0.0, dn(std::sqrt(a.lo))), up(std::sqrt(a.hi))};
}

inline Iv abs(const Iv& a) { return Iv{a.mig(), a.mag()}; }
inline Iv hull(const Iv& a, const Iv& b) { return Iv{std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }
inline Iv imax(const Iv& a, const Iv& b) { return Iv{std::max(a.lo, b.lo), std::max(a.hi, b.hi)}; }
inline Iv sqr(const Iv& a) {
    const double m = a.mig(), M = a.mag();
    return Iv{std::max(0.0, dn(m * m)), up(M * M)};
}

// x^e for integer e >= 0, via image monotonicity on |x|.
inline Iv ipow(const Iv& a, int e) {
    if (e < 0) throw std::invalid_argument("ipow: negative exponent");
    Iv r{1.0};
    Iv base = a;
    int k = e;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = sqr(base);
        k >>= 1;
    }
    if (e % 2 == 0 && a.lo < 0.0) r.lo = std::max(r.lo, 0.0);  // even powers are nonnegative
    return r;
}

// pi enclosure: the double 3.141592653589793... lies just below pi.
inline Iv iv_pi() {
    const double lo = 3.141592653589793;
    return Iv{lo, up(lo)};
}

// sin/cos enclosures.
//  - iv_sincos: any finite (reasonably sized) argument; reduction modulo the
//    pi/2 enclosure, Taylor with explicit Lagrange remainder on [-pi/4,pi/4].
//  - iv_sincos_two_pi_frac: sin/cos of 2*pi*num/den with the integer part of
//    the phase removed exactly; this keeps enclosures at the few-ulp level
//    for the rational angles (j*zeta, j*k*l*zeta) used throughout.
void iv_sincos(const Iv& theta, Iv& s, Iv& c);
void iv_sincos_two_pi_frac(long long num, long long den, Iv& s, Iv& c);

// Rectangular complex interval.
struct CIv {
    Iv re;
    Iv im;

    CIv() = default;
    CIv(double x) : re(x), im(0.0) {}
    CIv(const Iv& r, const Iv& i) : re(r), im(i) {}
};

inline CIv operator-(const CIv& a) { return CIv{-a.re, -a.im}; }
inline CIv operator+(const CIv& a, const CIv& b) { return CIv{a.re + b.re, a.im + b.im}; }
inline CIv operator-(const CIv& a, const CIv& b) { return CIv{a.re - b.re, a.im - b.im}; }
inline CIv operator*(const CIv& a, const CIv& b) {
    return CIv{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CIv operator*(const Iv& a, const CIv& b) { return CIv{a * b.re, a * b.im}; }
inline CIv operator*(const CIv& a, const Iv& b) { return CIv{a.re * b, a.im * b}; }
inline CIv& operator+=(CIv& a, const CIv& b) { a = a + b; return a; }
inline CIv& operator-=(CIv& a, const CIv& b) { a = a - b; return a; }

// multiply by i*l (the Fourier differentiation symbol)
inline CIv mul_il(long ell, const CIv& a) {
    const double d = static_cast<double>(ell);
    return CIv{mul_pi(-d, a.im), mul_pi(d, a.re)};
}
// divide by i*l (the diagonal tail of the approximate inverse)
inline CIv div_il(long ell, const CIv& a) {
    const Iv d{static_cast<double>(ell)};
    return CIv{a.im / d, -(a.re / d)};
}

// Enclosure of |z| over the box.
inline Iv cmod(const CIv& z) {
    const double rlo = z.re.mig(), rhi = z.re.mag();
    const double ilo = z.im.mig(), ihi = z.im.mag();
    const double lo = std::max(0.0, dn(std::sqrt(add_dn(mul_dn(rlo, rlo), mul_dn(ilo, ilo)))));
    const double hi = up(std::sqrt(add_up(mul_up(rhi, rhi), mul_up(ihi, ihi))));
    return Iv{lo, hi};
}

// Cheap upper bound of sup{|w| : w in box}.
inline double cmod_upper(const CIv& z) {
    const double rhi = z.re.mag(), ihi = z.im.mag();
    return up(std::sqrt(add_up(mul_up(rhi, rhi), mul_up(ihi, ihi))));
}

}  // namespace choreo
