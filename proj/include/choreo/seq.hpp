// Two-sided, finitely supported Fourier coefficient sequences and the
// weighted l^1_nu algebra on them: norms, discrete convolution,
// differentiation, projections, conjugate reflection and the Psi tail bound.
//
// Everything is templated over the coefficient type C, which is either
// std::complex<double> (solver path) or CIv (rigorous path).  Convolution is
// the plain O(N^2) double loop in both modes; support grows exactly to
// Na + Nb and truncation only ever happens through an explicit project().

#pragma once

#include <complex>
#include <vector>

#include "choreo/interval.hpp"

namespace choreo {

template <class C>
struct num_traits;

template <>
struct num_traits<std::complex<double>> {
    using real_t = double;
    static real_t cmod(const std::complex<double>& z) { return std::abs(z); }
    static real_t from_double(double d) { return d; }
    static double upper(real_t r) { return r; }
    static real_t rmax(real_t a, real_t b) { return a > b ? a : b; }
};

template <>
struct num_traits<CIv> {
    using real_t = Iv;
    static real_t cmod(const CIv& z) { return choreo::cmod(z); }
    static real_t from_double(double d) { return Iv{d}; }
    static double upper(const real_t& r) { return r.hi; }
    static real_t rmax(const real_t& a, const real_t& b) { return imax(a, b); }
};

struct Weight {
    double nu{1.0};
    explicit Weight(double v) : nu(v) {
        if (!(v >= 1.0)) throw std::invalid_argument("Weight: nu must be >= 1");
    }
};

template <class C>
class CoeffSeq {
  public:
    CoeffSeq() : N_(0), c_(1) {}
    explicit CoeffSeq(long support_radius)
        : N_(support_radius), c_(2 * static_cast<size_t>(support_radius) + 1) {
        if (support_radius < 0) throw std::invalid_argument("CoeffSeq: negative support radius");
    }

    long support_radius() const { return N_; }

    // c_l for any l in Z; zero outside the stored support
    C at(long ell) const {
        if (ell < -N_ || ell > N_) return C{};
        return c_[static_cast<size_t>(ell + N_)];
    }
    C& ref(long ell) { return c_[static_cast<size_t>(ell + N_)]; }
    const C& ref(long ell) const { return c_[static_cast<size_t>(ell + N_)]; }

    static CoeffSeq delta0() {
        CoeffSeq s(0);
        s.ref(0) = C{1.0};
        return s;
    }

  private:
    long N_;
    std::vector<C> c_;
};

template <class C>
typename num_traits<C>::real_t norm_nu(const CoeffSeq<C>& c, const Weight& w) {
    using T = num_traits<C>;
    using R = typename T::real_t;
    const R nu = T::from_double(w.nu);
    R total = T::cmod(c.at(0));
    R pw = T::from_double(1.0);
    for (long d = 1; d <= c.support_radius(); ++d) {
        pw = pw * nu;
        total = total + (T::cmod(c.at(-d)) + T::cmod(c.at(d))) * pw;
    }
    return total;
}

template <class C>
CoeffSeq<C> convolve(const CoeffSeq<C>& a, const CoeffSeq<C>& b) {
    const long Na = a.support_radius(), Nb = b.support_radius();
    CoeffSeq<C> out(Na + Nb);
    for (long k = -(Na + Nb); k <= Na + Nb; ++k) {
        C acc{};
        const long lo = std::max(-Na, k - Nb);
        const long hi = std::min(Na, k + Nb);
        for (long k1 = lo; k1 <= hi; ++k1) acc += a.ref(k1) * b.ref(k - k1);
        out.ref(k) = acc;
    }
    return out;
}

namespace detail {
inline std::complex<double> times_il(long ell, const std::complex<double>& z) {
    return std::complex<double>(0.0, static_cast<double>(ell)) * z;
}
inline CIv times_il(long ell, const CIv& z) { return mul_il(ell, z); }
inline std::complex<double> over_il(long ell, const std::complex<double>& z) {
    return z / std::complex<double>(0.0, static_cast<double>(ell));
}
inline CIv over_il(long ell, const CIv& z) { return div_il(ell, z); }
inline std::complex<double> conj_c(const std::complex<double>& z) { return std::conj(z); }
inline CIv conj_c(const CIv& z) { return CIv{z.re, -z.im}; }
}  // namespace detail

// (Dc)_l = i*l*c_l
template <class C>
CoeffSeq<C> differentiate(const CoeffSeq<C>& c) {
    CoeffSeq<C> out(c.support_radius());
    for (long l = -c.support_radius(); l <= c.support_radius(); ++l)
        out.ref(l) = detail::times_il(l, c.ref(l));
    return out;
}

// Inverse of D on a pure tail: entries c_l/(i*l) for |l| >= m, zero below.
template <class C>
CoeffSeq<C> solve_D_tail(const CoeffSeq<C>& c, long m) {
    if (m < 1) throw std::invalid_argument("solve_D_tail: m must be >= 1");
    CoeffSeq<C> out(c.support_radius());
    for (long l = -c.support_radius(); l <= c.support_radius(); ++l) {
        if (std::labs(l) >= m) out.ref(l) = detail::over_il(l, c.ref(l));
    }
    return out;
}

// pi^m: keep modes |l| < m (result stored with support radius m-1).
template <class C>
CoeffSeq<C> project(const CoeffSeq<C>& c, long m) {
    if (m < 1) throw std::invalid_argument("project: m must be >= 1");
    CoeffSeq<C> out(m - 1);
    const long lim = std::min(m - 1, c.support_radius());
    for (long l = -lim; l <= lim; ++l) out.ref(l) = c.ref(l);
    return out;
}

// iota^m: view a (2m-1)-vector as a sequence with zero tail.
template <class C>
CoeffSeq<C> include(const CoeffSeq<C>& c, long m) {
    if (m < 1) throw std::invalid_argument("include: m must be >= 1");
    if (c.support_radius() > m - 1)
        throw std::invalid_argument("include: support exceeds m-1");
    return project(c, m);
}

// sigma(c)_l = conj(c_{-l})
template <class C>
CoeffSeq<C> conj_reflect(const CoeffSeq<C>& c) {
    CoeffSeq<C> out(c.support_radius());
    for (long l = -c.support_radius(); l <= c.support_radius(); ++l)
        out.ref(l) = detail::conj_c(c.ref(-l));
    return out;
}

// sum_l c_l (value of the series at t=0)
template <class C>
C sum_coeffs(const CoeffSeq<C>& c) {
    C acc{};
    for (long l = -c.support_radius(); l <= c.support_radius(); ++l) acc += c.ref(l);
    return acc;
}

inline std::complex<double> evaluate(const CoeffSeq<std::complex<double>>& c, double t) {
    std::complex<double> acc = c.at(0);
    for (long l = 1; l <= c.support_radius(); ++l) {
        const std::complex<double> e(std::cos(l * t), std::sin(l * t));
        acc += c.ref(l) * e + c.ref(-l) * std::conj(e);
    }
    return acc;
}

// Psi_l(abar): uniform bound for |(abar * h^(I))_l|, h in the unit ball and
// h^(I) its tail above the Galerkin cutoff m.  Empty ranges contribute 0.
template <class C>
typename num_traits<C>::real_t psi_bound(const CoeffSeq<C>& abar, long ell, long m,
                                         const Weight& w) {
    using T = num_traits<C>;
    using R = typename T::real_t;
    if (std::labs(ell) >= m) throw std::invalid_argument("psi_bound: requires |ell| < m");
    const long N = abar.support_radius();
    const R nu = T::from_double(w.nu);
    R best = T::from_double(0.0);
    auto scan = [&](long s_lo, long s_hi) {
        if (s_lo > s_hi) return;
        // nu^{|s|} grows monotonically away from 0; walk outward so the power
        // can be built incrementally.
        for (long s = s_lo; s <= s_hi; ++s) {
            R pw = T::from_double(1.0);
            for (long i = 0; i < std::labs(s); ++i) pw = pw * nu;
            best = T::rmax(best, T::cmod(abar.at(ell - s)) / pw);
        }
    };
    scan(ell - N, -m);
    scan(m, ell + N);
    return best;
}

// Ordered tuple of sequences sharing one indexing convention (components of
// u, v in (l^1_nu)^3 and w in (l^1_nu)^{n-1}).
template <class C>
struct SeqVec {
    std::vector<CoeffSeq<C>> comp;

    SeqVec() = default;
    explicit SeqVec(size_t count, long support_radius = 0)
        : comp(count, CoeffSeq<C>(support_radius)) {}

    size_t size() const { return comp.size(); }
    CoeffSeq<C>& operator[](size_t i) { return comp[i]; }
    const CoeffSeq<C>& operator[](size_t i) const { return comp[i]; }
};

template <class C>
SeqVec<C> project(const SeqVec<C>& v, long m) {
    SeqVec<C> out(v.size(), m - 1);
    for (size_t i = 0; i < v.size(); ++i) out[i] = project(v[i], m);
    return out;
}

template <class C>
SeqVec<C> differentiate(const SeqVec<C>& v) {
    SeqVec<C> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = differentiate(v[i]);
    return out;
}

}  // namespace choreo
