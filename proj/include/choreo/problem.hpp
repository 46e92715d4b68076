// Problem definition for the rotating n-body choreography reduction:
// parameters and resonance arithmetic, the per-mode delay/rotation matrices
// M_{j,l}, the phase conditions, the polynomial-embedded Fourier map
// F = (eta, gamma, f, g, h) and its exact Jacobian on the Galerkin projection.
//
// All evaluation code is templated over the coefficient type so the solver
// (complex<double>) and the validator (CIv) share one implementation.

#pragma once

#include <array>
#include <complex>
#include <numeric>
#include <optional>
#include <vector>

#include "choreo/interval.hpp"
#include "choreo/linalg.hpp"
#include "choreo/seq.hpp"

namespace choreo {

// s1 = (1/4) sum_{j=1}^{n-1} 1/sin(j*zeta/2),  zeta = 2*pi/n
double compute_s1(int n);
Iv compute_s1_iv(int n);

struct ProblemParams {
    int n{5};        // bodies
    int k{3};        // symmetry index, 1..n-1
    long p{3};       // resonance numerator
    long q{1};       // resonance denominator
    int m{25};       // Galerkin modes: |l| < m
    double nu{1.03}; // decay weight

    double zeta() const { return 2.0 * 3.141592653589793 / n; }
    double s1() const { return compute_s1(n); }
    double sqrt_s1() const { return std::sqrt(s1()); }
    double omega() const { return sqrt_s1() * static_cast<double>(p) / static_cast<double>(q); }
    double period() const { return 2.0 * 3.141592653589793 / omega(); }

    void validate() const;
};

enum class ResonanceKind { SimpleChoreography, MultipleChoreography };

struct Resonance {
    ResonanceKind kind;
    long ktilde;  // shift index in the inertial frame, reduced mod n*p
    int h;        // gcd(n,k): bodies form groups of h-polygons
};

// kq - p = 0, or gcd(p,q) = 1 and kq - p in nZ, makes the orbit a simple
// choreography in the inertial frame.  Throws if gcd(p,q) != 1 in case (b).
Resonance check_resonance(int n, int k, long p, long q);

// Frequency of the small-amplitude vertical oscillation attached to the
// polygon relative equilibrium for symmetry class k (mode l = +-1 of the
// linearized third component).  Used to place continuation starting points.
double vertical_lyapunov_omega(int n, int k);

// ----------------------------------------------------------------------------

template <class C>
struct Mat3 {
    C m11, m12, m33;  // full matrix: [[m11,m12,0],[-m12,m11,0],[0,0,m33]]

    std::array<C, 3> apply(const std::array<C, 3>& x) const {
        return {m11 * x[0] + m12 * x[1], -(m12 * x[0]) + m11 * x[1], m33 * x[2]};
    }
    // entry (row p, col c), 0-based
    C entry(int p, int c) const {
        if (p == 0 && c == 0) return m11;
        if (p == 0 && c == 1) return m12;
        if (p == 1 && c == 0) return -m12;
        if (p == 1 && c == 1) return m11;
        if (p == 2 && c == 2) return m33;
        return C{};
    }
};

// Scalar context: problem constants realized in one coefficient type.
template <class C>
struct Ctx {
    using R = typename num_traits<C>::real_t;

    int n, k, m;
    Weight weight;
    R s1, sqrt_s1, omega, omega2, two_omega_sqrt_s1;
    std::vector<C> unit;  // unit[a] = exp(2*pi*i*a/n)

    Ctx(int n_, int k_, int m_, double nu_) : n(n_), k(k_), m(m_), weight(nu_) {}

    int phase_index(long j, long ell) const {
        const long jk = (j % n) * (k % n) % n;
        long a = (jk * (ell % n)) % n;
        if (a < 0) a += n;
        return static_cast<int>(a);
    }

    Mat3<C> M(long j, long ell) const {
        const C& phi = unit[static_cast<size_t>(phase_index(j, ell))];
        const C& rot = unit[static_cast<size_t>(j % n)];
        const C one{1.0};
        // cos(j*zeta), sin(j*zeta) are the components of rot
        const C cj{rot};
        Mat3<C> out;
        out.m11 = one - phi * re_part(cj);
        out.m12 = phi * im_part(cj);
        out.m33 = one - phi;
        return out;
    }

  private:
    static C re_part(const C& z);
    static C im_part(const C& z);
};

template <>
inline std::complex<double> Ctx<std::complex<double>>::re_part(const std::complex<double>& z) {
    return {z.real(), 0.0};
}
template <>
inline std::complex<double> Ctx<std::complex<double>>::im_part(const std::complex<double>& z) {
    return {z.imag(), 0.0};
}
template <>
inline CIv Ctx<CIv>::re_part(const CIv& z) { return CIv{z.re, Iv{0.0}}; }
template <>
inline CIv Ctx<CIv>::im_part(const CIv& z) { return CIv{z.im, Iv{0.0}}; }

Ctx<std::complex<double>> make_ctx(const ProblemParams& par);
Ctx<CIv> make_ctx_iv(const ProblemParams& par);

// Full unknown x = (lambda, alpha, u, v, w).
template <class C>
struct StateX {
    std::array<C, 3> lambda{};
    std::vector<C> alpha;  // n-1
    SeqVec<C> u, v, w;     // 3, 3, n-1 components

    static StateX zero(int n, int m) {
        StateX x;
        x.alpha.assign(static_cast<size_t>(n - 1), C{});
        x.u = SeqVec<C>(3, m - 1);
        x.v = SeqVec<C>(3, m - 1);
        x.w = SeqVec<C>(static_cast<size_t>(n - 1), m - 1);
        return x;
    }
};

// Reference orbit for the phase conditions; du is cached.
template <class C>
struct ReferenceOrbit {
    SeqVec<C> u;
    SeqVec<C> du;

    ReferenceOrbit() = default;
    explicit ReferenceOrbit(const SeqVec<C>& utilde) : u(utilde), du(differentiate(utilde)) {}
};

inline long state_size(int n, int m) { return 2L * m * (n + 5) - 3; }

// Packing layout (shared by x and the mirror of F):
//   [lambda(3) | alpha(n-1) | u1 u2 u3 | v1 v2 v3 | w1..w_{n-1}]
// with each sequence block holding modes l = -(m-1)..(m-1).
struct Layout {
    int n, m;
    long span() const { return 2L * m - 1; }
    long lambda(int i) const { return i; }
    long alpha(int j) const { return 3 + j; }  // j in 0..n-2
    long u(int p, long ell) const { return n + 2 + p * span() + (ell + m - 1); }
    long v(int p, long ell) const { return n + 2 + (3 + p) * span() + (ell + m - 1); }
    long w(int j, long ell) const { return n + 2 + (6 + j) * span() + (ell + m - 1); }
    long size() const { return state_size(n, m); }
};

template <class C>
std::vector<C> pack_state(const StateX<C>& x, const Layout& L) {
    std::vector<C> out(static_cast<size_t>(L.size()));
    for (int i = 0; i < 3; ++i) out[L.lambda(i)] = x.lambda[i];
    for (int j = 0; j < L.n - 1; ++j) out[L.alpha(j)] = x.alpha[static_cast<size_t>(j)];
    for (int p = 0; p < 3; ++p)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) {
            out[L.u(p, l)] = x.u[p].at(l);
            out[L.v(p, l)] = x.v[p].at(l);
        }
    for (int j = 0; j < L.n - 1; ++j)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) out[L.w(j, l)] = x.w[static_cast<size_t>(j)].at(l);
    return out;
}

template <class C>
StateX<C> unpack_state(const std::vector<C>& v, const Layout& L) {
    StateX<C> x = StateX<C>::zero(L.n, L.m);
    for (int i = 0; i < 3; ++i) x.lambda[i] = v[L.lambda(i)];
    for (int j = 0; j < L.n - 1; ++j) x.alpha[static_cast<size_t>(j)] = v[L.alpha(j)];
    for (int p = 0; p < 3; ++p)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) {
            x.u[p].ref(l) = v[L.u(p, l)];
            x.v[p].ref(l) = v[L.v(p, l)];
        }
    for (int j = 0; j < L.n - 1; ++j)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) x.w[static_cast<size_t>(j)].ref(l) = v[L.w(j, l)];
    return x;
}

// (M_j u)_l = M_{j,l} u_l, support unchanged.
template <class C>
SeqVec<C> apply_Mj(const Ctx<C>& ctx, const SeqVec<C>& u, long j) {
    const long N = std::max({u[0].support_radius(), u[1].support_radius(), u[2].support_radius()});
    SeqVec<C> out(3, N);
    for (long l = -N; l <= N; ++l) {
        const Mat3<C> Mj = ctx.M(j, l);
        const std::array<C, 3> in{u[0].at(l), u[1].at(l), u[2].at(l)};
        const std::array<C, 3> res = Mj.apply(in);
        for (int p = 0; p < 3; ++p) out[p].ref(l) = res[p];
    }
    return out;
}

// Nonlinear products shared by F, its Jacobian and the validator bounds.
template <class C>
struct Products {
    std::vector<C> S;                          // sum_l (w_j)_l
    std::vector<std::array<C, 3>> G;           // sum_l (M_{j,l} u_l)_p
    std::vector<CoeffSeq<C>> w2, w3;           // w_j^2, w_j^3
    std::vector<std::array<CoeffSeq<C>, 3>> Mu, Mv;      // (M_j u)_p, (M_j v)_p
    std::vector<std::array<CoeffSeq<C>, 3>> MuMv;        // (M_j u)_p * (M_j v)_p
    std::vector<CoeffSeq<C>> K;                // sum_p (M_j u)_p * (M_j v)_p
    std::vector<CoeffSeq<C>> Q;                // sum_p (M_j u)_p * (M_j u)_p
    std::vector<CoeffSeq<C>> wQ;               // w_j * Q_j
    std::vector<std::array<CoeffSeq<C>, 3>> w3Mu, w3Mv;  // w^3 * (M_j u/v)_p
    std::vector<std::array<CoeffSeq<C>, 3>> w2Mu;        // w^2 * (M_j u)_p
    std::vector<std::array<CoeffSeq<C>, 3>> w2MuMv;      // w^2 * (M_j u)_p * (M_j v)_p
    std::vector<CoeffSeq<C>> w3K, w2K;         // w^3 * K, w^2 * K
};

template <class C>
Products<C> build_products(const Ctx<C>& ctx, const StateX<C>& x) {
    const size_t nm1 = x.w.size();
    Products<C> P;
    P.S.resize(nm1);
    P.G.resize(nm1);
    P.w2.resize(nm1);
    P.w3.resize(nm1);
    P.Mu.resize(nm1);
    P.Mv.resize(nm1);
    P.MuMv.resize(nm1);
    P.K.resize(nm1);
    P.w3Mu.resize(nm1);
    P.w3Mv.resize(nm1);
    P.w2Mu.resize(nm1);
    P.w2MuMv.resize(nm1);
    P.w3K.resize(nm1);
    P.w2K.resize(nm1);
    P.Q.resize(nm1);
    P.wQ.resize(nm1);
    for (size_t jj = 0; jj < nm1; ++jj) {
        const long j = static_cast<long>(jj) + 1;
        P.S[jj] = sum_coeffs(x.w[jj]);
        P.w2[jj] = convolve(x.w[jj], x.w[jj]);
        P.w3[jj] = convolve(P.w2[jj], x.w[jj]);
        const SeqVec<C> Mu = apply_Mj(ctx, x.u, j);
        const SeqVec<C> Mv = apply_Mj(ctx, x.v, j);
        for (int p = 0; p < 3; ++p) {
            P.G[jj][p] = sum_coeffs(Mu[p]);
            P.Mu[jj][p] = Mu[p];
            P.Mv[jj][p] = Mv[p];
            P.MuMv[jj][p] = convolve(Mu[p], Mv[p]);
            P.w3Mu[jj][p] = convolve(P.w3[jj], Mu[p]);
            P.w3Mv[jj][p] = convolve(P.w3[jj], Mv[p]);
            P.w2Mu[jj][p] = convolve(P.w2[jj], Mu[p]);
            P.w2MuMv[jj][p] = convolve(P.w2[jj], P.MuMv[jj][p]);
        }
        CoeffSeq<C> K = P.MuMv[jj][0];
        CoeffSeq<C> Q = convolve(Mu[0], Mu[0]);
        for (int p = 1; p < 3; ++p) {
            const CoeffSeq<C> MuMu = convolve(Mu[p], Mu[p]);
            for (long l = -K.support_radius(); l <= K.support_radius(); ++l) {
                K.ref(l) = K.ref(l) + P.MuMv[jj][p].ref(l);
                Q.ref(l) = Q.ref(l) + MuMu.ref(l);
            }
        }
        P.K[jj] = K;
        P.Q[jj] = Q;
        P.wQ[jj] = convolve(x.w[jj], Q);
        P.w3K[jj] = convolve(P.w3[jj], K);
        P.w2K[jj] = convolve(P.w2[jj], K);
    }
    return P;
}

// Value of the Fourier map, shaped like x with grown sequence supports.
template <class C>
struct YVec {
    std::array<C, 3> eta{};
    std::vector<C> gamma;
    SeqVec<C> f, g, h;
};

namespace detail {
template <class C>
C conv_at0(const CoeffSeq<C>& a, const CoeffSeq<C>& b) {
    C acc{};
    const long N = std::min(a.support_radius(), b.support_radius());
    for (long l = -N; l <= N; ++l) acc += a.ref(l) * b.ref(-l);
    return acc;
}
template <class C>
void add_into(CoeffSeq<C>& dst, const CoeffSeq<C>& src) {
    for (long l = -src.support_radius(); l <= src.support_radius(); ++l)
        dst.ref(l) = dst.ref(l) + src.ref(l);
}
}  // namespace detail

template <class C>
std::array<C, 3> eval_eta(const StateX<C>& x, const ReferenceOrbit<C>& ref) {
    std::array<C, 3> eta;
    eta[0] = -detail::conv_at0(x.u[0], ref.u[1]) + detail::conv_at0(x.u[1], ref.u[0]);
    eta[1] = detail::conv_at0(x.u[0], ref.du[0]) + detail::conv_at0(x.u[1], ref.du[1]) +
             detail::conv_at0(x.u[2], ref.du[2]);
    eta[2] = x.u[2].at(0);
    return eta;
}

// gamma_j pins the integration constant of the w_j equation through the
// period mean of w_j^2 |chord_j|^2, the zeroth coefficient of w_j^2 * Q_j.
// At a solution that function is identically 1, so the mean condition and
// the pointwise normalization pin the same constant; unlike the sharp point
// evaluation at t = 0, the mean pairs against finitely supported data only,
// which keeps the tail sensitivity of the constraint row harmless.
template <class C>
std::vector<C> eval_gamma(const Products<C>& P) {
    const size_t nm1 = P.S.size();
    std::vector<C> gamma(nm1);
    for (size_t j = 0; j < nm1; ++j)
        gamma[j] = detail::conv_at0(P.w2[j], P.Q[j]) - C{1.0};
    return gamma;
}

template <class C>
YVec<C> eval_F(const Ctx<C>& ctx, const StateX<C>& x, const ReferenceOrbit<C>& ref,
               const Products<C>& P) {
    YVec<C> Y;
    Y.eta = eval_eta(x, ref);
    Y.gamma = eval_gamma(P);

    // f = Du - v
    Y.f = SeqVec<C>(3);
    for (int p = 0; p < 3; ++p) {
        const long N = std::max(x.u[p].support_radius(), x.v[p].support_radius());
        CoeffSeq<C> fp(N);
        for (long l = -N; l <= N; ++l) fp.ref(l) = detail::times_il(l, x.u[p].at(l)) - x.v[p].at(l);
        Y.f[p] = fp;
    }

    // g = w^2 Dv + 2 w sqrt(s1) Jbar v - s1 Ibar u + l1 Jbar u + l2 v + l3 e3hat
    //     + sum_j (M_j u) * w_j^3
    long Ng = 0;
    for (size_t j = 0; j < P.w3Mu.size(); ++j)
        Ng = std::max(Ng, P.w3Mu[j][0].support_radius());
    for (int p = 0; p < 3; ++p)
        Ng = std::max({Ng, x.u[p].support_radius(), x.v[p].support_radius()});
    Y.g = SeqVec<C>(3, Ng);
    for (int p = 0; p < 3; ++p) {
        CoeffSeq<C> gp(Ng);
        const long Nx = std::max(x.u[p].support_radius(), x.v[p].support_radius());
        for (long l = -Nx; l <= Nx; ++l) {
            C val = ctx.omega2 * detail::times_il(l, x.v[p].at(l));
            // Jbar rows: (Jbar y)_1 = -y_2, (Jbar y)_2 = y_1, (Jbar y)_3 = 0
            if (p == 0) {
                val += ctx.two_omega_sqrt_s1 * (-x.v[1].at(l));
                val -= ctx.s1 * x.u[0].at(l);
                val += x.lambda[0] * (-x.u[1].at(l));
            } else if (p == 1) {
                val += ctx.two_omega_sqrt_s1 * x.v[0].at(l);
                val -= ctx.s1 * x.u[1].at(l);
                val += x.lambda[0] * x.u[0].at(l);
            }
            val += x.lambda[1] * x.v[p].at(l);
            gp.ref(l) = val;
        }
        if (p == 2) gp.ref(0) = gp.ref(0) + x.lambda[2];
        for (size_t j = 0; j < P.w3Mu.size(); ++j) detail::add_into(gp, P.w3Mu[j][p]);
        Y.g[p] = gp;
    }

    // h_j = Dw_j + w_j^3 * K_j + alpha_j w_j^3
    const size_t nm1 = x.w.size();
    Y.h = SeqVec<C>(nm1);
    for (size_t j = 0; j < nm1; ++j) {
        const long Nh = std::max({x.w[j].support_radius(), P.w3K[j].support_radius(),
                                  P.w3[j].support_radius()});
        CoeffSeq<C> hj(Nh);
        for (long l = -x.w[j].support_radius(); l <= x.w[j].support_radius(); ++l)
            hj.ref(l) = detail::times_il(l, x.w[j].at(l));
        detail::add_into(hj, P.w3K[j]);
        for (long l = -P.w3[j].support_radius(); l <= P.w3[j].support_radius(); ++l)
            hj.ref(l) = hj.ref(l) + x.alpha[j] * P.w3[j].ref(l);
        Y.h[j] = hj;
    }
    return Y;
}

template <class C>
YVec<C> eval_F(const Ctx<C>& ctx, const StateX<C>& x, const ReferenceOrbit<C>& ref) {
    return eval_F(ctx, x, ref, build_products(ctx, x));
}

// Galerkin value Pi^(m) F(iota x), packed in the layout above.
template <class C>
std::vector<C> pack_F_galerkin(const YVec<C>& Y, const Layout& L) {
    std::vector<C> out(static_cast<size_t>(L.size()));
    for (int i = 0; i < 3; ++i) out[L.lambda(i)] = Y.eta[i];
    for (int j = 0; j < L.n - 1; ++j) out[L.alpha(j)] = Y.gamma[static_cast<size_t>(j)];
    for (int p = 0; p < 3; ++p)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) {
            out[L.u(p, l)] = Y.f[p].at(l);
            out[L.v(p, l)] = Y.g[p].at(l);
        }
    for (int j = 0; j < L.n - 1; ++j)
        for (long l = -(L.m - 1); l <= L.m - 1; ++l) out[L.w(j, l)] = Y.h[static_cast<size_t>(j)].at(l);
    return out;
}

// Exact derivative of F^(m) at x (both supported within m).
template <class C>
DenseMatrix<C> jacobian_galerkin(const Ctx<C>& ctx, const StateX<C>& x,
                                 const ReferenceOrbit<C>& ref, const Products<C>& P) {
    const Layout L{ctx.n, ctx.m};
    const long N = L.size();
    const long mm = ctx.m - 1;
    DenseMatrix<C> J(N, N);
    const C one{1.0};
    const C two{2.0};
    const C three{3.0};

    // eta rows
    for (long s = -mm; s <= mm; ++s) {
        J(L.lambda(0), L.u(0, s)) = -ref.u[1].at(-s);
        J(L.lambda(0), L.u(1, s)) = ref.u[0].at(-s);
        for (int p = 0; p < 3; ++p) J(L.lambda(1), L.u(p, s)) = ref.du[p].at(-s);
    }
    J(L.lambda(2), L.u(2, 0)) = one;

    // gamma rows
    for (int j = 0; j < ctx.n - 1; ++j) {
        for (long s = -mm; s <= mm; ++s) {
            J(L.alpha(j), L.w(j, s)) = two * P.wQ[j].at(-s);
            const Mat3<C> Mj = ctx.M(j + 1, s);
            for (int c = 0; c < 3; ++c) {
                C acc{};
                for (int p = 0; p < 3; ++p) acc += P.w2Mu[j][p].at(-s) * Mj.entry(p, c);
                J(L.alpha(j), L.u(c, s)) = two * acc;
            }
        }
    }

    // f rows: D on u, -I on v
    for (int p = 0; p < 3; ++p)
        for (long l = -mm; l <= mm; ++l) {
            J(L.u(p, l), L.u(p, l)) = detail::times_il(l, one);
            J(L.u(p, l), L.v(p, l)) = -one;
        }

    // g rows
    for (int p = 0; p < 3; ++p) {
        for (long l = -mm; l <= mm; ++l) {
            const long row = L.v(p, l);
            // lambda columns
            if (p == 0) J(row, L.lambda(0)) = -x.u[1].at(l);
            if (p == 1) J(row, L.lambda(0)) = x.u[0].at(l);
            J(row, L.lambda(1)) = x.v[p].at(l);
            if (p == 2 && l == 0) J(row, L.lambda(2)) = one;
            // diagonal v columns
            J(row, L.v(p, l)) = J(row, L.v(p, l)) + ctx.omega2 * detail::times_il(l, one) + x.lambda[1];
            if (p == 0) J(row, L.v(1, l)) = J(row, L.v(1, l)) - ctx.two_omega_sqrt_s1 * one;
            if (p == 1) J(row, L.v(0, l)) = J(row, L.v(0, l)) + ctx.two_omega_sqrt_s1 * one;
            // diagonal u columns
            if (p == 0) {
                J(row, L.u(0, l)) = J(row, L.u(0, l)) - ctx.s1 * one;
                J(row, L.u(1, l)) = J(row, L.u(1, l)) - x.lambda[0];
            } else if (p == 1) {
                J(row, L.u(1, l)) = J(row, L.u(1, l)) - ctx.s1 * one;
                J(row, L.u(0, l)) = J(row, L.u(0, l)) + x.lambda[0];
            }
            // convolution blocks
            for (long s = -mm; s <= mm; ++s) {
                for (int j = 0; j < ctx.n - 1; ++j) {
                    const C w3e = P.w3[j].at(l - s);
                    const Mat3<C> Mj = ctx.M(j + 1, s);
                    for (int c = 0; c < 3; ++c) {
                        const C me = Mj.entry(p, c);
                        J(row, L.u(c, s)) = J(row, L.u(c, s)) + w3e * me;
                    }
                    J(row, L.w(j, s)) = J(row, L.w(j, s)) + three * P.w2Mu[j][p].at(l - s);
                }
            }
        }
    }

    // h rows
    for (int j = 0; j < ctx.n - 1; ++j) {
        for (long l = -mm; l <= mm; ++l) {
            const long row = L.w(j, l);
            J(row, L.alpha(j)) = P.w3[j].at(l);
            J(row, L.w(j, l)) = J(row, L.w(j, l)) + detail::times_il(l, one);
            for (long s = -mm; s <= mm; ++s) {
                const Mat3<C> Mj = ctx.M(j + 1, s);
                for (int c = 0; c < 3; ++c) {
                    C acc_u{}, acc_v{};
                    for (int p = 0; p < 3; ++p) {
                        const C me = Mj.entry(p, c);
                        acc_u += me * P.w3Mv[j][p].at(l - s);
                        acc_v += me * P.w3Mu[j][p].at(l - s);
                    }
                    J(row, L.u(c, s)) = J(row, L.u(c, s)) + acc_u;
                    J(row, L.v(c, s)) = J(row, L.v(c, s)) + acc_v;
                }
                J(row, L.w(j, s)) = J(row, L.w(j, s)) + three * P.w2K[j].at(l - s) +
                                    three * (x.alpha[static_cast<size_t>(j)] * P.w2[j].at(l - s));
            }
        }
    }
    return J;
}

template <class C>
DenseMatrix<C> jacobian_galerkin(const Ctx<C>& ctx, const StateX<C>& x,
                                 const ReferenceOrbit<C>& ref) {
    return jacobian_galerkin(ctx, x, ref, build_products(ctx, x));
}

// ----------------------------------------------------------------------------
// Real subspace helpers (solver path).

StateX<std::complex<double>> sigma_symmetrize(const StateX<std::complex<double>>& x);
double sigma_asymmetry(const StateX<std::complex<double>>& x);
double norm_X(const StateX<std::complex<double>>& x, const Weight& w);

// Sup norm over `samples` points of the reduced DDE residual
//   w^2 u'' + 2 w sqrt(s1) Jbar u' - s1 Ibar u + sum_j chord_j / |chord_j|^3,
// with the reciprocal distances computed directly from u.
double dde_residual_sup(const ProblemParams& par, const SeqVec<std::complex<double>>& u,
                        int samples);

}  // namespace choreo
