#include "choreo/problem.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace choreo {

namespace {
constexpr double kPi = 3.141592653589793;

// modular inverse of a mod p (p >= 1, gcd(a,p) = 1)
long mod_inverse(long a, long p) {
    if (p == 1) return 0;
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        const long quot = r / newr;
        const long tmp_t = t - quot * newt;
        t = newt;
        newt = tmp_t;
        const long tmp_r = r - quot * newr;
        r = newr;
        newr = tmp_r;
    }
    if (r > 1) throw std::invalid_argument("mod_inverse: not invertible");
    return ((t % p) + p) % p;
}
}  // namespace

double compute_s1(int n) {
    if (n < 3) throw std::invalid_argument("compute_s1: n must be >= 3");
    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += 1.0 / std::sin(kPi * j / n);
    return 0.25 * acc;
}

Iv compute_s1_iv(int n) {
    if (n < 3) throw std::invalid_argument("compute_s1_iv: n must be >= 3");
    Iv acc{0.0};
    for (int j = 1; j < n; ++j) {
        Iv s, c;
        iv_sincos_two_pi_frac(j, 2L * n, s, c);  // sin(pi j / n)
        acc += Iv{1.0} / s;
    }
    return acc / Iv{4.0};
}

void ProblemParams::validate() const {
    if (n < 3) throw std::invalid_argument("params: n must be >= 3");
    if (k < 1 || k > n - 1) throw std::invalid_argument("params: k must be in 1..n-1");
    if (p < 1 || q < 1) throw std::invalid_argument("params: p, q must be positive");
    if (m < 2) throw std::invalid_argument("params: m must be >= 2");
    if (!(nu >= 1.0)) throw std::invalid_argument("params: nu must be >= 1");
    check_resonance(n, k, p, q);
}

Resonance check_resonance(int n, int k, long p, long q) {
    if (p < 1 || q < 1) throw std::invalid_argument("check_resonance: p, q must be >= 1");
    const long d = static_cast<long>(k) * q - p;
    const int h = static_cast<int>(std::gcd(static_cast<long>(n), static_cast<long>(k)));
    if (d == 0) return Resonance{ResonanceKind::SimpleChoreography, k % (n * p), h};
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("check_resonance: gcd(p,q) != 1 with kq - p != 0");
    if (d % n == 0) {
        const long qtilde = mod_inverse(q, p);
        long kt = (k - d * qtilde) % (n * p);
        if (kt < 0) kt += n * p;
        return Resonance{ResonanceKind::SimpleChoreography, kt, h};
    }
    return Resonance{ResonanceKind::MultipleChoreography, k, h};
}

double vertical_lyapunov_omega(int n, int k) {
    const double zeta = 2.0 * kPi / n;
    double acc = 0.0;
    for (int j = 1; j < n; ++j) {
        const double dj = 2.0 * std::sin(0.5 * j * zeta);
        acc += (1.0 - std::cos(static_cast<double>(j) * k * zeta)) / (dj * dj * dj);
    }
    return std::sqrt(acc);
}

Ctx<std::complex<double>> make_ctx(const ProblemParams& par) {
    par.validate();
    Ctx<std::complex<double>> ctx(par.n, par.k, par.m, par.nu);
    ctx.s1 = par.s1();
    ctx.sqrt_s1 = par.sqrt_s1();
    ctx.omega = par.omega();
    ctx.omega2 = ctx.omega * ctx.omega;
    ctx.two_omega_sqrt_s1 = 2.0 * ctx.omega * ctx.sqrt_s1;
    ctx.unit.resize(static_cast<size_t>(par.n));
    for (int a = 0; a < par.n; ++a)
        ctx.unit[static_cast<size_t>(a)] =
            std::complex<double>(std::cos(2.0 * kPi * a / par.n), std::sin(2.0 * kPi * a / par.n));
    return ctx;
}

Ctx<CIv> make_ctx_iv(const ProblemParams& par) {
    par.validate();
    Ctx<CIv> ctx(par.n, par.k, par.m, par.nu);
    ctx.s1 = compute_s1_iv(par.n);
    ctx.sqrt_s1 = sqrt(ctx.s1);
    ctx.omega = ctx.sqrt_s1 * Iv{static_cast<double>(par.p)} / Iv{static_cast<double>(par.q)};
    ctx.omega2 = sqr(ctx.omega);
    ctx.two_omega_sqrt_s1 = Iv{2.0} * ctx.omega * ctx.sqrt_s1;
    ctx.unit.resize(static_cast<size_t>(par.n));
    for (int a = 0; a < par.n; ++a) {
        Iv s, c;
        iv_sincos_two_pi_frac(a, par.n, s, c);
        ctx.unit[static_cast<size_t>(a)] = CIv{c, s};
    }
    return ctx;
}

StateX<std::complex<double>> sigma_symmetrize(const StateX<std::complex<double>>& x) {
    StateX<std::complex<double>> out = x;
    for (int i = 0; i < 3; ++i) out.lambda[i] = {x.lambda[i].real(), 0.0};
    for (auto& a : out.alpha) a = {a.real(), 0.0};
    auto symm = [](SeqVec<std::complex<double>>& v) {
        for (auto& comp : v.comp) {
            const auto refl = conj_reflect(comp);
            for (long l = -comp.support_radius(); l <= comp.support_radius(); ++l)
                comp.ref(l) = 0.5 * (comp.ref(l) + refl.ref(l));
        }
    };
    symm(out.u);
    symm(out.v);
    symm(out.w);
    return out;
}

double sigma_asymmetry(const StateX<std::complex<double>>& x) {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::fabs(x.lambda[i].imag()));
    for (const auto& a : x.alpha) worst = std::max(worst, std::fabs(a.imag()));
    auto scan = [&](const SeqVec<std::complex<double>>& v) {
        for (const auto& comp : v.comp) {
            const auto refl = conj_reflect(comp);
            for (long l = -comp.support_radius(); l <= comp.support_radius(); ++l)
                worst = std::max(worst, std::abs(comp.ref(l) - refl.ref(l)));
        }
    };
    scan(x.u);
    scan(x.v);
    scan(x.w);
    return worst;
}

double norm_X(const StateX<std::complex<double>>& x, const Weight& w) {
    double best = 0.0;
    for (int i = 0; i < 3; ++i) best = std::max(best, std::abs(x.lambda[i]));
    for (const auto& a : x.alpha) best = std::max(best, std::abs(a));
    for (const auto& c : x.u.comp) best = std::max(best, norm_nu(c, w));
    for (const auto& c : x.v.comp) best = std::max(best, norm_nu(c, w));
    for (const auto& c : x.w.comp) best = std::max(best, norm_nu(c, w));
    return best;
}

double dde_residual_sup(const ProblemParams& par, const SeqVec<std::complex<double>>& u,
                        int samples) {
    const double zeta = par.zeta();
    const double om = par.omega(), s1 = par.s1(), ss1 = par.sqrt_s1();
    SeqVec<std::complex<double>> du = differentiate(u);
    SeqVec<std::complex<double>> ddu = differentiate(du);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * kPi * i / samples;
        std::array<double, 3> pos, vel, acc;
        for (int p = 0; p < 3; ++p) {
            pos[p] = evaluate(u[p], t).real();
            vel[p] = evaluate(du[p], t).real();
            acc[p] = evaluate(ddu[p], t).real();
        }
        std::array<double, 3> res{
            om * om * acc[0] + 2.0 * om * ss1 * (-vel[1]) - s1 * pos[0],
            om * om * acc[1] + 2.0 * om * ss1 * vel[0] - s1 * pos[1],
            om * om * acc[2],
        };
        for (int j = 1; j < par.n; ++j) {
            const double tj = t + j * par.k * zeta;
            const double cj = std::cos(j * zeta), sj = std::sin(j * zeta);
            std::array<double, 3> shifted;
            for (int p = 0; p < 3; ++p) shifted[p] = evaluate(u[p], tj).real();
            const std::array<double, 3> rot{cj * shifted[0] - sj * shifted[1],
                                            sj * shifted[0] + cj * shifted[1], shifted[2]};
            const std::array<double, 3> chord{pos[0] - rot[0], pos[1] - rot[1], pos[2] - rot[2]};
            const double dist =
                std::sqrt(chord[0] * chord[0] + chord[1] * chord[1] + chord[2] * chord[2]);
            const double inv3 = 1.0 / (dist * dist * dist);
            for (int p = 0; p < 3; ++p) res[p] += chord[p] * inv3;
        }
        for (int p = 0; p < 3; ++p) worst = std::max(worst, std::fabs(res[p]));
    }
    return worst;
}

}  // namespace choreo
