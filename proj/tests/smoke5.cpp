// Empirical probe of ||A (DF - Adag)|| using an extended Galerkin space.
#include <cstdio>
#include <random>
#include <cmath>
#include "choreo/validator.hpp"

using namespace choreo;

int main() {
    Seed seed = seed_bundled_trefoil();
    const ProblemParams par = seed.params;
    const int m = par.m;
    const ReferenceOrbit<Cd> ref = default_reference(seed.x0, par.m);
    NewtonResult nr = newton_refine(seed, NewtonSettings{}, ref);
    const StateX<Cd>& x = nr.x;
    Operators ops = build_operators(par, x, ref);
    const Layout L{par.n, par.m};

    // extended space
    ProblemParams parE = par;
    parE.m = 160;
    const Layout LE{parE.n, parE.m};
    const Ctx<Cd> ctxE = make_ctx(parE);
    StateX<Cd> xE = StateX<Cd>::zero(parE.n, parE.m);
    xE.lambda = x.lambda;
    xE.alpha = x.alpha;
    for (int p = 0; p < 3; ++p) { xE.u[p] = project(x.u[p], parE.m); xE.v[p] = project(x.v[p], parE.m); }
    for (int j = 0; j < par.n - 1; ++j) xE.w[j] = project(x.w[j], parE.m);
    const ReferenceOrbit<Cd> refE(ref.u);
    const DenseMatrix<Cd> DFe = jacobian_galerkin(ctxE, xE, refE);
    std::printf("extended jacobian built (%ld)\n", LE.size());

    const double om2 = par.omega() * par.omega();
    const double nu = par.nu;
    auto nup = [&](long l) { return std::pow(nu, std::labs(l)); };

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ur(-1.0, 1.0);

    auto trial = [&](int mode) {
        // h: unit-norm components, supported in |l| < 60
        std::vector<Cd> h(LE.size(), Cd{0, 0});
        const long hs = 59;
        auto fill_seq = [&](long base) {
            double total = 0;
            std::vector<Cd> raw(2 * hs + 1);
            for (long l = -hs; l <= hs; ++l) {
                raw[l + hs] = Cd{ur(rng), ur(rng)};
                total += std::abs(raw[l + hs]) * nup(l);
            }
            for (long l = -hs; l <= hs; ++l) h[base + (l + parE.m - 1)] = raw[l + hs] / total;
        };
        if (mode == 0) {
            // structured: w_2 tail mode 26 only
            h[LE.w(1, 26)] = Cd{1.0 / nup(26), 0};
        } else if (mode == 1) {
            // tail-only random
            for (int p = 0; p < 3; ++p) { fill_seq(LE.u(p, -(parE.m - 1))); fill_seq(LE.v(p, -(parE.m - 1))); }
            for (int j = 0; j < par.n - 1; ++j) fill_seq(LE.w(j, -(parE.m - 1)));
            // zero out finite modes |l| < m, renormalize roughly
            for (int p = 0; p < 3; ++p)
                for (long l = -(m - 1); l <= m - 1; ++l) {
                    h[LE.u(p, l)] = 0; h[LE.v(p, l)] = 0;
                }
            for (int j = 0; j < par.n - 1; ++j)
                for (long l = -(m - 1); l <= m - 1; ++l) h[LE.w(j, l)] = 0;
        } else {
            for (int i = 0; i < 3 + par.n - 1; ++i) h[i] = Cd{ur(rng), ur(rng)};
            for (int p = 0; p < 3; ++p) { fill_seq(LE.u(p, -(parE.m - 1))); fill_seq(LE.v(p, -(parE.m - 1))); }
            for (int j = 0; j < par.n - 1; ++j) fill_seq(LE.w(j, -(parE.m - 1)));
        }

        // z = DF_ext h - Adag h
        std::vector<Cd> z = matvec(DFe, h);
        // subtract finite block DF^(m) h^(m)
        std::vector<Cd> hm(L.size());
        for (int i = 0; i < 3; ++i) hm[L.lambda(i)] = h[LE.lambda(i)];
        for (int j = 0; j < par.n - 1; ++j) hm[L.alpha(j)] = h[LE.alpha(j)];
        for (int p = 0; p < 3; ++p)
            for (long l = -(m - 1); l <= m - 1; ++l) {
                hm[L.u(p, l)] = h[LE.u(p, l)];
                hm[L.v(p, l)] = h[LE.v(p, l)];
            }
        for (int j = 0; j < par.n - 1; ++j)
            for (long l = -(m - 1); l <= m - 1; ++l) hm[L.w(j, l)] = h[LE.w(j, l)];
        const std::vector<Cd> DFm_hm = matvec(ops.Adag.rows() ? [&]{
            DenseMatrix<Cd> DFm(L.size(), L.size());
            for (long r = 0; r < L.size(); ++r)
                for (long c = 0; c < L.size(); ++c)
                    DFm(r, c) = Cd{ops.Adag(r, c).re.mid(), ops.Adag(r, c).im.mid()};
            return DFm;
        }() : DenseMatrix<Cd>(0, 0), hm);
        for (int i = 0; i < 3; ++i) z[LE.lambda(i)] -= DFm_hm[L.lambda(i)];
        for (int j = 0; j < par.n - 1; ++j) z[LE.alpha(j)] -= DFm_hm[L.alpha(j)];
        for (int p = 0; p < 3; ++p)
            for (long l = -(m - 1); l <= m - 1; ++l) {
                z[LE.u(p, l)] -= DFm_hm[L.u(p, l)];
                z[LE.v(p, l)] -= DFm_hm[L.v(p, l)];
            }
        for (int j = 0; j < par.n - 1; ++j)
            for (long l = -(m - 1); l <= m - 1; ++l) z[LE.w(j, l)] -= DFm_hm[L.w(j, l)];
        // subtract tails of Adag: D on u-slot (f rows), om^2 D on v-slot, D on w-slot, |l| >= m
        for (long l = -(parE.m - 1); l <= parE.m - 1; ++l) {
            if (std::labs(l) < m) continue;
            const Cd il{0.0, (double)l};
            for (int p = 0; p < 3; ++p) {
                z[LE.u(p, l)] -= il * h[LE.u(p, l)];
                z[LE.v(p, l)] -= om2 * il * h[LE.v(p, l)];
            }
            for (int j = 0; j < par.n - 1; ++j) z[LE.w(j, l)] -= il * h[LE.w(j, l)];
        }
        std::printf("  z_alpha = ");
        for (int j = 0; j < par.n - 1; ++j) std::printf("%.3e ", std::abs(z[LE.alpha(j)]));
        std::printf("\n");

        // Az: finite block on z^(m), D^-1 tails elsewhere
        std::vector<Cd> zm(L.size());
        for (int i = 0; i < 3; ++i) zm[L.lambda(i)] = z[LE.lambda(i)];
        for (int j = 0; j < par.n - 1; ++j) zm[L.alpha(j)] = z[LE.alpha(j)];
        for (int p = 0; p < 3; ++p)
            for (long l = -(m - 1); l <= m - 1; ++l) {
                zm[L.u(p, l)] = z[LE.u(p, l)];
                zm[L.v(p, l)] = z[LE.v(p, l)];
            }
        for (int j = 0; j < par.n - 1; ++j)
            for (long l = -(m - 1); l <= m - 1; ++l) zm[L.w(j, l)] = z[LE.w(j, l)];
        const std::vector<Cd> Azm = matvec(ops.A, zm);
        // X-norm
        double nx = 0;
        for (int i = 0; i < 3 + par.n - 1; ++i) nx = std::max(nx, std::abs(Azm[i]));
        auto group_norm = [&](long baseM, long baseE, double tail_scale) {
            double acc = 0;
            for (long l = -(m - 1); l <= m - 1; ++l) acc += std::abs(Azm[baseM + (l + m - 1)]) * nup(l);
            for (long l = -(parE.m - 1); l <= parE.m - 1; ++l) {
                if (std::labs(l) < m) continue;
                acc += std::abs(z[baseE + (l + parE.m - 1)]) / (std::labs(l) * tail_scale) * nup(l);
            }
            return acc;
        };
        for (int p = 0; p < 3; ++p) {
            nx = std::max(nx, group_norm(L.u(p, -(m - 1)), LE.u(p, -(parE.m - 1)), 1.0));
            nx = std::max(nx, group_norm(L.v(p, -(m - 1)), LE.v(p, -(parE.m - 1)), om2));
        }
        for (int j = 0; j < par.n - 1; ++j)
            nx = std::max(nx, group_norm(L.w(j, -(m - 1)), LE.w(j, -(parE.m - 1)), 1.0));
        return nx;
    };

    std::printf("structured w2-tail h:  ||Az|| = %.4f\n", trial(0));
    double best = 0;
    for (int t = 0; t < 6; ++t) best = std::max(best, trial(1));
    std::printf("max over tail-random h: ||Az|| = %.4f\n", best);
    for (int t = 0; t < 6; ++t) best = std::max(best, trial(2));
    std::printf("max over full-random h: ||Az|| = %.4f\n", best);
    return 0;
}
