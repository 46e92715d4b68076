// Quick development smoke run: bundled trefoil seed -> F residual -> Newton.
#include <cstdio>

#include "choreo/solver.hpp"

using namespace choreo;

int main() {
    Seed seed = seed_bundled_trefoil();
    const ProblemParams& par = seed.params;
    std::printf("s1 = %.15f  sqrt_s1 = %.15f  omega = %.15f  T = %.15f\n", par.s1(), par.sqrt_s1(),
                par.omega(), par.period());

    // initial-condition cross check (u at t=0)
    std::printf("u(0) = (%.15f, %.15f, %.15f)\n", evaluate(seed.x0.u[0], 0.0).real(),
                evaluate(seed.x0.u[1], 0.0).real(), evaluate(seed.x0.u[2], 0.0).real());

    const Ctx<Cd> ctx = make_ctx(par);
    const Layout L{par.n, par.m};
    const ReferenceOrbit<Cd> ref = default_reference(seed.x0, par.m);
    const auto Fv = pack_F_galerkin(eval_F(ctx, seed.x0, ref), L);
    double res = 0.0;
    for (const auto& z : Fv) res = std::max(res, std::abs(z));
    std::printf("seed residual sup |F| = %.3e\n", res);

    NewtonSettings st;
    NewtonResult nr = newton_refine(seed, st, ref);
    std::printf("newton converged=%d iters=%d message='%s'\n", nr.report.converged,
                nr.report.iterations, nr.report.message.c_str());
    for (size_t i = 0; i < nr.report.residuals.size(); ++i)
        std::printf("  it %zu: res = %.3e\n", i, nr.report.residuals[i]);

    const double dde = dde_residual_sup(par, nr.x.u, 256);
    std::printf("dde residual (256 pts) = %.3e\n", dde);
    return nr.report.converged ? 0 : 1;
}
