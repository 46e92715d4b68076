// Z1 breakdown diagnostics on the trefoil.
#include <cstdio>
#include "choreo/validator.hpp"

using namespace choreo;

int main() {
    Seed seed = seed_bundled_trefoil();
    const ProblemParams par = seed.params;
    const ReferenceOrbit<Cd> ref = default_reference(seed.x0, par.m);
    NewtonResult nr = newton_refine(seed, NewtonSettings{}, ref);
    const StateX<Cd>& x = nr.x;

    Weight wt{par.nu};
    for (int j = 0; j < par.n - 1; ++j)
        std::printf("||w_%d||_nu = %.6f   w_j(0)=%.6f\n", j + 1, norm_nu(x.w[j], wt),
                    evaluate(x.w[j], 0.0).real());
    for (int p = 0; p < 3; ++p)
        std::printf("||u_%d|| = %.4f  ||v_%d|| = %.4f\n", p + 1, norm_nu(x.u[p], wt), p + 1,
                    norm_nu(x.v[p], wt));

    const Ctx<Cd> ctx = make_ctx(par);
    const Products<Cd> P = build_products(ctx, x);
    for (int j = 0; j < par.n - 1; ++j) {
        std::printf("j=%d S=%.4f G=(%.4f, %.4f, %.4f) ||w3||=%.4f\n", j + 1, std::abs(P.S[j]),
                    std::abs(P.G[j][0]), std::abs(P.G[j][1]), std::abs(P.G[j][2]),
                    norm_nu(P.w3[j], wt));
        std::printf("   psi_0(w3)=%.4e psi_24(w3)=%.4e\n",
                    psi_bound(P.w3[j], 0, par.m, wt), psi_bound(P.w3[j], 24, par.m, wt));
    }
    return 0;
}
