// Z1 contribution table: which columns of |A| against which zhat parts.
#include <cstdio>
#include <vector>
#include <cmath>
#include "choreo/validator.hpp"

using namespace choreo;

int main() {
    Seed seed = seed_bundled_trefoil();
    const ProblemParams par = seed.params;
    const ReferenceOrbit<Cd> ref = default_reference(seed.x0, par.m);
    NewtonResult nr = newton_refine(seed, NewtonSettings{}, ref);
    const StateX<Cd>& x = nr.x;
    Operators ops = build_operators(par, x, ref);

    const Layout L{par.n, par.m};
    const long m = par.m;
    const double nu = par.nu;

    // nu-weighted column norms of |A| restricted to v-output rows (p=0)
    auto colnorm_v = [&](long col) {
        double acc = 0.0;
        for (int p = 0; p < 3; ++p)
            for (long l = -(m - 1); l <= m - 1; ++l)
                acc = std::max(acc, 0.0), acc += std::abs(ops.A(L.v(p, l), col)) * std::pow(nu, std::labs(l));
        return acc;
    };
    for (int j = 0; j < 4; ++j)
        std::printf("colnorm over v-rows of alpha_%d column: %.4f\n", j + 1, colnorm_v(L.alpha(j)));
    std::printf("colnorm over v-rows of lambda_1 column: %.4f\n", colnorm_v(L.lambda(0)));
    double cmax = 0;
    for (long s = -(m - 1); s <= m - 1; ++s) cmax = std::max(cmax, colnorm_v(L.v(0, s)) / std::pow(nu, std::labs(s)));
    std::printf("max over s of colnorm(v0,s)/nu^|s| (v rows): %.4f\n", cmax);

    // biggest |A| entries in v-rows vs alpha columns
    double amax = 0;
    for (int p = 0; p < 3; ++p)
        for (long l = -(m - 1); l <= m - 1; ++l)
            for (int j = 0; j < 4; ++j) amax = std::max(amax, std::abs(ops.A(L.v(p, l), L.alpha(j))));
    std::printf("max |A(v-row, alpha-col)| = %.4e\n", amax);
    double wmax = 0;
    for (int j = 0; j < 4; ++j)
        for (long l = -(m - 1); l <= m - 1; ++l)
            for (int jj = 0; jj < 4; ++jj) wmax = std::max(wmax, std::abs(ops.A(L.w(j, l), L.alpha(jj))));
    std::printf("max |A(w-row, alpha-col)| = %.4e\n", wmax);
    return 0;
}
