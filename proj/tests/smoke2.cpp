// Validator smoke: full trefoil certificate.
#include <cstdio>
#include "choreo/validator.hpp"

using namespace choreo;

int main() {
    Seed seed = seed_bundled_trefoil();
    const ReferenceOrbit<Cd> ref = default_reference(seed.x0, seed.params.m);
    NewtonSettings st;
    NewtonResult nr = newton_refine(seed, st, ref);
    std::printf("newton: converged=%d final res=%.3e\n", nr.report.converged,
                nr.report.residuals.back());
    ValidatorOptions opt;
    opt.threads = 2;
    Certificate cert = validate(seed.params, nr.x, ref, opt);
    std::printf("Y0=%.6e Z0=%.6e Z1=%.6e Z2=%.6e\n", cert.bounds.Y0, cert.bounds.Z0,
                cert.bounds.Z1, cert.bounds.Z2);
    std::printf("verified=%d r0=[%.6e, %.6e] nondegen=%.6e\n", cert.verified, cert.r0_lo,
                cert.r0_hi, cert.nondegen);
    if (!cert.verified) std::printf("reason: %s\n", cert.failure_reason.c_str());
    return cert.verified ? 0 : 1;
}
