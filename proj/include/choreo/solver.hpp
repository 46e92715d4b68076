// Non-rigorous numerics: seed construction, Newton iteration on the Galerkin
// projection, and natural-parameter continuation in the frequency omega.

#pragma once

#include <string>
#include <vector>

#include "choreo/problem.hpp"

namespace choreo {

using Cd = std::complex<double>;

struct NewtonSettings {
    double tol{1e-12};     // sup-norm residual target
    int max_iter{30};
    double damping{1.0};   // step fraction in (0,1]
};

enum class SeedProvenance { BundledTable, File, LyapunovAnsatz, ContinuationStep };

struct Seed {
    ProblemParams params;
    StateX<Cd> x0;
    SeedProvenance provenance;
};

struct NewtonReport {
    bool converged{false};
    int iterations{0};
    std::vector<double> residuals;  // sup-norm of F^(m) per iterate, including the last
    std::string message;
};

struct NewtonResult {
    StateX<Cd> x;
    NewtonReport report;
};

// The n=5, k=3, 3:1 orbit at m=25, nu=1.03 with u from the bundled half
// spectrum; v = Du, w from sampled reciprocal chord distances, lambda=alpha=0.
Seed seed_bundled_trefoil();

// Bundled half spectrum itself (l = 0..24; sigma extension gives l < 0).
SeqVec<Cd> bundled_trefoil_u();

// Coefficient file ingestion; missing v/w components are synthesized from u.
// Errors on malformed files or component counts inconsistent with params.n;
// a support larger than params.m is truncated and noted in *warning.
Seed seed_from_file(const std::string& path, const ProblemParams& params,
                    std::string* warning = nullptr);

// Polygon relative equilibrium plus a vertical cos(t) perturbation of the
// given amplitude in mode |l| = 1 of u3; w seeded at mode 0 from the polygon
// chord reciprocals 1/(2 sin(j zeta / 2)).
Seed seed_lyapunov(const ProblemParams& params, double amplitude);

// Build w_j = 1/|chord_j| from u on a 2^10 time grid, truncated to m modes.
SeqVec<Cd> w_from_u(const ProblemParams& par, const SeqVec<Cd>& u, int grid = 1024);

// Newton on F^(m) at a frequency chosen independently of the p:q resonance
// (used by continuation); iterates are re-symmetrized each step.
NewtonResult newton_refine_at_omega(const ProblemParams& par, double omega, const StateX<Cd>& x0,
                                    const ReferenceOrbit<Cd>& ref, const NewtonSettings& settings);

// Newton at the resonant frequency of `seed.params`.
NewtonResult newton_refine(const Seed& seed, const NewtonSettings& settings,
                           const ReferenceOrbit<Cd>& ref);

struct ContinuationResult {
    std::vector<StateX<Cd>> states;  // refined state at each omega step
    std::vector<double> omegas;
    bool completed{false};
    std::string message;
};

// Natural-parameter continuation: linearly spaced omega from omega_from to
// omega_to in `steps` Newton solves, each seeded from the previous state with
// the phase reference refreshed.  Stops early (partial results) on failure.
ContinuationResult continue_omega(const ProblemParams& par, const StateX<Cd>& x,
                                  double omega_from, double omega_to, int steps,
                                  const NewtonSettings& settings);

// Default phase reference: the seed's own u projected to m-1 modes.
ReferenceOrbit<Cd> default_reference(const StateX<Cd>& x, int m);

}  // namespace choreo
