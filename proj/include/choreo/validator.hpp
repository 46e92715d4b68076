// Rigorous a-posteriori validation: the approximate derivative/inverse pair,
// interval evaluation of the four radii-polynomial bounds, the radii
// polynomial itself, and certificate assembly.

#pragma once

#include <string>

#include "choreo/problem.hpp"
#include "choreo/solver.hpp"

namespace choreo {

struct BoundSet {
    double Y0{0.0}, Z0{0.0}, Z1{0.0}, Z2{0.0};
    double r_star{1e-6};
};

struct Certificate {
    ProblemParams params;
    std::string xbar_sha;  // content hash of the canonical coefficient file
    BoundSet bounds;
    double r0_lo{0.0}, r0_hi{0.0};
    double nondegen{0.0};  // bound on |[A DF(x~)]^-1|
    bool verified{false};
    std::string failure_reason;
    std::string reference_choice;  // how the phase reference was frozen
    std::string timestamp;
};

struct ValidatorOptions {
    double r_star{1e-6};
    int threads{1};
};

// Approximate derivative (interval finite block of A-dagger) and approximate
// inverse (floating-point finite block of A); the diagonal tails are implicit
// rules (D, omega^2 D, D) and (1/(il), 1/(il omega^2), 1/(il)).
struct Operators {
    DenseMatrix<Cd> A;           // A^(m) ~ DF^(m)(xbar)^-1
    DenseMatrix<CIv> Adag;       // interval enclosure of DF^(m)(xbar, omega)
    double op_residual{0.0};     // float check of |I - A * mid(Adag)|_inf
};

Operators build_operators(const ProblemParams& par, const StateX<Cd>& xbar,
                          const ReferenceOrbit<Cd>& ref);

// The four bounds.  All return verified upper ends of interval computations.
double bound_Y0(const ProblemParams& par, const StateX<Cd>& xbar, const ReferenceOrbit<Cd>& ref,
                const Operators& ops);
double bound_Z0(const ProblemParams& par, const Operators& ops, int threads);
double bound_Z1(const ProblemParams& par, const StateX<Cd>& xbar, const ReferenceOrbit<Cd>& ref,
                const Operators& ops);
double bound_Z2(const ProblemParams& par, const StateX<Cd>& xbar, const Operators& ops,
                double r_star);

struct RadiiResult {
    bool ok{false};
    Iv r0{0.0};
    std::string reason;
};

// p(r) = Z2 r^2 + (Z1 + Z0 - 1) r + Y0; picks a radius near the smaller root
// and verifies p(r0) < 0 and Z2 r0 + Z1 + Z0 < 1 in interval arithmetic.
RadiiResult radii_solve(const BoundSet& b);

// 1 / (1 - (Z2 r0 + Z1 + Z0)), the certified non-degeneracy constant.
double nondegeneracy(const BoundSet& b, const Iv& r0);

// Full validation run; fills everything in the certificate except the
// coefficient-file hash and the timestamp (I/O concerns of the caller).
Certificate validate(const ProblemParams& par, const StateX<Cd>& xbar,
                     const ReferenceOrbit<Cd>& ref, const ValidatorOptions& opt = {});

// Interval promotion helpers shared with tests.
StateX<CIv> promote(const StateX<Cd>& x);
SeqVec<CIv> promote(const SeqVec<Cd>& v);

}  // namespace choreo
