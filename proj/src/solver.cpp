#include "choreo/solver.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace choreo {

namespace {
constexpr double kPi = 3.141592653589793;

using EMat = Eigen::Matrix<Cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EVec = Eigen::Matrix<Cd, Eigen::Dynamic, 1>;

double sup_norm(const std::vector<Cd>& v) {
    double r = 0.0;
    for (const auto& z : v) r = std::max(r, std::abs(z));
    return r;
}

Ctx<Cd> ctx_at_omega(const ProblemParams& par, double omega) {
    Ctx<Cd> ctx = make_ctx(par);
    ctx.omega = omega;
    ctx.omega2 = omega * omega;
    ctx.two_omega_sqrt_s1 = 2.0 * omega * ctx.sqrt_s1;
    return ctx;
}
}  // namespace

ReferenceOrbit<Cd> default_reference(const StateX<Cd>& x, int m) {
    return ReferenceOrbit<Cd>(project(x.u, m - 1));
}

SeqVec<Cd> w_from_u(const ProblemParams& par, const SeqVec<Cd>& u, int grid) {
    const double zeta = par.zeta();
    const size_t nm1 = static_cast<size_t>(par.n - 1);
    std::vector<std::vector<double>> samples(nm1, std::vector<double>(static_cast<size_t>(grid)));
    for (int i = 0; i < grid; ++i) {
        const double t = 2.0 * kPi * i / grid;
        std::array<double, 3> pos;
        for (int p = 0; p < 3; ++p) pos[p] = evaluate(u[p], t).real();
        for (int j = 1; j < par.n; ++j) {
            const double tj = t + j * par.k * zeta;
            const double cj = std::cos(j * zeta), sj = std::sin(j * zeta);
            std::array<double, 3> s;
            for (int p = 0; p < 3; ++p) s[p] = evaluate(u[p], tj).real();
            const std::array<double, 3> rot{cj * s[0] - sj * s[1], sj * s[0] + cj * s[1], s[2]};
            const double dx = pos[0] - rot[0], dy = pos[1] - rot[1], dz = pos[2] - rot[2];
            samples[static_cast<size_t>(j - 1)][static_cast<size_t>(i)] =
                1.0 / std::sqrt(dx * dx + dy * dy + dz * dz);
        }
    }
    SeqVec<Cd> w(nm1, par.m - 1);
    for (size_t j = 0; j < nm1; ++j) {
        for (long l = -(par.m - 1); l <= par.m - 1; ++l) {
            Cd acc{};
            for (int i = 0; i < grid; ++i) {
                const double t = 2.0 * kPi * i / grid;
                acc += samples[j][static_cast<size_t>(i)] * Cd{std::cos(l * t), -std::sin(l * t)};
            }
            w[j].ref(l) = acc / static_cast<double>(grid);
        }
        w[j] = project(w[j], par.m);
    }
    return w;
}

Seed seed_bundled_trefoil() {
    ProblemParams par;
    par.n = 5;
    par.k = 3;
    par.p = 3;
    par.q = 1;
    par.m = 25;
    par.nu = 1.03;
    StateX<Cd> x = StateX<Cd>::zero(par.n, par.m);
    const SeqVec<Cd> u = bundled_trefoil_u();
    for (int p = 0; p < 3; ++p) x.u[p] = project(u[p], par.m);
    x.v = differentiate(x.u);
    x.w = w_from_u(par, x.u);
    return Seed{par, sigma_symmetrize(x), SeedProvenance::BundledTable};
}

Seed seed_lyapunov(const ProblemParams& params, double amplitude) {
    params.validate();
    StateX<Cd> x = StateX<Cd>::zero(params.n, params.m);
    x.u[0].ref(0) = Cd{1.0, 0.0};
    x.u[2].ref(1) = Cd{0.5 * amplitude, 0.0};
    x.u[2].ref(-1) = Cd{0.5 * amplitude, 0.0};
    x.v = differentiate(x.u);
    const double zeta = params.zeta();
    for (int j = 1; j < params.n; ++j)
        x.w[static_cast<size_t>(j - 1)].ref(0) = Cd{1.0 / (2.0 * std::sin(0.5 * j * zeta)), 0.0};
    return Seed{params, x, SeedProvenance::LyapunovAnsatz};
}

NewtonResult newton_refine_at_omega(const ProblemParams& par, double omega, const StateX<Cd>& x0,
                                    const ReferenceOrbit<Cd>& ref, const NewtonSettings& settings) {
    if (!(settings.tol > 0.0)) throw std::invalid_argument("newton: tol must be positive");
    const Ctx<Cd> ctx = ctx_at_omega(par, omega);
    const Layout L{par.n, par.m};
    NewtonResult out;
    out.x = sigma_symmetrize(x0);

    for (int it = 0; it <= settings.max_iter; ++it) {
        const Products<Cd> P = build_products(ctx, out.x);
        const std::vector<Cd> Fv = pack_F_galerkin(eval_F(ctx, out.x, ref, P), L);
        const double res = sup_norm(Fv);
        out.report.residuals.push_back(res);
        if (!std::isfinite(res)) {
            out.report.message = "residual diverged";
            return out;
        }
        if (res <= settings.tol) {
            out.report.converged = true;
            out.report.iterations = it;
            return out;
        }
        if (it == settings.max_iter) break;

        const DenseMatrix<Cd> J = jacobian_galerkin(ctx, out.x, ref, P);
        Eigen::Map<const EMat> A(J.data(), L.size(), L.size());
        Eigen::Map<const EVec> b(Fv.data(), L.size());
        const EVec delta = Eigen::PartialPivLU<EMat>(A).solve(-b);
        if (!delta.allFinite()) {
            out.report.message = "singular linear solve";
            out.report.iterations = it;
            return out;
        }
        std::vector<Cd> xv = pack_state(out.x, L);
        for (long i = 0; i < L.size(); ++i) xv[static_cast<size_t>(i)] += settings.damping * delta[i];
        out.x = sigma_symmetrize(unpack_state(xv, L));
    }
    out.report.iterations = settings.max_iter;
    out.report.message = "max_iter exceeded";
    return out;
}

NewtonResult newton_refine(const Seed& seed, const NewtonSettings& settings,
                           const ReferenceOrbit<Cd>& ref) {
    return newton_refine_at_omega(seed.params, seed.params.omega(), seed.x0, ref, settings);
}

ContinuationResult continue_omega(const ProblemParams& par, const StateX<Cd>& x,
                                  double omega_from, double omega_to, int steps,
                                  const NewtonSettings& settings) {
    if (steps < 1) throw std::invalid_argument("continue_omega: steps must be >= 1");
    ContinuationResult out;
    StateX<Cd> cur = x;
    for (int i = 1; i <= steps; ++i) {
        const double om = omega_from + (omega_to - omega_from) * i / steps;
        const ReferenceOrbit<Cd> ref = default_reference(cur, par.m);
        NewtonResult r = newton_refine_at_omega(par, om, cur, ref, settings);
        if (!r.report.converged) {
            std::ostringstream msg;
            msg << "continuation step " << i << " (omega=" << om
                << ") failed: " << (r.report.message.empty() ? "no convergence" : r.report.message);
            out.message = msg.str();
            return out;
        }
        cur = r.x;
        out.states.push_back(cur);
        out.omegas.push_back(om);
    }
    out.completed = true;
    return out;
}

}  // namespace choreo
