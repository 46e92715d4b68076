#include "choreo/validator.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace choreo {

namespace {

using EMat = Eigen::Matrix<Cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// |(M_j y)_p| <= i_p * max_c |y_c| with i_1 = i_2 = 3, i_3 = 2.
inline double ip_const(int p) { return p == 2 ? 2.0 : 3.0; }

double abs_upper(const Cd& z) {
    const double a = std::fabs(z.real()), b = std::fabs(z.imag());
    return up(std::sqrt(add_up(mul_up(a, a), mul_up(b, b))));
}

// nu^d enclosures for d = 0..max_pow
std::vector<Iv> nu_powers(double nu, long max_pow) {
    std::vector<Iv> p(static_cast<size_t>(max_pow) + 1);
    p[0] = Iv{1.0};
    for (long d = 1; d <= max_pow; ++d) p[static_cast<size_t>(d)] = p[static_cast<size_t>(d - 1)] * Iv{nu};
    return p;
}

Iv nu_norm(const CoeffSeq<CIv>& c, const std::vector<Iv>& pw) {
    Iv total = cmod(c.at(0));
    for (long d = 1; d <= c.support_radius(); ++d)
        total += (cmod(c.at(-d)) + cmod(c.at(d))) * pw[static_cast<size_t>(d)];
    return total;
}

// Psi_l(abar) with precomputed weight powers; upper end.
double psi_upper(const CoeffSeq<CIv>& abar, long ell, long m, const std::vector<Iv>& pw) {
    const long N = abar.support_radius();
    double best = 0.0;
    auto scan = [&](long s_lo, long s_hi) {
        for (long s = s_lo; s <= s_hi; ++s) {
            const double num = cmod_upper(abar.at(ell - s));
            best = std::max(best, div_up(num, pw[static_cast<size_t>(std::labs(s))].lo));
        }
    };
    if (ell - N <= -m) scan(ell - N, -m);
    if (m <= ell + N) scan(m, ell + N);
    return best;
}

struct GroupInfo {
    // base index of each sequence group in the packed layout, in order
    // u1,u2,u3,v1,v2,v3,w1..w_{n-1}; tail norms aligned with the same order.
    std::vector<long> seq_base;
    std::vector<double> tail;
    int n, m;
    long span;
};

GroupInfo make_groups(const Layout& L, double tail_u, double tail_v, double tail_w) {
    GroupInfo g;
    g.n = L.n;
    g.m = L.m;
    g.span = L.span();
    for (int p = 0; p < 3; ++p) {
        g.seq_base.push_back(L.u(p, -(L.m - 1)));
        g.tail.push_back(tail_u);
    }
    for (int p = 0; p < 3; ++p) {
        g.seq_base.push_back(L.v(p, -(L.m - 1)));
        g.tail.push_back(tail_v);
    }
    for (int j = 0; j < L.n - 1; ++j) {
        g.seq_base.push_back(L.w(j, -(L.m - 1)));
        g.tail.push_back(tail_w);
    }
    return g;
}

// Weighted mixed operator norm on X of a nonnegative matrix given entrywise
// upper bounds; optionally accounts for diagonal tail norms of A.
double opnorm_X(const DenseMatrix<double>& absM, const Layout& L, const std::vector<Iv>& pw,
                double tail_u, double tail_v, double tail_w) {
    const GroupInfo g = make_groups(L, tail_u, tail_v, tail_w);
    const long nscal = L.n + 2;
    double worst = 0.0;

    // scalar rows
    for (long r = 0; r < nscal; ++r) {
        double total = 0.0;
        for (long c = 0; c < nscal; ++c) total = add_up(total, absM(r, c));
        for (size_t cg = 0; cg < g.seq_base.size(); ++cg) {
            double piece = 0.0;
            for (long s = -(L.m - 1); s <= L.m - 1; ++s) {
                const double e = absM(r, g.seq_base[cg] + (s + L.m - 1));
                piece = std::max(piece, div_up(e, pw[static_cast<size_t>(std::labs(s))].lo));
            }
            total = add_up(total, piece);
        }
        worst = std::max(worst, total);
    }

    // sequence rows
    for (size_t rg = 0; rg < g.seq_base.size(); ++rg) {
        double total = 0.0;
        for (long c = 0; c < nscal; ++c) {
            double colsum = 0.0;
            for (long l = -(L.m - 1); l <= L.m - 1; ++l) {
                const double e = absM(g.seq_base[rg] + (l + L.m - 1), c);
                colsum = add_up(colsum, mul_up(e, pw[static_cast<size_t>(std::labs(l))].hi));
            }
            total = add_up(total, colsum);
        }
        for (size_t cg = 0; cg < g.seq_base.size(); ++cg) {
            double piece = 0.0;
            for (long s = -(L.m - 1); s <= L.m - 1; ++s) {
                double colsum = 0.0;
                for (long l = -(L.m - 1); l <= L.m - 1; ++l) {
                    const double e = absM(g.seq_base[rg] + (l + L.m - 1), g.seq_base[cg] + (s + L.m - 1));
                    colsum = add_up(colsum, mul_up(e, pw[static_cast<size_t>(std::labs(l))].hi));
                }
                piece = std::max(piece, div_up(colsum, pw[static_cast<size_t>(std::labs(s))].lo));
            }
            // the diagonal tail of A acts on the tail modes of the same
            // component, so the column splits between finite and tail parts
            if (cg == rg) piece = std::max(piece, g.tail[rg]);
            total = add_up(total, piece);
        }
        worst = std::max(worst, total);
    }
    return worst;
}

DenseMatrix<double> abs_matrix(const DenseMatrix<Cd>& A) {
    DenseMatrix<double> M(A.rows(), A.cols());
    for (long r = 0; r < A.rows(); ++r)
        for (long c = 0; c < A.cols(); ++c) M(r, c) = abs_upper(A(r, c));
    return M;
}

DenseMatrix<double> abs_matrix(const DenseMatrix<CIv>& A) {
    DenseMatrix<double> M(A.rows(), A.cols());
    for (long r = 0; r < A.rows(); ++r)
        for (long c = 0; c < A.cols(); ++c) M(r, c) = cmod_upper(A(r, c));
    return M;
}

}  // namespace

StateX<CIv> promote(const StateX<Cd>& x) {
    StateX<CIv> out;
    out.alpha.resize(x.alpha.size());
    for (int i = 0; i < 3; ++i) out.lambda[i] = CIv{Iv{x.lambda[i].real()}, Iv{x.lambda[i].imag()}};
    for (size_t j = 0; j < x.alpha.size(); ++j)
        out.alpha[j] = CIv{Iv{x.alpha[j].real()}, Iv{x.alpha[j].imag()}};
    out.u = promote(x.u);
    out.v = promote(x.v);
    out.w = promote(x.w);
    return out;
}

SeqVec<CIv> promote(const SeqVec<Cd>& v) {
    SeqVec<CIv> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        CoeffSeq<CIv> c(v[i].support_radius());
        for (long l = -v[i].support_radius(); l <= v[i].support_radius(); ++l)
            c.ref(l) = CIv{Iv{v[i].ref(l).real()}, Iv{v[i].ref(l).imag()}};
        out[i] = c;
    }
    return out;
}

Operators build_operators(const ProblemParams& par, const StateX<Cd>& xbar,
                          const ReferenceOrbit<Cd>& ref) {
    const Ctx<Cd> ctx = make_ctx(par);
    const Layout L{par.n, par.m};
    const DenseMatrix<Cd> DF = jacobian_galerkin(ctx, xbar, ref);

    Eigen::Map<const EMat> A_eig(DF.data(), L.size(), L.size());
    Eigen::PartialPivLU<EMat> lu(A_eig);
    const EMat inv = lu.inverse();
    if (!inv.allFinite()) throw std::runtime_error("build_operators: DF^(m) numerically singular");

    Operators ops;
    ops.A = DenseMatrix<Cd>(L.size(), L.size());
    for (long r = 0; r < L.size(); ++r)
        for (long c = 0; c < L.size(); ++c) ops.A(r, c) = inv(r, c);

    const EMat resid = EMat::Identity(L.size(), L.size()) - inv * A_eig;
    ops.op_residual = resid.cwiseAbs().rowwise().sum().maxCoeff();
    if (!(ops.op_residual < 1e-3))
        throw std::runtime_error("build_operators: approximate inverse too inaccurate");

    const Ctx<CIv> ctx_iv = make_ctx_iv(par);
    const StateX<CIv> xbar_iv = promote(xbar);
    const ReferenceOrbit<CIv> ref_iv(promote(ref.u));
    ops.Adag = jacobian_galerkin(ctx_iv, xbar_iv, ref_iv);
    return ops;
}

double bound_Y0(const ProblemParams& par, const StateX<Cd>& xbar, const ReferenceOrbit<Cd>& ref,
                const Operators& ops) {
    const Ctx<CIv> ctx = make_ctx_iv(par);
    const Layout L{par.n, par.m};
    const StateX<CIv> x = promote(xbar);
    const ReferenceOrbit<CIv> ref_iv(promote(ref.u));
    const Products<CIv> P = build_products(ctx, x);
    const YVec<CIv> Y = eval_F(ctx, x, ref_iv, P);
    const std::vector<Iv> pw = nu_powers(par.nu, 5L * par.m);

    const std::vector<CIv> AFfin = matvec_point(ops.A, pack_F_galerkin(Y, L));

    double y0 = 0.0;
    for (long i = 0; i < L.n + 2; ++i) y0 = std::max(y0, cmod_upper(AFfin[static_cast<size_t>(i)]));

    auto finite_norm = [&](long base) {
        Iv total{0.0};
        for (long l = -(L.m - 1); l <= L.m - 1; ++l)
            total += cmod(AFfin[static_cast<size_t>(base + (l + L.m - 1))]) *
                     pw[static_cast<size_t>(std::labs(l))];
        return total;
    };
    // u rows: f(xbar) has no tail beyond m-1
    for (int p = 0; p < 3; ++p) y0 = std::max(y0, finite_norm(L.u(p, -(L.m - 1))).hi);
    // v rows: tail of g weighted by 1/(l omega^2)
    for (int p = 0; p < 3; ++p) {
        Iv total = finite_norm(L.v(p, -(L.m - 1)));
        for (long l = par.m; l <= Y.g[p].support_radius(); ++l) {
            const Iv den = Iv{static_cast<double>(l)} * ctx.omega2;
            total += (cmod(Y.g[p].at(l)) + cmod(Y.g[p].at(-l))) * pw[static_cast<size_t>(l)] / den;
        }
        y0 = std::max(y0, total.hi);
    }
    // w rows: tail of h weighted by 1/l
    for (int j = 0; j < L.n - 1; ++j) {
        Iv total = finite_norm(L.w(j, -(L.m - 1)));
        const auto& hj = Y.h[static_cast<size_t>(j)];
        for (long l = par.m; l <= hj.support_radius(); ++l)
            total += (cmod(hj.at(l)) + cmod(hj.at(-l))) * pw[static_cast<size_t>(l)] /
                     Iv{static_cast<double>(l)};
        y0 = std::max(y0, total.hi);
    }
    return y0;
}

double bound_Z0(const ProblemParams& par, const Operators& ops, int threads) {
    const Layout L{par.n, par.m};
    const DenseMatrix<CIv> B = residual_identity_minus(ops.A, ops.Adag, threads);
    const DenseMatrix<double> absB = abs_matrix(B);
    const std::vector<Iv> pw = nu_powers(par.nu, par.m);
    return opnorm_X(absB, L, pw, 0.0, 0.0, 0.0);
}

double bound_Z1(const ProblemParams& par, const StateX<Cd>& xbar, const ReferenceOrbit<Cd>& ref,
                const Operators& ops) {
    (void)ref;
    const Ctx<CIv> ctx = make_ctx_iv(par);
    const Layout L{par.n, par.m};
    const long m = par.m;
    const StateX<CIv> x = promote(xbar);
    const Products<CIv> P = build_products(ctx, x);
    const std::vector<Iv> pw = nu_powers(par.nu, 5L * m);
    const size_t nm1 = static_cast<size_t>(par.n - 1);

    // hat z vector (componentwise upper bounds for |z^(m)|)
    std::vector<double> zhat(static_cast<size_t>(L.size()), 0.0);

    // alpha part: tail dual norm of the gamma_j row.  The row pairs h against
    // w*Q (w columns) and w^2*(M_j u)_p (u columns), both supported within
    // 3(m-1), so the maxima below are exact tail functionals.
    for (size_t j = 0; j < nm1; ++j) {
        double t_w = 0.0, t_u = 0.0;
        const long Nw = P.wQ[j].support_radius();
        for (long s = m; s <= Nw; ++s) {
            t_w = std::max(t_w, div_up(cmod_upper(P.wQ[j].at(s)), pw[static_cast<size_t>(s)].lo));
            t_w = std::max(t_w, div_up(cmod_upper(P.wQ[j].at(-s)), pw[static_cast<size_t>(s)].lo));
        }
        const long Nu = P.w2Mu[j][0].support_radius();
        for (long s = m; s <= Nu; ++s) {
            for (long sgn = -1; sgn <= 1; sgn += 2) {
                const Mat3<CIv> Mj = ctx.M(static_cast<long>(j) + 1, sgn * s);
                for (int c = 0; c < 3; ++c) {
                    CIv acc{};
                    for (int p = 0; p < 3; ++p)
                        acc += P.w2Mu[j][p].at(-sgn * s) * Mj.entry(p, c);
                    t_u = std::max(t_u, div_up(cmod_upper(acc), pw[static_cast<size_t>(s)].lo));
                }
            }
        }
        zhat[static_cast<size_t>(L.alpha(static_cast<int>(j)))] =
            add_up(mul_up(2.0, t_w), mul_up(2.0, t_u));
    }

    // v part: Psi bounds of w_j^3 and (M_j u)_p * w_j^2
    for (int p = 0; p < 3; ++p) {
        for (long l = -(m - 1); l <= m - 1; ++l) {
            double acc = 0.0;
            for (size_t j = 0; j < nm1; ++j) {
                acc = add_up(acc, mul_up(ip_const(p), psi_upper(P.w3[j], l, m, pw)));
                acc = add_up(acc, mul_up(3.0, psi_upper(P.w2Mu[j][p], l, m, pw)));
            }
            zhat[static_cast<size_t>(L.v(p, l))] = acc;
        }
    }

    // w part
    for (size_t j = 0; j < nm1; ++j) {
        const double absa = abs_upper(xbar.alpha[j]);
        for (long l = -(m - 1); l <= m - 1; ++l) {
            double acc = mul_up(mul_up(3.0, absa), psi_upper(P.w2[j], l, m, pw));
            for (int p = 0; p < 3; ++p) {
                acc = add_up(acc, mul_up(3.0, psi_upper(P.w2MuMv[j][p], l, m, pw)));
                acc = add_up(acc, mul_up(ip_const(p), psi_upper(P.w3Mv[j][p], l, m, pw)));
                acc = add_up(acc, mul_up(ip_const(p), psi_upper(P.w3Mu[j][p], l, m, pw)));
            }
            zhat[static_cast<size_t>(L.w(static_cast<int>(j), l))] = acc;
        }
    }

    // xi = |A^(m)| * zhat, rounded upward
    std::vector<double> xi(static_cast<size_t>(L.size()), 0.0);
    for (long r = 0; r < L.size(); ++r) {
        double acc = 0.0;
        for (long c = 0; c < L.size(); ++c)
            acc = add_up(acc, mul_up(abs_upper(ops.A(r, c)), zhat[static_cast<size_t>(c)]));
        xi[static_cast<size_t>(r)] = acc;
    }

    // tail bounds delta_u, delta_v, delta_w
    std::vector<Iv> unorm(3), vnorm(3), wnorm(nm1);
    for (int p = 0; p < 3; ++p) {
        unorm[p] = nu_norm(x.u[p], pw);
        vnorm[p] = nu_norm(x.v[p], pw);
    }
    for (size_t j = 0; j < nm1; ++j) wnorm[j] = nu_norm(x.w[j], pw);
    std::vector<Iv> Munorm(3 * nm1), w3n(nm1), w2n(nm1);
    for (size_t j = 0; j < nm1; ++j) {
        for (int p = 0; p < 3; ++p) Munorm[3 * j + p] = nu_norm(P.Mu[j][p], pw);
        w3n[j] = sqr(wnorm[j]) * wnorm[j];
        w2n[j] = sqr(wnorm[j]);
    }

    const Iv mI{static_cast<double>(m)};
    const double delta_u = div_up(1.0, static_cast<double>(m));
    const Iv l1 = cmod(CIv{Iv{xbar.lambda[0].real()}, Iv{xbar.lambda[0].imag()}});
    const Iv l2 = cmod(CIv{Iv{xbar.lambda[1].real()}, Iv{xbar.lambda[1].imag()}});

    std::array<Iv, 3> delta_v;
    for (int p = 0; p < 3; ++p) {
        Iv sum{0.0};
        if (p == 0) sum = ctx.two_omega_sqrt_s1 + ctx.s1 + unorm[1] + l1 + l2 + vnorm[0];
        if (p == 1) sum = ctx.two_omega_sqrt_s1 + ctx.s1 + unorm[0] + l1 + l2 + vnorm[1];
        if (p == 2) sum = l2 + vnorm[2];
        for (size_t j = 0; j < nm1; ++j) {
            sum += Iv{ip_const(p)} * w3n[j];
            sum += Iv{3.0} * Munorm[3 * j + p] * w2n[j];
        }
        delta_v[p] = sum / (mI * ctx.omega2);
    }

    std::vector<Iv> delta_w(nm1);
    for (size_t j = 0; j < nm1; ++j) {
        const Iv absa = cmod(CIv{Iv{xbar.alpha[j].real()}, Iv{xbar.alpha[j].imag()}});
        Iv sum = w3n[j] + Iv{3.0} * absa * w2n[j];
        for (int p = 0; p < 3; ++p) {
            const Iv Mvn = nu_norm(P.Mv[j][p], pw);
            sum += Iv{3.0} * w2n[j] * Munorm[3 * j + p] * Mvn;
            sum += Iv{ip_const(p)} * w3n[j] * (Munorm[3 * j + p] + Mvn);
        }
        delta_w[j] = sum / mI;
    }

    // Z1 = max over component groups of the xi norms plus tails
    double z1 = 0.0;
    for (long i = 0; i < L.n + 2; ++i) z1 = std::max(z1, xi[static_cast<size_t>(i)]);
    auto xi_norm = [&](long base) {
        double acc = 0.0;
        for (long l = -(m - 1); l <= m - 1; ++l)
            acc = add_up(acc, mul_up(xi[static_cast<size_t>(base + (l + m - 1))],
                                     pw[static_cast<size_t>(std::labs(l))].hi));
        return acc;
    };
    for (int p = 0; p < 3; ++p)
        z1 = std::max(z1, add_up(xi_norm(L.u(p, -(m - 1))), delta_u));
    for (int p = 0; p < 3; ++p)
        z1 = std::max(z1, add_up(xi_norm(L.v(p, -(m - 1))), delta_v[p].hi));
    for (size_t j = 0; j < nm1; ++j)
        z1 = std::max(z1, add_up(xi_norm(L.w(static_cast<int>(j), -(m - 1))), delta_w[j].hi));
    return z1;
}

double bound_Z2(const ProblemParams& par, const StateX<Cd>& xbar, const Operators& ops,
                double r_star) {
    const Ctx<CIv> ctx = make_ctx_iv(par);
    const Layout L{par.n, par.m};
    const StateX<CIv> x = promote(xbar);
    const std::vector<Iv> pw = nu_powers(par.nu, par.m);
    const size_t nm1 = static_cast<size_t>(par.n - 1);

    // |A|_{B(X)}: finite-block mixed norm with the diagonal tail norms folded
    // into the matching column groups.
    const DenseMatrix<double> absA = abs_matrix(ops.A);
    const double tail_u = div_up(1.0, static_cast<double>(par.m));
    const double tail_v = div_up(1.0, mul_dn(static_cast<double>(par.m), ctx.omega2.lo));
    const double normA = opnorm_X(absA, L, pw, tail_u, tail_v, tail_u);

    const Iv rs{r_star};
    std::array<Iv, 3> du, dv;  // hat delta_p(u), hat delta_p(v)
    const Iv u1n = nu_norm(x.u[0], pw), u2n = nu_norm(x.u[1], pw), u3n = nu_norm(x.u[2], pw);
    const Iv v1n = nu_norm(x.v[0], pw), v2n = nu_norm(x.v[1], pw), v3n = nu_norm(x.v[2], pw);
    du[0] = Iv{2.0} * u1n + u2n + Iv{3.0} * rs;
    du[1] = u1n + Iv{2.0} * u2n + Iv{3.0} * rs;
    du[2] = Iv{2.0} * u3n + Iv{2.0} * rs;
    dv[0] = Iv{2.0} * v1n + v2n + Iv{3.0} * rs;
    dv[1] = v1n + Iv{2.0} * v2n + Iv{3.0} * rs;
    dv[2] = Iv{2.0} * v3n + Iv{2.0} * rs;

    Iv zmax{0.0};
    for (size_t j = 0; j < nm1; ++j) {
        const Iv what = nu_norm(x.w[j], pw) + rs;
        const Iv absa = cmod(CIv{Iv{xbar.alpha[j].real()}, Iv{xbar.alpha[j].imag()}});

        Iv zalpha{0.0}, zw{0.0};
        for (int p = 0; p < 3; ++p) {
            const Iv ip{ip_const(p)};
            zalpha += sqr(du[p]) + Iv{4.0} * what * ip * du[p] + sqr(what) * sqr(ip);
            zw += Iv{3.0} * du[p] * dv[p] + Iv{3.0} * what * ip * (du[p] + dv[p]) +
                  sqr(what) * sqr(ip);
        }
        zalpha = Iv{2.0} * zalpha;
        zw = Iv{2.0} * what * zw + Iv{6.0} * what * (what + absa + rs);
        zmax = imax(zmax, imax(zalpha, zw));
    }
    for (int p = 0; p < 3; ++p) {
        Iv zv{4.0};
        for (size_t j = 0; j < nm1; ++j) {
            const Iv what = nu_norm(x.w[j], pw) + rs;
            zv += Iv{6.0} * (Iv{ip_const(p)} * sqr(what) + du[p] * what);
        }
        zmax = imax(zmax, zv);
    }
    return mul_up(normA, zmax.hi);
}

RadiiResult radii_solve(const BoundSet& b) {
    RadiiResult out;
    const double lin = add_up(b.Z0, b.Z1);
    if (lin >= 1.0) {
        out.reason = "Z0 + Z1 >= 1";
        return out;
    }
    // roots of Z2 r^2 - (1 - Z0 - Z1) r + Y0
    const double negb = 1.0 - b.Z0 - b.Z1;
    std::vector<double> candidates;
    if (b.Z2 == 0.0) {
        candidates.push_back(1.01 * b.Y0 / negb);
        candidates.push_back(b.r_star);
    } else {
        const double disc = negb * negb - 4.0 * b.Z2 * b.Y0;
        if (disc <= 0.0) {
            out.reason = "discriminant <= 0 (Y0 too large against Z2)";
            return out;
        }
        const double rminus = (negb - std::sqrt(disc)) / (2.0 * b.Z2);
        const double rplus = (negb + std::sqrt(disc)) / (2.0 * b.Z2);
        if (rminus > b.r_star) {
            out.reason = "smaller root exceeds r_star";
            return out;
        }
        candidates.push_back(rminus * 1.01);
        candidates.push_back(std::sqrt(rminus * std::min(rplus, b.r_star)));
        candidates.push_back(0.5 * (rminus + std::min(rplus, b.r_star)));
    }
    for (double cand : candidates) {
        if (!(cand > 0.0) || cand > b.r_star) continue;
        const Iv r{cand};
        const Iv p = Iv{b.Z2} * sqr(r) + (Iv{b.Z1} + Iv{b.Z0} - Iv{1.0}) * r + Iv{b.Y0};
        const Iv contraction = Iv{b.Z2} * r + Iv{b.Z1} + Iv{b.Z0};
        if (p.hi < 0.0 && contraction.hi < 1.0) {
            out.ok = true;
            out.r0 = r;
            return out;
        }
    }
    out.reason = "no verifiable radius found below r_star";
    return out;
}

double nondegeneracy(const BoundSet& b, const Iv& r0) {
    const Iv denom = Iv{1.0} - (Iv{b.Z2} * r0 + Iv{b.Z1} + Iv{b.Z0});
    if (!(denom.lo > 0.0)) throw std::domain_error("nondegeneracy: Z2 r0 + Z1 + Z0 >= 1");
    return (Iv{1.0} / denom).hi;
}

Certificate validate(const ProblemParams& par, const StateX<Cd>& xbar,
                     const ReferenceOrbit<Cd>& ref, const ValidatorOptions& opt) {
    par.validate();
    Certificate cert;
    cert.params = par;
    cert.bounds.r_star = opt.r_star;
    {
        std::ostringstream rc;
        rc << "utilde = pi^(m-1) of the seed orbit, support radius "
           << ref.u[0].support_radius();
        cert.reference_choice = rc.str();
    }

    if (sigma_asymmetry(xbar) != 0.0) {
        cert.failure_reason = "xbar is not exactly sigma-symmetric";
        return cert;
    }
    for (int p = 0; p < 3; ++p) {
        const auto refl = conj_reflect(ref.u[p]);
        for (long l = -ref.u[p].support_radius(); l <= ref.u[p].support_radius(); ++l)
            if (ref.u[p].ref(l) != refl.ref(l)) {
                cert.failure_reason = "reference orbit is not sigma-symmetric";
                return cert;
            }
        if (ref.u[p].support_radius() > par.m - 2) {
            cert.failure_reason = "reference orbit support must stay below m-1";
            return cert;
        }
    }

    Operators ops;
    try {
        ops = build_operators(par, xbar, ref);
    } catch (const std::exception& e) {
        cert.failure_reason = e.what();
        return cert;
    }

    cert.bounds.Y0 = bound_Y0(par, xbar, ref, ops);
    cert.bounds.Z0 = bound_Z0(par, ops, opt.threads);
    cert.bounds.Z1 = bound_Z1(par, xbar, ref, ops);
    cert.bounds.Z2 = bound_Z2(par, xbar, ops, opt.r_star);

    const RadiiResult rr = radii_solve(cert.bounds);
    if (!rr.ok) {
        std::ostringstream msg;
        msg << "radii polynomial not verifiable: " << rr.reason << " (Y0=" << cert.bounds.Y0
            << " Z0=" << cert.bounds.Z0 << " Z1=" << cert.bounds.Z1 << " Z2=" << cert.bounds.Z2
            << ")";
        cert.failure_reason = msg.str();
        return cert;
    }
    cert.r0_lo = rr.r0.lo;
    cert.r0_hi = rr.r0.hi;
    cert.nondegen = nondegeneracy(cert.bounds, rr.r0);
    cert.verified = true;
    return cert;
}

}  // namespace choreo
