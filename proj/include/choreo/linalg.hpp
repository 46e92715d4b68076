// Minimal dense row-major matrix shared by the solver (complex<double>) and
// the validator (CIv).  Rigorous products are written out explicitly; the
// float path gets LU/inverse through Eigen inside solver.cpp/validator.cpp.

#pragma once

#include <complex>
#include <thread>
#include <vector>

#include "choreo/interval.hpp"

namespace choreo {

template <class C>
class DenseMatrix {
  public:
    DenseMatrix() : nr_(0), nc_(0) {}
    DenseMatrix(long rows, long cols) : nr_(rows), nc_(cols), a_(static_cast<size_t>(rows) * cols) {}

    long rows() const { return nr_; }
    long cols() const { return nc_; }
    C& operator()(long r, long c) { return a_[static_cast<size_t>(r) * nc_ + c]; }
    const C& operator()(long r, long c) const { return a_[static_cast<size_t>(r) * nc_ + c]; }
    C* data() { return a_.data(); }
    const C* data() const { return a_.data(); }

  private:
    long nr_, nc_;
    std::vector<C> a_;
};

template <class C>
std::vector<C> matvec(const DenseMatrix<C>& M, const std::vector<C>& x) {
    std::vector<C> y(static_cast<size_t>(M.rows()));
    for (long r = 0; r < M.rows(); ++r) {
        C acc{};
        for (long c = 0; c < M.cols(); ++c) acc += M(r, c) * x[static_cast<size_t>(c)];
        y[static_cast<size_t>(r)] = acc;
    }
    return y;
}

// y = A * x with a point matrix A and interval vector x.
inline std::vector<CIv> matvec_point(const DenseMatrix<std::complex<double>>& A,
                                     const std::vector<CIv>& x) {
    std::vector<CIv> y(static_cast<size_t>(A.rows()));
    for (long r = 0; r < A.rows(); ++r) {
        CIv acc{};
        for (long c = 0; c < A.cols(); ++c) {
            const std::complex<double>& p = A(r, c);
            const CIv& b = x[static_cast<size_t>(c)];
            acc.re += mul_pi(p.real(), b.re) - mul_pi(p.imag(), b.im);
            acc.im += mul_pi(p.real(), b.im) + mul_pi(p.imag(), b.re);
        }
        y[static_cast<size_t>(r)] = acc;
    }
    return y;
}

// R = I - A * B with a point matrix A and interval matrix B.  Rows are
// independent, so splitting them over threads cannot change any entry.
inline DenseMatrix<CIv> residual_identity_minus(const DenseMatrix<std::complex<double>>& A,
                                                const DenseMatrix<CIv>& B, int threads) {
    const long n = A.rows();
    DenseMatrix<CIv> R(n, n);
    auto run_rows = [&](long r0, long r1) {
        for (long r = r0; r < r1; ++r) {
            for (long c = 0; c < n; ++c) {
                CIv acc{};
                for (long k = 0; k < n; ++k) {
                    const std::complex<double>& p = A(r, k);
                    const CIv& b = B(k, c);
                    acc.re += mul_pi(p.real(), b.re) - mul_pi(p.imag(), b.im);
                    acc.im += mul_pi(p.real(), b.im) + mul_pi(p.imag(), b.re);
                }
                CIv val{CIv{r == c ? 1.0 : 0.0} - acc};
                R(r, c) = val;
            }
        }
    };
    if (threads <= 1) {
        run_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        const long chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const long r0 = t * chunk, r1 = std::min(n, r0 + chunk);
            if (r0 >= r1) break;
            pool.emplace_back(run_rows, r0, r1);
        }
        for (auto& th : pool) th.join();
    }
    return R;
}

}  // namespace choreo
