#include "capsim/linalg.hpp"

#include <cmath>
#include <string>

#include "capsim/errors.hpp"

namespace capsim::linalg {

HermitianMatrix::HermitianMatrix(int dim) : n_(dim) {
    if (dim < 1) throw DomainError("HermitianMatrix: dimension must be >= 1");
    a_.assign(static_cast<size_t>(n_) * n_, cplx{0.0, 0.0});
}

void HermitianMatrix::set(int r, int c, cplx v) {
    a_[static_cast<size_t>(r) * n_ + c] = v;
    a_[static_cast<size_t>(c) * n_ + r] = std::conj(v);
    if (r == c) a_[static_cast<size_t>(r) * n_ + c] = cplx{v.real(), 0.0};
}

double HermitianMatrix::trace_real() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i).real();
    return t;
}

void HermitianMatrix::add_ridge(double scale) {
    double eps = scale * trace_real() / n_;
    for (int i = 0; i < n_; ++i) {
        a_[static_cast<size_t>(i) * n_ + i] += eps;
    }
}

CholeskyFactor cholesky(const HermitianMatrix& m, PivotPolicy policy) {
    const int n = m.dim();
    CholeskyFactor f;
    f.n_ = n;
    f.l_.assign(static_cast<size_t>(n) * n, cplx{0.0, 0.0});
    auto l = [&](int r, int c) -> cplx& { return f.l_[static_cast<size_t>(r) * n + c]; };

    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::fmax(max_diag, std::fabs(m.at(i, i).real()));
    const double pivot_floor = 4096.0 * 2.220446049250313e-16 * max_diag;

    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j).real();
        for (int k = 0; k < j; ++k) d -= std::norm(l(j, k));

        if (d <= pivot_floor) {
            if (policy == PivotPolicy::allow_semidefinite && d > -pivot_floor) {
                // Rank-deficient direction: this coordinate is already fully
                // determined by earlier ones. Leave the column zero.
                f.has_zero_pivot_ = true;
                continue;
            }
            throw DecompositionError(
                "cholesky: non-positive pivot " + std::to_string(d) + " at index " +
                    std::to_string(j),
                j);
        }

        double ljj = std::sqrt(d);
        l(j, j) = cplx{ljj, 0.0};
        for (int i = j + 1; i < n; ++i) {
            cplx s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return f;
}

void CholeskyFactor::apply(std::span<const cplx> z, std::span<cplx> y) const {
    for (int r = 0; r < n_; ++r) {
        cplx s{0.0, 0.0};
        for (int c = 0; c <= r; ++c) s += at(r, c) * z[c];
        y[r] = s;
    }
}

void CholeskyFactor::solve_in_place(std::span<cplx> rhs) const {
    if (has_zero_pivot_)
        throw DecompositionError("cholesky solve: factor is rank deficient", -1);
    // Forward: L y = rhs
    for (int i = 0; i < n_; ++i) {
        cplx s = rhs[i];
        for (int k = 0; k < i; ++k) s -= at(i, k) * rhs[k];
        rhs[i] = s / at(i, i).real();
    }
    // Backward: L^H x = y
    for (int i = n_ - 1; i >= 0; --i) {
        cplx s = rhs[i];
        for (int k = i + 1; k < n_; ++k) s -= std::conj(at(k, i)) * rhs[k];
        rhs[i] = s / at(i, i).real();
    }
}

double CholeskyFactor::max_reconstruction_error(const HermitianMatrix& m) const {
    double worst = 0.0;
    for (int r = 0; r < n_; ++r) {
        for (int c = 0; c <= r; ++c) {
            cplx s{0.0, 0.0};
            for (int k = 0; k <= c; ++k) s += at(r, k) * std::conj(at(c, k));
            worst = std::fmax(worst, std::abs(s - m.at(r, c)));
        }
    }
    return worst;
}

std::vector<cplx> solve_hermitian(const HermitianMatrix& m, std::span<const cplx> rhs) {
    if (static_cast<int>(rhs.size()) != m.dim())
        throw DomainError("solve_hermitian: rhs length must match dimension");
    CholeskyFactor f = cholesky(m, PivotPolicy::require_positive);
    std::vector<cplx> x(rhs.begin(), rhs.end());
    f.solve_in_place(x);
    return x;
}

double quadratic_form(const HermitianMatrix& m, std::span<const cplx> v) {
    std::vector<cplx> x = solve_hermitian(m, v);
    cplx s{0.0, 0.0};
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(v[i]) * x[i];
    return std::fmax(0.0, s.real());
}

}  // namespace capsim::linalg
