#pragma once

#include <complex>
#include <span>
#include <vector>

namespace capsim::linalg {

using cplx = std::complex<double>;

/// Dense Hermitian matrix, full storage. set() mirrors the conjugate entry so
/// the invariant a(i,j) == conj(a(j,i)) holds by construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(int dim);

    int dim() const { return n_; }
    cplx at(int r, int c) const { return a_[static_cast<size_t>(r) * n_ + c]; }
    void set(int r, int c, cplx v);

    double trace_real() const;
    /// Adds scale * trace / dim to every diagonal entry. Used to keep nearly
    /// singular covariance matrices factorable; perturbs solutions by O(scale).
    void add_ridge(double scale = 1e-10);

private:
    int n_;
    std::vector<cplx> a_;
};

enum class PivotPolicy {
    require_positive,   // non-positive pivot is an error
    allow_semidefinite  // zero out rank-deficient columns instead
};

/// Lower-triangular Cholesky factor with real positive (or exactly zero,
/// under allow_semidefinite) diagonal.
class CholeskyFactor {
public:
    int dim() const { return n_; }
    cplx at(int r, int c) const { return l_[static_cast<size_t>(r) * n_ + c]; }

    /// y = L * z (used to color i.i.d. samples with the factored covariance).
    void apply(std::span<const cplx> z, std::span<cplx> y) const;

    /// Solves (L L^H) x = rhs in place. Requires a strictly positive diagonal.
    void solve_in_place(std::span<cplx> rhs) const;

    double max_reconstruction_error(const HermitianMatrix& m) const;

private:
    friend CholeskyFactor cholesky(const HermitianMatrix&, PivotPolicy);
    int n_ = 0;
    std::vector<cplx> l_;
    bool has_zero_pivot_ = false;
};

CholeskyFactor cholesky(const HermitianMatrix& m,
                        PivotPolicy policy = PivotPolicy::require_positive);

std::vector<cplx> solve_hermitian(const HermitianMatrix& m, std::span<const cplx> rhs);

/// v^H M^{-1} v, guaranteed real and clamped at zero against roundoff.
double quadratic_form(const HermitianMatrix& m, std::span<const cplx> v);

}  // namespace capsim::linalg
