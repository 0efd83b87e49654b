#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace gaugelens {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Eigendecomposition of a symmetric matrix, eigenvalues sorted descending
// and paired with the columns of `eigenvectors`.
struct Spectrum {
    Vector eigenvalues;
    Matrix eigenvectors;
};

struct SvdResult {
    Matrix U;       // m x r, orthonormal columns
    Vector s;       // r singular values, nonincreasing, >= 0
    Matrix V;       // n x r, orthonormal columns
};

enum class GaugeKind { identity, orthogonal, diagonal, general, whitening };

const char* to_string(GaugeKind kind);
GaugeKind gauge_kind_from_string(const std::string& name);

// An invertible change of representation coordinates h -> D h together
// with its cached inverse and condition number.
struct GaugeTransform {
    Index d = 0;
    Matrix D;
    Matrix Dinv;
    double kappa = 1.0;
    GaugeKind kind = GaugeKind::identity;
};

GaugeTransform identity_gauge(Index d);

// Compose two transforms: the result applies `first`, then `second`.
GaugeTransform compose(const GaugeTransform& second, const GaugeTransform& first);

// Symmetric eigendecomposition. Rejects matrices whose asymmetry exceeds
// 1e-9 * (1 + max|A|); the computed factorization must reconstruct A
// within tol * (1 + max|A|) or a NumericError is raised.
Spectrum sym_eig(const Matrix& A, double tol = 1e-9);

SvdResult svd(const Matrix& A);

// sigma_max / sigma_min of a square matrix; +infinity once sigma_min
// drops below 1e-300.
double cond(const Matrix& A);

// S^(-1/2) for symmetric PSD S, computed as V diag((lambda+eps)^-1/2) V^T.
// eps < 0 selects the default regularization 1e-10 * trace(S) / d.
Matrix inv_sqrt_psd(const Matrix& S, double eps = -1.0);

// Matching V diag((lambda+eps)^1/2) V^T, the exact inverse of
// inv_sqrt_psd with the same eps.
Matrix sqrt_psd(const Matrix& S, double eps = -1.0);

// Haar-ish orthogonal matrix: QR of an i.i.d. standard normal matrix with
// the sign convention diag(R) > 0 so the factorization is unique.
Matrix random_orthogonal(Index d, std::uint64_t seed);

// D = U diag(s) V^T with independent random orthogonal factors and
// singular values log-uniformly spaced from 1 to kappa, so cond(D) equals
// kappa by construction. kind=orthogonal forces s = 1; kind=diagonal uses
// U = V = I; kind=identity returns I.
GaugeTransform make_gauge(Index d, double kappa, GaugeKind kind, std::uint64_t seed);

} // namespace gaugelens
