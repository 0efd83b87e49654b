#include "gaugelens/linalg.hpp"

#include "gaugelens/error.hpp"
#include "gaugelens/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace gaugelens {

const char* to_string(GaugeKind kind) {
    switch (kind) {
        case GaugeKind::identity:   return "identity";
        case GaugeKind::orthogonal: return "orthogonal";
        case GaugeKind::diagonal:   return "diagonal";
        case GaugeKind::general:    return "general";
        case GaugeKind::whitening:  return "whitening";
    }
    return "unknown";
}

GaugeKind gauge_kind_from_string(const std::string& name) {
    if (name == "identity")   return GaugeKind::identity;
    if (name == "orthogonal") return GaugeKind::orthogonal;
    if (name == "diagonal")   return GaugeKind::diagonal;
    if (name == "general")    return GaugeKind::general;
    if (name == "whitening")  return GaugeKind::whitening;
    throw DomainError("unknown gauge kind '" + name + "'");
}

GaugeTransform identity_gauge(Index d) {
    if (d < 1) throw DomainError("gauge dimension must be >= 1");
    GaugeTransform g;
    g.d = d;
    g.D = Matrix::Identity(d, d);
    g.Dinv = Matrix::Identity(d, d);
    g.kappa = 1.0;
    g.kind = GaugeKind::identity;
    return g;
}

GaugeTransform compose(const GaugeTransform& second, const GaugeTransform& first) {
    if (second.d != first.d)
        throw ShapeError("cannot compose gauges of dimension " + std::to_string(second.d) +
                         " and " + std::to_string(first.d));
    GaugeTransform g;
    g.d = first.d;
    g.D = second.D * first.D;
    g.Dinv = first.Dinv * second.Dinv;
    g.kappa = cond(g.D);
    g.kind = GaugeKind::general;
    return g;
}

Spectrum sym_eig(const Matrix& A, double tol) {
    if (A.rows() != A.cols())
        throw ShapeError("sym_eig: matrix is not square (" + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + ")");
    if (!A.allFinite()) throw DomainError("sym_eig: matrix has non-finite entries");
    const double scale = 1.0 + A.cwiseAbs().maxCoeff();
    const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * scale)
        throw DomainError("sym_eig: matrix is not symmetric (max asymmetry " +
                          std::to_string(asym) + ")");

    Eigen::SelfAdjointEigenSolver<Matrix> solver(A);
    if (solver.info() != Eigen::Success)
        throw NumericError("sym_eig: eigensolver failed to converge");

    // Eigen sorts ascending; flip to descending.
    const Index d = A.rows();
    Spectrum spec;
    spec.eigenvalues = solver.eigenvalues().reverse();
    spec.eigenvectors = solver.eigenvectors().rowwise().reverse();

    const double resid =
        (A * spec.eigenvectors - spec.eigenvectors * spec.eigenvalues.asDiagonal())
            .cwiseAbs()
            .maxCoeff();
    if (resid > tol * scale)
        throw NumericError("sym_eig: residual " + std::to_string(resid) +
                           " exceeds tolerance for dimension " + std::to_string(d));
    return spec;
}

SvdResult svd(const Matrix& A) {
    if (!A.allFinite()) throw DomainError("svd: matrix has non-finite entries");
    Eigen::JacobiSVD<Matrix> solver(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (solver.info() != Eigen::Success)
        throw NumericError("svd: decomposition failed to converge");
    return SvdResult{solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

double cond(const Matrix& A) {
    if (A.rows() != A.cols())
        throw ShapeError("cond: matrix is not square (" + std::to_string(A.rows()) + "x" +
                         std::to_string(A.cols()) + ")");
    const Vector s = svd(A).s;
    const double smin = s(s.size() - 1);
    if (smin < 1e-300) return std::numeric_limits<double>::infinity();
    return s(0) / smin;
}

namespace {

Matrix psd_power(const Matrix& S, double eps, double exponent, const char* who) {
    Spectrum spec = sym_eig(S);
    const double scale = 1.0 + S.cwiseAbs().maxCoeff();
    const double min_eig = spec.eigenvalues.minCoeff();
    if (min_eig < -1e-8 * scale)
        throw DomainError(std::string(who) + ": matrix is not PSD (min eigenvalue " +
                          std::to_string(min_eig) + ")");
    if (eps < 0.0) eps = 1e-10 * S.trace() / static_cast<double>(S.rows());

    Vector powered(spec.eigenvalues.size());
    for (Index i = 0; i < powered.size(); ++i) {
        const double lam = std::max(spec.eigenvalues(i), 0.0) + eps;
        powered(i) = std::pow(lam, exponent);
    }
    return spec.eigenvectors * powered.asDiagonal() * spec.eigenvectors.transpose();
}

} // namespace

Matrix inv_sqrt_psd(const Matrix& S, double eps) {
    return psd_power(S, eps, -0.5, "inv_sqrt_psd");
}

Matrix sqrt_psd(const Matrix& S, double eps) {
    return psd_power(S, eps, 0.5, "sqrt_psd");
}

Matrix random_orthogonal(Index d, std::uint64_t seed) {
    if (d < 1) throw DomainError("random_orthogonal: dimension must be >= 1");
    Rng rng(seed);
    Matrix G(d, d);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) G(i, j) = rng.normal();

    Eigen::HouseholderQR<Matrix> qr(G);
    Matrix Q = qr.householderQ() * Matrix::Identity(d, d);
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix signs so diag(R) > 0; makes the factorization of G unique and the
    // distribution Haar.
    for (Index j = 0; j < d; ++j)
        if (R(j, j) < 0.0) Q.col(j) = -Q.col(j);
    return Q;
}

GaugeTransform make_gauge(Index d, double kappa, GaugeKind kind, std::uint64_t seed) {
    if (d < 1) throw DomainError("make_gauge: dimension must be >= 1");
    if (!(kappa >= 1.0)) throw DomainError("make_gauge: kappa must be >= 1");
    if (kind == GaugeKind::whitening)
        throw DomainError("make_gauge: whitening transforms come from whiten(), not make_gauge");
    if (kind == GaugeKind::identity) return identity_gauge(d);
    if (d == 1 && kappa != 1.0 && kind != GaugeKind::orthogonal)
        throw DomainError("make_gauge: a 1x1 matrix cannot have cond > 1");

    GaugeTransform g;
    g.d = d;
    g.kind = kind;

    Vector s(d);
    if (kind == GaugeKind::orthogonal) {
        s.setOnes();
        g.kappa = 1.0;
    } else {
        const double log_kappa = std::log(kappa);
        for (Index i = 0; i < d; ++i) {
            const double t = (d == 1) ? 0.0 : static_cast<double>(i) / static_cast<double>(d - 1);
            s(i) = std::exp(log_kappa * t);
        }
        g.kappa = kappa;
    }

    if (kind == GaugeKind::diagonal) {
        g.D = s.asDiagonal();
        g.Dinv = s.cwiseInverse().asDiagonal();
        return g;
    }

    const Matrix U = random_orthogonal(d, Rng::derive(seed, 1));
    const Matrix V = random_orthogonal(d, Rng::derive(seed, 2));
    if (kind == GaugeKind::orthogonal) {
        g.D = U * V.transpose();
        g.Dinv = g.D.transpose();
    } else {
        g.D = U * s.asDiagonal() * V.transpose();
        g.Dinv = V * s.cwiseInverse().asDiagonal() * U.transpose();
    }
    return g;
}

} // namespace gaugelens
