#include "gaugelens/geometry.hpp"

#include "gaugelens/error.hpp"
#include "gaugelens/format.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace gaugelens {

namespace {

constexpr double kZeroNormThreshold = 1e-12;

void require_finite(const Matrix& H, const char* who) {
    if (!H.allFinite()) throw DomainError(std::string(who) + ": non-finite entries");
}

Matrix symmetrized(const Matrix& M) {
    return 0.5 * (M + M.transpose());
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

} // namespace

MetricTensor::MetricTensor(Matrix G) : G_(std::move(G)) {
    if (G_.rows() != G_.cols())
        throw ShapeError("MetricTensor: matrix is not square");
    const double scale = 1.0 + G_.cwiseAbs().maxCoeff();
    if ((G_ - G_.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale)
        throw DomainError("MetricTensor: matrix is not symmetric");
    const Spectrum spec = sym_eig(symmetrized(G_));
    if (spec.eigenvalues.minCoeff() < -1e-8 * scale)
        throw DomainError("MetricTensor: matrix is not PSD (min eigenvalue " +
                          std::to_string(spec.eigenvalues.minCoeff()) + ")");
}

MetricTensor pullback_metric_of(const GaugeTransform& g) {
    return MetricTensor(symmetrized(g.D.transpose() * g.D));
}

Matrix cosine_matrix(const RepresentationSet& R) {
    require_finite(R.H, "cosine_matrix");
    const Index n = R.count();
    Matrix N = R.H;
    for (Index j = 0; j < n; ++j) {
        const double norm = N.col(j).norm();
        if (norm < kZeroNormThreshold)
            throw DomainError("cosine_matrix: column " + std::to_string(j) +
                              " has near-zero norm " + std::to_string(norm));
        N.col(j) /= norm;
    }
    Matrix C = symmetrized(N.transpose() * N);
    C.diagonal().setOnes();
    return C;
}

double metric_cosine(const Vector& u, const Vector& v, const MetricTensor& G) {
    const Index d = G.G().rows();
    if (u.size() != d || v.size() != d)
        throw ShapeError("metric_cosine: vector/metric dimension mismatch");
    const double uu = u.dot(G.G() * u);
    const double vv = v.dot(G.G() * v);
    if (!(uu > 0.0) || !(vv > 0.0))
        throw DomainError("metric_cosine: non-positive self inner product under the metric");
    return u.dot(G.G() * v) / (std::sqrt(uu) * std::sqrt(vv));
}

Matrix covariance(const RepresentationSet& R, bool centered) {
    require_finite(R.H, "covariance");
    const Index n = R.count();
    if (n < 2)
        throw DomainError("covariance: need at least 2 samples, got " + std::to_string(n));
    if (!centered)
        return symmetrized(R.H * R.H.transpose() / static_cast<double>(n));
    const Vector mean = R.H.rowwise().mean();
    const Matrix centered_H = R.H.colwise() - mean;
    return symmetrized(centered_H * centered_H.transpose() / static_cast<double>(n));
}

std::pair<RepresentationSet, GaugeTransform> whiten(const RepresentationSet& R, double eps) {
    const Matrix sigma = covariance(R, true);
    GaugeTransform g;
    g.d = R.dim();
    g.D = inv_sqrt_psd(sigma, eps);
    g.Dinv = sqrt_psd(sigma, eps);
    g.kappa = cond(g.D);
    g.kind = GaugeKind::whitening;

    RepresentationSet out{g.D * R.H, R.labels};
    return {std::move(out), std::move(g)};
}

Matrix canonical_cosine(const RepresentationSet& R) {
    return cosine_matrix(whiten(R).first);
}

GeometryReport delta_cos_stats(const Matrix& C1, const Matrix& C2) {
    if (C1.rows() != C1.cols() || C2.rows() != C2.cols() || C1.rows() != C2.rows())
        throw ShapeError("delta_cos_stats: cosine matrices must be square and equally sized");

    const Index n = C1.rows();
    GeometryReport report;
    const auto bin_of = [](double v) {
        const int b = static_cast<int>(std::floor((v + 1.0) * 0.5 * kCosineHistogramBins));
        return std::clamp(b, 0, kCosineHistogramBins - 1);
    };

    double sum = 0.0;
    std::int64_t pairs = 0;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const double diff = std::abs(C1(i, j) - C2(i, j));
            sum += diff;
            report.max_abs_dcos = std::max(report.max_abs_dcos, diff);
            ++report.cos_histogram_before[bin_of(C1(i, j))];
            ++report.cos_histogram_after[bin_of(C2(i, j))];
            ++pairs;
        }
    }
    report.mean_abs_dcos = pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
    return report;
}

Spectrum spectrum_report(const RepresentationSet& R) {
    return sym_eig(covariance(R, true));
}

Matrix feature_gram(const FeatureBasis& F) {
    require_finite(F.F, "feature_gram");
    if (F.F.cols() < 1) throw DomainError("feature_gram: need at least one feature column");
    return symmetrized(F.F.transpose() * F.F);
}

Matrix feature_gram(const FeatureBasis& F, const MetricTensor& G) {
    require_finite(F.F, "feature_gram");
    if (F.F.cols() < 1) throw DomainError("feature_gram: need at least one feature column");
    if (G.G().rows() != F.F.rows())
        throw ShapeError("feature_gram: metric dimension " + std::to_string(G.G().rows()) +
                         " does not match feature dimension " + std::to_string(F.F.rows()));
    return symmetrized(F.F.transpose() * G.G() * F.F);
}

double interference(const FeatureBasis& F) {
    const Index k = F.F.cols();
    if (k < 1) throw DomainError("interference: need at least one feature column");
    Matrix N = F.F;
    for (Index j = 0; j < k; ++j) {
        const double norm = N.col(j).norm();
        if (norm < kZeroNormThreshold)
            throw DomainError("interference: feature column " + std::to_string(j) +
                              " has near-zero norm");
        N.col(j) /= norm;
    }
    if (k == 1) return 0.0;
    const Matrix C = N.transpose() * N;
    double sum = 0.0;
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            if (i != j) sum += std::abs(C(i, j));
    return sum / static_cast<double>(k * (k - 1));
}

void save_representations(const RepresentationSet& R, const std::string& path) {
    require_finite(R.H, "save_representations");
    if (R.labels && static_cast<Index>(R.labels->size()) != R.count())
        throw ShapeError("save_representations: label count does not match sample count");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("save_representations: cannot open '" + path + "' for writing");

    const Index d = R.dim();
    for (Index i = 0; i < d; ++i) out << (i ? "," : "") << "dim" << i;
    if (R.labels) out << ",label";
    out << "\n";
    for (Index j = 0; j < R.count(); ++j) {
        for (Index i = 0; i < d; ++i) out << (i ? "," : "") << format_g17(R.H(i, j));
        if (R.labels) out << "," << (*R.labels)[static_cast<std::size_t>(j)];
        out << "\n";
    }
    if (!out) throw IoError("save_representations: write to '" + path + "' failed");
}

RepresentationSet load_representations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("load_representations: cannot open '" + path + "'");

    std::string line;
    if (!std::getline(in, line)) throw ParseError("load_representations: empty file " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv_line(line);

    bool has_label = !header.empty() && header.back() == "label";
    const Index d = static_cast<Index>(header.size()) - (has_label ? 1 : 0);
    if (d < 1) throw ParseError("load_representations: no dim columns in header of " + path);
    for (Index i = 0; i < d; ++i)
        if (header[static_cast<std::size_t>(i)] != "dim" + std::to_string(i))
            throw ParseError("load_representations: unexpected header column '" +
                             header[static_cast<std::size_t>(i)] + "' in " + path);

    std::vector<double> values;
    std::vector<int> labels;
    Index n = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (static_cast<Index>(fields.size()) != d + (has_label ? 1 : 0))
            throw ParseError("load_representations: row " + std::to_string(n + 1) +
                             " has " + std::to_string(fields.size()) + " fields");
        for (Index i = 0; i < d; ++i)
            values.push_back(parse_finite_double(fields[static_cast<std::size_t>(i)],
                                                 "load_representations row " +
                                                     std::to_string(n + 1)));
        if (has_label)
            labels.push_back(static_cast<int>(
                parse_long(fields.back(), "load_representations label row " +
                                              std::to_string(n + 1))));
        ++n;
    }
    if (n == 0) throw ParseError("load_representations: no data rows in " + path);

    RepresentationSet R;
    R.H.resize(d, n);
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < d; ++i)
            R.H(i, j) = values[static_cast<std::size_t>(j * d + i)];
    if (has_label) R.labels = std::move(labels);
    return R;
}

} // namespace gaugelens
