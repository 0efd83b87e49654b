#pragma once

#include "gaugelens/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaugelens {

// A set of n representation vectors as the columns of H (d x n), with
// optional per-sample class labels.
struct RepresentationSet {
    Matrix H;
    std::optional<std::vector<int>> labels;

    Index dim() const { return H.rows(); }
    Index count() const { return H.cols(); }
};

// Symmetric PSD inner-product matrix G; validated on construction.
class MetricTensor {
public:
    explicit MetricTensor(Matrix G);
    const Matrix& G() const { return G_; }

private:
    Matrix G_;
};

// From a gauge transform D the induced inner product on the original
// coordinates is D^T D.
MetricTensor pullback_metric_of(const GaugeTransform& g);

// Columns are feature directions; optional activations hold the
// coefficient vectors a(x) per sample.
struct FeatureBasis {
    Matrix F;
    std::optional<Matrix> activations;
};

inline constexpr int kCosineHistogramBins = 40;

// Distortion statistics over the strict upper triangle of two cosine
// matrices, plus 40-bin histograms of each over [-1, 1].
struct GeometryReport {
    double mean_abs_dcos = 0.0;
    double max_abs_dcos = 0.0;
    std::array<std::int64_t, kCosineHistogramBins> cos_histogram_before{};
    std::array<std::int64_t, kCosineHistogramBins> cos_histogram_after{};
};

// Pairwise cosine matrix; rejects columns with norm below 1e-12.
Matrix cosine_matrix(const RepresentationSet& R);

// u^T G v / sqrt(u^T G u) / sqrt(v^T G v)
double metric_cosine(const Vector& u, const Vector& v, const MetricTensor& G);

// (1/n) sum (h - mean)(h - mean)^T, or (1/n) H H^T when centered=false.
Matrix covariance(const RepresentationSet& R, bool centered = true);

// Whitening gauge D = covariance(R)^(-1/2); returns (D H, transform).
// eps < 0 selects the inv_sqrt_psd default regularization.
std::pair<RepresentationSet, GaugeTransform> whiten(const RepresentationSet& R,
                                                    double eps = -1.0);

// Cosine matrix in whitened coordinates; invariant under any invertible
// gauge applied to R up to numerical tolerance.
Matrix canonical_cosine(const RepresentationSet& R);

GeometryReport delta_cos_stats(const Matrix& C1, const Matrix& C2);

// Eigendecomposition of the (centered) representation covariance.
Spectrum spectrum_report(const RepresentationSet& R);

// F^T F, or F^T G F when a metric is supplied.
Matrix feature_gram(const FeatureBasis& F);
Matrix feature_gram(const FeatureBasis& F, const MetricTensor& G);

// Mean absolute cosine between distinct feature directions; 0 iff the
// columns are mutually orthogonal.
double interference(const FeatureBasis& F);

// CSV persistence: header dim0,...,dim{d-1}[,label], one sample per row.
void save_representations(const RepresentationSet& R, const std::string& path);
RepresentationSet load_representations(const std::string& path);

} // namespace gaugelens
