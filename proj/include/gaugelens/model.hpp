#pragma once

#include "gaugelens/geometry.hpp"
#include "gaugelens/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaugelens {

// Labeled inputs, one sample per column of X.
struct Dataset {
    Matrix X;               // d_in x n
    std::vector<int> y;     // n labels in {0..C-1}
    int classes = 0;

    Index dim() const { return X.rows(); }
    Index count() const { return X.cols(); }
};

// Two-layer perceptron: logits = W2 * g(tanh(W1 x + b1)) + b2 where g is
// an optional post-activation gauge transform. The gauge is stored
// explicitly (never folded into W1) so the pre-activation weights keep
// their trained values; W2 carries the compensating inverse.
struct MlpModel {
    Matrix W1;                    // d_h x d_in
    Vector b1;                    // d_h
    Matrix W2;                    // C x d_h
    Vector b2;                    // C
    std::optional<Matrix> gauge;  // d_h x d_h

    Index input_dim() const { return W1.cols(); }
    Index hidden_dim() const { return W1.rows(); }
    Index class_count() const { return W2.rows(); }

    // Flattened parameter vector (W1, b1, W2, b2; row-major blocks).
    // The gauge is a coordinate choice, not a parameter.
    Index parameter_count() const;
    Vector parameters() const;
    void set_parameters(const Vector& theta);
};

struct InvarianceReport {
    double max_logit_diff = 0.0;
    double prediction_agreement = 0.0;
};

// C Gaussian clusters with unit-norm random centers scaled by `spread`,
// equal class counts up to remainder, deterministic per seed.
Dataset make_blobs(Index d_in, int classes, Index n, double spread, std::uint64_t seed);

// Deterministic shuffle-then-cut split; returns (train, test).
std::pair<Dataset, Dataset> split_dataset(const Dataset& data, double test_fraction,
                                          std::uint64_t seed);

// Mini-batch SGD (batch 32, no momentum) on softmax cross-entropy.
MlpModel train_mlp(const Dataset& data, Index hidden_dim, int epochs, double lr,
                   std::uint64_t seed);

Matrix logits(const MlpModel& m, const Matrix& X);
std::vector<int> predictions(const MlpModel& m, const Matrix& X);
double accuracy(const MlpModel& m, const Dataset& data);
double cross_entropy_loss(const MlpModel& m, const Dataset& data);

// Post-activation hidden representations, one column per sample.
RepresentationSet hidden_reps(const MlpModel& m, const Matrix& X);

// Insert an invertible transform after the activation and compensate the
// readout: hidden -> D hidden, W2 -> W2 D^-1. Logits are unchanged in
// exact arithmetic.
MlpModel apply_gauge(const MlpModel& m, const GaugeTransform& g);

// Max |logit difference| over samples and classes, plus the fraction of
// matching argmax predictions (ties broken by lower class index).
InvarianceReport verify_invariance(const MlpModel& m, const MlpModel& m2, const Matrix& X);

// Versioned text checkpoint; bit-exact round trip for finite doubles.
void save_model(const MlpModel& m, const std::string& path);
MlpModel load_model(const std::string& path);

// CSV with header label,f0,...,f{d-1}; one sample per row.
void save_dataset_csv(const Dataset& data, const std::string& path);
Dataset load_dataset_csv(const std::string& path);

} // namespace gaugelens
