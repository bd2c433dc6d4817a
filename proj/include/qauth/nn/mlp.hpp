// Copyright 2026 the qauth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A small feedforward classifier built from scratch: rectifier hidden
// layers, logistic output, binary cross-entropy loss, Adam updates.
// Training is sequential and fully determined by its seed.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qauth/rng.hpp"

namespace qauth::nn {

// Layer widths including input and the single output, e.g. {10, 15, 15, 1}.
using Architecture = std::vector<int>;

class Mlp {
public:
    explicit Mlp(Architecture sizes);  // zero weights and biases
    static Mlp he_initialized(Architecture sizes, Rng& rng);

    double forward(std::span<const double> x) const;  // logistic output
    // Loss and parameter gradients for one labeled sample.
    double backward(std::span<const double> x, int label,
                    std::vector<double>& grad) const;

    const Architecture& sizes() const { return sizes_; }
    int input_dim() const { return sizes_.front(); }
    std::size_t parameter_count() const { return params_.size(); }
    std::span<double> parameters() { return params_; }
    std::span<const double> parameters() const { return params_; }

    void save(std::ostream& out) const;
    static Mlp load(std::istream& in);

private:
    struct LayerView {
        std::size_t w_offset;  // rows x cols, row-major
        std::size_t b_offset;
        int rows;
        int cols;
    };

    Architecture sizes_;
    std::vector<LayerView> layers_;
    std::vector<double> params_;

    // Scratch for forward/backward (sized at construction).
    mutable std::vector<double> act_;
    mutable std::vector<double> pre_;

    void run_forward(std::span<const double> x) const;
};

struct Dataset {
    int feature_dim = 0;
    std::vector<double> features;       // size() == n * feature_dim
    std::vector<std::uint8_t> labels;   // 1 = legitimate, 0 = forgery
    std::uint64_t provenance_hash = 0;  // hash of the generating config

    std::size_t size() const { return labels.size(); }
    std::span<const double> sample(std::size_t i) const {
        return {features.data() + i * feature_dim,
                static_cast<std::size_t>(feature_dim)};
    }
};

// Block-averages a match bitstring into features in [0,1]. The length must
// be divisible by the block size.
std::vector<double> preprocess(std::span<const std::uint8_t> s,
                               int block_size = 10);

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
};

struct EvalReport {
    double accuracy = 0.0;
    double cross_entropy = 0.0;
    std::vector<RocPoint> roc;
    double auc = 0.0;
};

struct EpochStats {
    double train_accuracy = 0.0;
    double train_cross_entropy = 0.0;
    double val_accuracy = 0.0;
    double val_cross_entropy = 0.0;
};

struct TrainOptions {
    int epochs = 100;
    int batch_size = 32;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    double validation_fraction = 0.2;
};

struct TrainResult {
    Mlp model;
    std::vector<EpochStats> curves;
    std::vector<std::size_t> train_indices;
    std::vector<std::size_t> val_indices;
};

// Splits the dataset by a seeded shuffle, trains for the configured number
// of epochs, and returns the model with its learning curves.
TrainResult train(const Architecture& sizes, const Dataset& dataset,
                  const TrainOptions& options, std::uint64_t seed);

// Max relative error between analytic and central-difference gradients for
// one sample (step 1e-5).
double gradient_check(const Mlp& model, std::span<const double> x, int label);

// Accuracy at threshold 1/2, mean cross-entropy, ROC points, and the
// trapezoidal AUC from scores.
EvalReport roc_and_auc(std::span<const double> scores,
                       std::span<const std::uint8_t> labels);

// Full evaluation of a model over a dataset (or a subset of its indices).
EvalReport evaluate(const Mlp& model, const Dataset& dataset,
                    std::span<const std::size_t> indices = {});

struct CandidateOutcome {
    Architecture sizes;
    double val_accuracy = 0.0;
    double val_cross_entropy = 0.0;
};

struct SelectionResult {
    TrainResult best;
    int best_index = 0;
    std::vector<CandidateOutcome> outcomes;
};

// Trains every candidate on the same split and keeps the one with the best
// validation accuracy; ties break toward lower validation cross-entropy,
// then toward the earlier candidate.
SelectionResult hyperparameter_select(
    std::span<const Architecture> candidates, const Dataset& dataset,
    const TrainOptions& options, std::uint64_t seed);

// Default candidate set (the first entry is the reference two-by-15
// architecture).
std::vector<Architecture> default_candidates(int input_dim);

}  // namespace qauth::nn
