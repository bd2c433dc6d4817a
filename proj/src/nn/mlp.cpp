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

#include "qauth/nn/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qauth/kernels/kernels.hpp"

namespace qauth::nn {

namespace {

double logistic(double z) {
    // Evaluated from the side that avoids overflow.
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Binary cross-entropy from the pre-activation, numerically stable:
// -y log(sigma(z)) - (1-y) log(1-sigma(z)) = log(1+exp(-|z|)) + max(z,0) - yz
double bce_from_logit(double z, int y) {
    return std::log1p(std::exp(-std::abs(z))) + std::max(z, 0.0) -
           static_cast<double>(y) * z;
}

void check_label(int label) {
    if (label != 0 && label != 1)
        throw std::invalid_argument("label must be 0 or 1");
}

}  // namespace

Mlp::Mlp(Architecture sizes) : sizes_(std::move(sizes)) {
    if (sizes_.size() < 2)
        throw std::invalid_argument("Mlp: need at least input and output");
    if (sizes_.back() != 1)
        throw std::invalid_argument("Mlp: output layer must have one unit");
    for (int s : sizes_)
        if (s < 1) throw std::invalid_argument("Mlp: layer sizes >= 1");

    std::size_t offset = 0;
    int max_width = sizes_.front();
    for (std::size_t l = 0; l + 1 < sizes_.size(); ++l) {
        LayerView view;
        view.rows = sizes_[l + 1];
        view.cols = sizes_[l];
        view.w_offset = offset;
        offset += static_cast<std::size_t>(view.rows) * view.cols;
        view.b_offset = offset;
        offset += view.rows;
        layers_.push_back(view);
        max_width = std::max(max_width, sizes_[l + 1]);
    }
    params_.assign(offset, 0.0);
    act_.assign(static_cast<std::size_t>(max_width) * sizes_.size(), 0.0);
    pre_.assign(static_cast<std::size_t>(max_width) * sizes_.size(), 0.0);
}

Mlp Mlp::he_initialized(Architecture sizes, Rng& rng) {
    Mlp model(std::move(sizes));
    for (const auto& layer : model.layers_) {
        const double scale = std::sqrt(2.0 / layer.cols);
        for (int i = 0; i < layer.rows * layer.cols; ++i)
            model.params_[layer.w_offset + i] = scale * rng.gaussian();
        // biases stay zero
    }
    return model;
}

void Mlp::run_forward(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != sizes_.front())
        throw std::invalid_argument("Mlp: feature length mismatch");
    const std::size_t stride = act_.size() / sizes_.size();
    std::copy(x.begin(), x.end(), act_.begin());
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const LayerView& layer = layers_[l];
        const double* in = act_.data() + l * stride;
        double* pre = pre_.data() + (l + 1) * stride;
        double* out = act_.data() + (l + 1) * stride;
        kernels::matvec(layer.rows, layer.cols, params_.data() + layer.w_offset,
                        in, params_.data() + layer.b_offset, pre);
        const bool last = l + 1 == layers_.size();
        for (int r = 0; r < layer.rows; ++r)
            out[r] = last ? pre[r] : std::max(pre[r], 0.0);
    }
}

double Mlp::forward(std::span<const double> x) const {
    run_forward(x);
    const std::size_t stride = act_.size() / sizes_.size();
    return logistic(act_[layers_.size() * stride]);
}

double Mlp::backward(std::span<const double> x, int label,
                     std::vector<double>& grad) const {
    check_label(label);
    run_forward(x);
    grad.assign(params_.size(), 0.0);

    const std::size_t stride = act_.size() / sizes_.size();
    const double z = act_[layers_.size() * stride];
    const double loss = bce_from_logit(z, label);

    // delta of the output pre-activation.
    std::vector<double> delta{logistic(z) - static_cast<double>(label)};
    for (std::size_t l = layers_.size(); l-- > 0;) {
        const LayerView& layer = layers_[l];
        const double* in = act_.data() + l * stride;
        for (int r = 0; r < layer.rows; ++r) {
            const double d = delta[r];
            double* wg = grad.data() + layer.w_offset +
                         static_cast<std::size_t>(r) * layer.cols;
            for (int c = 0; c < layer.cols; ++c) wg[c] += d * in[c];
            grad[layer.b_offset + r] += d;
        }
        if (l == 0) break;
        std::vector<double> prev(layer.cols, 0.0);
        const double* pre = pre_.data() + l * stride;
        for (int c = 0; c < layer.cols; ++c) {
            if (pre[c] <= 0.0) continue;  // rectifier gate
            double sum = 0.0;
            for (int r = 0; r < layer.rows; ++r)
                sum += params_[layer.w_offset +
                               static_cast<std::size_t>(r) * layer.cols + c] *
                       delta[r];
            prev[c] = sum;
        }
        delta = std::move(prev);
    }
    return loss;
}

void Mlp::save(std::ostream& out) const {
    out << "mlp 1\n";
    out << "sizes";
    for (int s : sizes_) out << ' ' << s;
    out << '\n';
    out.precision(17);
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        const LayerView& layer = layers_[l];
        for (int r = 0; r < layer.rows; ++r) {
            out << 'W' << l << ' ' << r;
            for (int c = 0; c < layer.cols; ++c)
                out << ' '
                    << params_[layer.w_offset +
                               static_cast<std::size_t>(r) * layer.cols + c];
            out << '\n';
        }
        out << 'b' << l;
        for (int r = 0; r < layer.rows; ++r)
            out << ' ' << params_[layer.b_offset + r];
        out << '\n';
    }
}

Mlp Mlp::load(std::istream& in) {
    std::string tag;
    int version = 0;
    in >> tag >> version;
    if (tag != "mlp" || version != 1)
        throw std::runtime_error("Mlp::load: unrecognized weight file");
    in >> tag;
    if (tag != "sizes") throw std::runtime_error("Mlp::load: missing sizes");
    Architecture sizes;
    std::string line;
    std::getline(in, line);
    std::istringstream sizes_line(line);
    int s;
    while (sizes_line >> s) sizes.push_back(s);
    if (sizes.size() < 2) throw std::runtime_error("Mlp::load: bad sizes line");
    Mlp model(sizes);
    for (std::size_t l = 0; l < model.layers_.size(); ++l) {
        const LayerView& layer = model.layers_[l];
        for (int r = 0; r < layer.rows; ++r) {
            int row;
            in >> tag >> row;
            if (tag != "W" + std::to_string(l) || row != r)
                throw std::runtime_error("Mlp::load: malformed weight row");
            for (int c = 0; c < layer.cols; ++c)
                in >> model.params_[layer.w_offset +
                                    static_cast<std::size_t>(r) * layer.cols +
                                    c];
        }
        in >> tag;
        if (tag != "b" + std::to_string(l))
            throw std::runtime_error("Mlp::load: malformed bias row");
        for (int r = 0; r < layer.rows; ++r)
            in >> model.params_[layer.b_offset + r];
    }
    if (!in) throw std::runtime_error("Mlp::load: truncated weight file");
    return model;
}

std::vector<double> preprocess(std::span<const std::uint8_t> s,
                               int block_size) {
    if (block_size < 1) throw std::invalid_argument("preprocess: block size");
    if (s.empty() || s.size() % static_cast<std::size_t>(block_size) != 0)
        throw std::invalid_argument(
            "preprocess: length must be a positive multiple of the block size");
    std::vector<double> features(s.size() / block_size);
    for (std::size_t b = 0; b < features.size(); ++b) {
        double sum = 0.0;
        for (int k = 0; k < block_size; ++k) sum += s[b * block_size + k];
        features[b] = sum / block_size;
    }
    return features;
}

namespace {

struct Adam {
    std::vector<double> m, v;
    double beta1_t = 1.0;
    double beta2_t = 1.0;

    explicit Adam(std::size_t n) : m(n, 0.0), v(n, 0.0) {}

    void step(std::span<double> params, std::span<const double> grad,
              const TrainOptions& opt) {
        beta1_t *= opt.beta1;
        beta2_t *= opt.beta2;
        for (std::size_t i = 0; i < params.size(); ++i) {
            m[i] = opt.beta1 * m[i] + (1.0 - opt.beta1) * grad[i];
            v[i] = opt.beta2 * v[i] + (1.0 - opt.beta2) * grad[i] * grad[i];
            const double mhat = m[i] / (1.0 - beta1_t);
            const double vhat = v[i] / (1.0 - beta2_t);
            params[i] -= opt.learning_rate * mhat / (std::sqrt(vhat) + opt.epsilon);
        }
    }
};

template <typename IndexSpan>
EvalReport evaluate_indices(const Mlp& model, const Dataset& dataset,
                            const IndexSpan& indices) {
    std::vector<double> scores;
    std::vector<std::uint8_t> labels;
    scores.reserve(indices.size());
    labels.reserve(indices.size());
    for (std::size_t i : indices) {
        scores.push_back(model.forward(dataset.sample(i)));
        labels.push_back(dataset.labels[i]);
    }
    return roc_and_auc(scores, labels);
}

}  // namespace

TrainResult train(const Architecture& sizes, const Dataset& dataset,
                  const TrainOptions& options, std::uint64_t seed) {
    if (dataset.size() == 0) throw std::invalid_argument("train: empty dataset");
    if (sizes.front() != dataset.feature_dim)
        throw std::invalid_argument("train: feature dimension mismatch");

    Rng rng(seed);
    std::vector<std::size_t> order(dataset.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(i)]);

    const auto n_val = static_cast<std::size_t>(
        std::round(options.validation_fraction * static_cast<double>(order.size())));
    TrainResult result{Mlp::he_initialized(sizes, rng), {}, {}, {}};
    result.train_indices.assign(order.begin(), order.end() - n_val);
    result.val_indices.assign(order.end() - n_val, order.end());
    if (result.train_indices.empty())
        throw std::invalid_argument("train: no training samples after split");

    Adam adam(result.model.parameter_count());
    std::vector<double> grad, batch_grad;
    result.curves.reserve(options.epochs);

    std::vector<std::size_t> epoch_order = result.train_indices;
    for (int epoch = 0; epoch < options.epochs; ++epoch) {
        for (std::size_t i = epoch_order.size(); i > 1; --i)
            std::swap(epoch_order[i - 1], epoch_order[rng.below(i)]);
        for (std::size_t start = 0; start < epoch_order.size();
             start += options.batch_size) {
            const std::size_t stop =
                std::min(start + options.batch_size, epoch_order.size());
            batch_grad.assign(result.model.parameter_count(), 0.0);
            for (std::size_t k = start; k < stop; ++k) {
                const std::size_t idx = epoch_order[k];
                result.model.backward(dataset.sample(idx), dataset.labels[idx],
                                      grad);
                for (std::size_t g = 0; g < grad.size(); ++g)
                    batch_grad[g] += grad[g];
            }
            const double inv = 1.0 / static_cast<double>(stop - start);
            for (auto& g : batch_grad) g *= inv;
            adam.step(result.model.parameters(), batch_grad, options);
        }

        EpochStats stats;
        const EvalReport train_eval =
            evaluate_indices(result.model, dataset, result.train_indices);
        stats.train_accuracy = train_eval.accuracy;
        stats.train_cross_entropy = train_eval.cross_entropy;
        if (!result.val_indices.empty()) {
            const EvalReport val_eval =
                evaluate_indices(result.model, dataset, result.val_indices);
            stats.val_accuracy = val_eval.accuracy;
            stats.val_cross_entropy = val_eval.cross_entropy;
        }
        result.curves.push_back(stats);
    }
    return result;
}

double gradient_check(const Mlp& model, std::span<const double> x, int label) {
    check_label(label);
    Mlp work = model;
    std::vector<double> analytic;
    work.backward(x, label, analytic);

    const double h = 1e-5;
    double worst = 0.0;
    auto params = work.parameters();
    std::vector<double> scratch;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const double saved = params[i];
        params[i] = saved + h;
        const double up = work.backward(x, label, scratch);
        params[i] = saved - h;
        const double down = work.backward(x, label, scratch);
        params[i] = saved;
        const double numeric = (up - down) / (2.0 * h);
        const double denom = std::max(1e-8, std::abs(analytic[i]) + std::abs(numeric));
        worst = std::max(worst, std::abs(analytic[i] - numeric) / denom);
    }
    return worst;
}

EvalReport roc_and_auc(std::span<const double> scores,
                       std::span<const std::uint8_t> labels) {
    if (scores.size() != labels.size() || scores.empty())
        throw std::invalid_argument("roc_and_auc: size mismatch");
    std::size_t positives = 0;
    for (auto l : labels) positives += l;
    const std::size_t negatives = labels.size() - positives;
    if (positives == 0 || negatives == 0)
        throw std::invalid_argument("roc_and_auc: need both labels");

    EvalReport report;
    double correct = 0.0, ce = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const int predicted = scores[i] >= 0.5 ? 1 : 0;
        correct += predicted == labels[i];
        const double p = std::clamp(scores[i], 1e-12, 1.0 - 1e-12);
        ce += labels[i] ? -std::log(p) : -std::log(1.0 - p);
    }
    report.accuracy = correct / static_cast<double>(scores.size());
    report.cross_entropy = ce / static_cast<double>(scores.size());

    // Sweep thresholds from high to low over the distinct scores.
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    report.roc.push_back({0.0, 0.0});
    std::size_t tp = 0, fp = 0;
    double auc = 0.0;
    RocPoint prev{0.0, 0.0};
    std::size_t i = 0;
    while (i < order.size()) {
        const double threshold = scores[order[i]];
        for (; i < order.size() && scores[order[i]] == threshold; ++i) {
            if (labels[order[i]]) ++tp; else ++fp;
        }
        RocPoint point{static_cast<double>(fp) / static_cast<double>(negatives),
                       static_cast<double>(tp) / static_cast<double>(positives)};
        auc += 0.5 * (point.tpr + prev.tpr) * (point.fpr - prev.fpr);
        report.roc.push_back(point);
        prev = point;
    }
    report.auc = auc;
    return report;
}

EvalReport evaluate(const Mlp& model, const Dataset& dataset,
                    std::span<const std::size_t> indices) {
    if (indices.empty()) {
        std::vector<std::size_t> all(dataset.size());
        std::iota(all.begin(), all.end(), 0);
        return evaluate_indices(model, dataset, all);
    }
    return evaluate_indices(model, dataset, indices);
}

SelectionResult hyperparameter_select(
    std::span<const Architecture> candidates, const Dataset& dataset,
    const TrainOptions& options, std::uint64_t seed) {
    if (candidates.size() < 2)
        throw std::invalid_argument("hyperparameter_select: need >= 2 candidates");

    SelectionResult selection;
    bool have_best = false;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        TrainResult candidate =
            train(candidates[k], dataset, options, child_seed(seed, k));
        const EvalReport val =
            evaluate(candidate.model, dataset, candidate.val_indices);
        selection.outcomes.push_back(
            {candidates[k], val.accuracy, val.cross_entropy});
        const auto& best = selection.outcomes[selection.best_index];
        const auto& cur = selection.outcomes.back();
        const bool better =
            !have_best || cur.val_accuracy > best.val_accuracy ||
            (cur.val_accuracy == best.val_accuracy &&
             cur.val_cross_entropy < best.val_cross_entropy);
        if (better) {
            selection.best = std::move(candidate);
            selection.best_index = static_cast<int>(k);
            have_best = true;
        }
    }
    return selection;
}

std::vector<Architecture> default_candidates(int input_dim) {
    return {{input_dim, 15, 15, 1},
            {input_dim, 8, 1},
            {input_dim, 30, 1},
            {input_dim, 20, 10, 1},
            {input_dim, 15, 15, 15, 1}};
}

}  // namespace qauth::nn
