#include "srbench/loss.hpp"

#include <algorithm>
#include <cmath>

namespace srbench {

namespace {

// Floor for probabilities entering log() or division; keeps the loss finite
// on saturated outputs without visibly distorting gradients elsewhere.
constexpr double kProbFloor = 1e-12;

void check_spec(const ScoreMap& scores, const LossSpec& spec) {
  if (spec.labels.height != scores.height ||
      spec.labels.width != scores.width)
    throw std::invalid_argument("masked loss: label shape mismatch");
  if (spec.fooling_region.height != scores.height ||
      spec.fooling_region.width != scores.width)
    throw std::invalid_argument("masked loss: fooling region shape mismatch");
  if (spec.kind == LossKind::TargetedCrossEntropy &&
      (spec.target_class < 0 || spec.target_class >= scores.num_classes))
    throw std::invalid_argument("masked loss: target class out of range");
}

}  // namespace

ScoreMap softmax_scores(const ScoreMap& logits) {
  ScoreMap out(logits.height, logits.width, logits.num_classes);
  const int n = logits.num_classes;
  for (int y = 0; y < logits.height; ++y) {
    for (int x = 0; x < logits.width; ++x) {
      double m = logits.at(y, x, 0);
      for (int k = 1; k < n; ++k) m = std::max(m, logits.at(y, x, k));
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        double e = std::exp(logits.at(y, x, k) - m);
        out.at(y, x, k) = e;
        sum += e;
      }
      for (int k = 0; k < n; ++k) out.at(y, x, k) /= sum;
    }
  }
  return out;
}

ScoreMap as_probabilities(const ScoreMap& scores, ScoreKind kind) {
  return kind == ScoreKind::Logits ? softmax_scores(scores) : scores;
}

std::optional<double> masked_ce_loss(const ScoreMap& scores, ScoreKind kind,
                                     const LossSpec& spec) {
  check_spec(scores, spec);
  const ScoreMap probs = as_probabilities(scores, kind);
  double sum = 0.0;
  long long n = 0;
  for (int y = 0; y < scores.height; ++y) {
    for (int x = 0; x < scores.width; ++x) {
      if (!spec.fooling_region.at(y, x)) continue;
      int label = spec.labels.at(y, x);
      if (label == LabelMap::kIgnore) continue;
      ++n;
      if (spec.kind == LossKind::UntargetedCrossEntropy) {
        sum -= std::log(std::max(probs.at(y, x, label), kProbFloor));
      } else {
        sum += std::log(std::max(probs.at(y, x, spec.target_class),
                                 kProbFloor));
      }
    }
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<MaskedLossValueGrad> masked_ce_loss_with_grad(
    const ScoreMap& scores, ScoreKind kind, const LossSpec& spec) {
  check_spec(scores, spec);
  long long n = 0;
  for (int y = 0; y < scores.height; ++y)
    for (int x = 0; x < scores.width; ++x)
      if (spec.fooling_region.at(y, x) &&
          spec.labels.at(y, x) != LabelMap::kIgnore)
        ++n;
  if (n == 0) return std::nullopt;

  const double inv_n = 1.0 / static_cast<double>(n);
  const ScoreMap probs = as_probabilities(scores, kind);
  MaskedLossValueGrad out;
  out.grad_scores = ScoreMap(scores.height, scores.width, scores.num_classes);
  double sum = 0.0;
  for (int y = 0; y < scores.height; ++y) {
    for (int x = 0; x < scores.width; ++x) {
      if (!spec.fooling_region.at(y, x)) continue;
      int label = spec.labels.at(y, x);
      if (label == LabelMap::kIgnore) continue;
      const bool targeted = spec.kind == LossKind::TargetedCrossEntropy;
      const int focus = targeted ? spec.target_class : label;
      const double p_focus = std::max(probs.at(y, x, focus), kProbFloor);
      sum += targeted ? std::log(p_focus) : -std::log(p_focus);
      if (kind == ScoreKind::Logits) {
        // d(-log p[f])/dz[k] = p[k] - [k==f]; targeted flips the sign.
        for (int k = 0; k < scores.num_classes; ++k) {
          double g = probs.at(y, x, k) - (k == focus ? 1.0 : 0.0);
          out.grad_scores.at(y, x, k) = (targeted ? -g : g) * inv_n;
        }
      } else {
        double g = -1.0 / p_focus;
        out.grad_scores.at(y, x, focus) = (targeted ? -g : g) * inv_n;
      }
    }
  }
  out.value = sum * inv_n;
  return out;
}

}  // namespace srbench
