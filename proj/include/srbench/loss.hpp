#pragma once

#include <optional>

#include "srbench/model.hpp"
#include "srbench/types.hpp"

namespace srbench {

/// Per-pixel softmax of logits (numerically stable). Probabilities pass
/// through model score maps declared ScoreKind::Probabilities unchanged.
ScoreMap softmax_scores(const ScoreMap& logits);

/// Converts a model's raw score map into probabilities per its declaration.
ScoreMap as_probabilities(const ScoreMap& scores, ScoreKind kind);

struct MaskedLossValueGrad {
  double value = 0.0;
  ScoreMap grad_scores;  // d loss / d raw scores (logits or probabilities)
};

/// Mean per-pixel cross-entropy over the fooling region (ignore-labelled
/// pixels are excluded). Untargeted: mean of -log p[y_i]; targeted: mean of
/// +log p[target], so gradient ascent drives predictions toward the target.
/// Returns nullopt when the effective region is empty.
std::optional<double> masked_ce_loss(const ScoreMap& scores, ScoreKind kind,
                                     const LossSpec& spec);

/// Loss value together with its exact gradient w.r.t. the raw scores.
std::optional<MaskedLossValueGrad> masked_ce_loss_with_grad(
    const ScoreMap& scores, ScoreKind kind, const LossSpec& spec);

}  // namespace srbench
