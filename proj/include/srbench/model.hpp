#pragma once

#include <string>

#include "srbench/types.hpp"

namespace srbench {

enum class ScoreKind { Logits, Probabilities };

enum class LossKind { UntargetedCrossEntropy, TargetedCrossEntropy };

/// Describes the scalar objective a gradient is taken of: cross-entropy
/// restricted to a fooling region, either pushed away from the ground truth
/// (untargeted) or pulled toward a chosen class (targeted).
struct LossSpec {
  LossKind kind = LossKind::UntargetedCrossEntropy;
  int target_class = -1;  // required for targeted
  PixelMask fooling_region;
  LabelMap labels;
};

/// Pluggable per-pixel prediction model. Implementations must be
/// deterministic in forward() for a fixed input, and gradients must be exact
/// for the declared scores.
class ModelInterface {
 public:
  virtual ~ModelInterface() = default;

  virtual std::string name() const = 0;
  virtual int num_classes() const = 0;
  virtual ScoreKind score_kind() const = 0;

  virtual ScoreMap forward(const Image& x) const = 0;

  /// Vector-Jacobian product: gradient of sum(scores * upstream) w.r.t. the
  /// input values. This is the one gradient primitive adapters implement;
  /// input_gradient() is derived from it. Throws if unsupported.
  virtual GradientGrid score_backward(const Image& x,
                                      const ScoreMap& upstream) const;

  /// Exact gradient of the loss described by `spec` w.r.t. the input.
  /// Default implementation chains the shared loss gradient through
  /// score_backward(); override only when a backend differentiates the loss
  /// end to end itself.
  virtual GradientGrid input_gradient(const Image& x,
                                      const LossSpec& spec) const;

  virtual bool supports_gradient() const { return true; }

  /// Whether concurrent read-only forward/gradient calls are safe. The
  /// harness serializes calls to models that return false.
  virtual bool concurrent_safe() const { return true; }
};

}  // namespace srbench
