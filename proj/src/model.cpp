#include "srbench/model.hpp"

#include "srbench/loss.hpp"

namespace srbench {

GradientGrid ModelInterface::score_backward(const Image&,
                                            const ScoreMap&) const {
  throw std::runtime_error("model '" + name() +
                           "' does not support score_backward");
}

GradientGrid ModelInterface::input_gradient(const Image& x,
                                            const LossSpec& spec) const {
  ScoreMap scores = forward(x);
  auto lg = masked_ce_loss_with_grad(scores, score_kind(), spec);
  if (!lg) {
    // Empty fooling region: the loss is constant, so the gradient is zero.
    return GradientGrid(x.height, x.width, x.channels);
  }
  return score_backward(x, lg->grad_scores);
}

}  // namespace srbench
