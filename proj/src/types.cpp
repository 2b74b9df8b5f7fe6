#include "srbench/types.hpp"

#include <cmath>

namespace srbench {

void Image::validate() const {
  if (data.size() != static_cast<std::size_t>(height) * width * channels)
    throw std::invalid_argument("Image: buffer size does not match shape");
  for (double v : data) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("Image: value outside [0,1]");
  }
}

void LabelMap::validate() const {
  if (labels.size() != static_cast<std::size_t>(height) * width)
    throw std::invalid_argument("LabelMap: buffer size does not match shape");
  for (int l : labels) {
    if (l != kIgnore && (l < 0 || l >= num_classes))
      throw std::invalid_argument("LabelMap: label outside class range");
  }
}

PixelMask mask_and(const PixelMask& a, const PixelMask& b) {
  if (!a.same_shape(b))
    throw std::invalid_argument("mask_and: shape mismatch");
  PixelMask out(a.height, a.width);
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    out.bits[i] = a.bits[i] & b.bits[i];
  return out;
}

PixelMask mask_not(const PixelMask& a) {
  PixelMask out(a.height, a.width);
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    out.bits[i] = a.bits[i] ? 0 : 1;
  return out;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::Corrupted: return "corrupted";
    case Region::NonCorrupted: return "non-corrupted";
    case Region::All: return "all";
  }
  return "all";
}

Region region_from_name(const std::string& s) {
  if (s == "corrupted") return Region::Corrupted;
  if (s == "non-corrupted") return Region::NonCorrupted;
  if (s == "all") return Region::All;
  throw std::invalid_argument("unknown region name: " + s);
}

LabelMap argmax_prediction(const ScoreMap& scores) {
  for (double v : scores.scores) {
    if (!std::isfinite(v))
      throw std::invalid_argument("argmax_prediction: non-finite score");
  }
  LabelMap out(scores.height, scores.width, scores.num_classes);
  for (int y = 0; y < scores.height; ++y) {
    for (int x = 0; x < scores.width; ++x) {
      int best = 0;
      double best_score = scores.at(y, x, 0);
      for (int k = 1; k < scores.num_classes; ++k) {
        double v = scores.at(y, x, k);
        if (v > best_score) {  // strict: ties keep the lowest index
          best_score = v;
          best = k;
        }
      }
      out.at(y, x) = best;
    }
  }
  return out;
}

}  // namespace srbench
