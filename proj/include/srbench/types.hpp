#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace srbench {

/// Dense H x W x C image with channel values in [0, 1], row-major, channel
/// fastest. All pixel math in the toolkit runs in this real-valued scale;
/// 8-bit inputs are converted on load.
struct Image {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;

  Image() = default;
  Image(int h, int w, int c, double fill = 0.0)
      : height(h), width(w), channels(c),
        data(static_cast<std::size_t>(h) * w * c, fill) {
    if (h < 1 || w < 1 || c < 1)
      throw std::invalid_argument("Image: dimensions must be positive");
  }

  std::size_t index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  double& at(int y, int x, int c) { return data[index(y, x, c)]; }
  double at(int y, int x, int c) const { return data[index(y, x, c)]; }
  std::size_t size() const { return data.size(); }

  bool same_shape(const Image& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }

  /// Throws if any value escapes [0, 1] or the buffer size is inconsistent.
  void validate() const;
};

/// Per-pixel class indices. kIgnore marks pixels excluded from every fooling
/// region and every metric denominator.
struct LabelMap {
  static constexpr int kIgnore = -1;

  int height = 0;
  int width = 0;
  int num_classes = 0;
  std::vector<int> labels;

  LabelMap() = default;
  LabelMap(int h, int w, int n, int fill = 0)
      : height(h), width(w), num_classes(n),
        labels(static_cast<std::size_t>(h) * w, fill) {
    if (h < 1 || w < 1 || n < 1)
      throw std::invalid_argument("LabelMap: dimensions must be positive");
  }

  std::size_t index(int y, int x) const {
    return static_cast<std::size_t>(y) * width + x;
  }
  int& at(int y, int x) { return labels[index(y, x)]; }
  int at(int y, int x) const { return labels[index(y, x)]; }

  bool same_shape(const LabelMap& o) const {
    return height == o.height && width == o.width;
  }

  /// Throws if any label is outside {0..num_classes-1} u {kIgnore}.
  void validate() const;
};

/// Binary H x W mask. Convention: 1 = selected (corrupted / targeted).
struct PixelMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> bits;

  PixelMask() = default;
  PixelMask(int h, int w, std::uint8_t fill = 0)
      : height(h), width(w), bits(static_cast<std::size_t>(h) * w, fill) {
    if (h < 1 || w < 1)
      throw std::invalid_argument("PixelMask: dimensions must be positive");
  }

  std::size_t index(int y, int x) const {
    return static_cast<std::size_t>(y) * width + x;
  }
  std::uint8_t& at(int y, int x) { return bits[index(y, x)]; }
  std::uint8_t at(int y, int x) const { return bits[index(y, x)]; }

  /// Number of selected pixels.
  long long count() const {
    long long s = 0;
    for (auto b : bits) s += b;
    return s;
  }
  long long count_clear() const {
    return static_cast<long long>(bits.size()) - count();
  }

  bool same_shape(const PixelMask& o) const {
    return height == o.height && width == o.width;
  }
  bool empty() const { return count() == 0; }
};

PixelMask mask_and(const PixelMask& a, const PixelMask& b);
PixelMask mask_not(const PixelMask& a);

/// Per-pixel per-class scores emitted by a model. Whether they are logits or
/// probabilities is declared by the model, not encoded here.
struct ScoreMap {
  int height = 0;
  int width = 0;
  int num_classes = 0;
  std::vector<double> scores;

  ScoreMap() = default;
  ScoreMap(int h, int w, int n, double fill = 0.0)
      : height(h), width(w), num_classes(n),
        scores(static_cast<std::size_t>(h) * w * n, fill) {
    if (h < 1 || w < 1 || n < 1)
      throw std::invalid_argument("ScoreMap: dimensions must be positive");
  }

  std::size_t index(int y, int x, int k) const {
    return (static_cast<std::size_t>(y) * width + x) * num_classes + k;
  }
  double& at(int y, int x, int k) { return scores[index(y, x, k)]; }
  double at(int y, int x, int k) const { return scores[index(y, x, k)]; }
};

/// Gradient of a scalar loss with respect to image values; same layout as
/// Image but unconstrained in range.
struct GradientGrid {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> values;

  GradientGrid() = default;
  GradientGrid(int h, int w, int c)
      : height(h), width(w), channels(c),
        values(static_cast<std::size_t>(h) * w * c, 0.0) {}

  std::size_t index(int y, int x, int c) const {
    return (static_cast<std::size_t>(y) * width + x) * channels + c;
  }
  double& at(int y, int x, int c) { return values[index(y, x, c)]; }
  double at(int y, int x, int c) const { return values[index(y, x, c)]; }
};

/// One image / ground-truth pair as produced by dataset ingestion.
struct Sample {
  std::string id;
  Image image;
  LabelMap labels;
};

enum class Region { Corrupted, NonCorrupted, All };

std::string region_name(Region r);
Region region_from_name(const std::string& s);

/// One benchmark measurement, aggregated over a dataset for a single seed.
struct EvalRecord {
  std::string model;
  std::string corruption;
  std::optional<int> severity;  // natural corruptions only
  double ratio = 0.0;
  Region region = Region::All;
  std::string metric;  // "A_M", "A_Mbar", "CE", "RCE", "MIoU"
  double value = 0.0;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> extra;
};

/// Per-pixel argmax over class scores; ties resolve to the lowest class
/// index. Rejects non-finite scores.
LabelMap argmax_prediction(const ScoreMap& scores);

}  // namespace srbench
