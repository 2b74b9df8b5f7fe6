#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "srbench/types.hpp"

namespace srbench {

enum class CorruptionKind {
  Identity,
  GaussianNoise,
  Brightness,
  Contrast,
  GaussianBlur,
  MotionBlur,
  Snow
};

std::string corruption_name(CorruptionKind kind);
CorruptionKind corruption_from_name(const std::string& name);

/// A natural transformation at one of five severity levels. All randomness
/// the transformation needs flows from rng_seed, so a spec fully determines
/// its output. Identity ignores severity.
struct CorruptionSpec {
  CorruptionKind kind = CorruptionKind::Identity;
  int severity = 1;  // 1..5
  std::uint64_t rng_seed = 0;

  void validate() const;
};

// Severity parameter tables, indexed by severity-1. The corruption families
// follow the usual whole-image corruption benchmark conventions; the exact
// constants are fixed here so runs are reproducible.
inline constexpr std::array<double, 5> kGaussianNoiseSigma = {0.08, 0.12,
                                                              0.18, 0.26,
                                                              0.38};
inline constexpr std::array<double, 5> kBrightnessShift = {0.1, 0.2, 0.3, 0.4,
                                                           0.5};
inline constexpr std::array<double, 5> kContrastFactor = {0.75, 0.55, 0.4,
                                                          0.25, 0.12};
inline constexpr std::array<double, 5> kGaussianBlurSigma = {0.5, 1.0, 1.5,
                                                             2.5, 4.0};
inline constexpr std::array<int, 5> kMotionBlurLength = {3, 5, 7, 11, 15};
inline constexpr std::array<double, 5> kSnowDensity = {0.010, 0.020, 0.030,
                                                       0.045, 0.060};
inline constexpr std::array<double, 5> kSnowWhitening = {0.06, 0.10, 0.15,
                                                         0.22, 0.30};
inline constexpr std::array<int, 5> kSnowStreakLength = {3, 5, 7, 9, 11};

/// Applies the transformation to the whole image and clips to [0, 1].
/// Deterministic for a fixed spec.
Image apply_corruption_full(const Image& x, const CorruptionSpec& spec);

/// Pixel-wise composition: corrupted where the mask is set, original
/// elsewhere, across all channels.
Image compose_localized(const Image& x, const Image& corrupted,
                        const PixelMask& mask);

/// Full corruption followed by masked composition; pixels outside the mask
/// are bit-identical to the input.
Image corrupt_localized(const Image& x, const CorruptionSpec& spec,
                        const PixelMask& mask);

}  // namespace srbench
