#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "srbench/types.hpp"

namespace srbench {

struct PatchRect {
  int x0 = 0;
  int y0 = 0;
  int w = 0;
  int h = 0;
};

/// Non-overlapping rectangles tiling an image exactly. Boundary patches are
/// clipped to the image, never dropped or padded, so patch areas always sum
/// to height * width.
struct PatchGrid {
  int image_height = 0;
  int image_width = 0;
  int patch_w = 0;  // nominal patch width  (x direction)
  int patch_h = 0;  // nominal patch height (y direction)
  int nx = 0;       // ceil(width / patch_w)
  int ny = 0;       // ceil(height / patch_h)
  std::vector<PatchRect> patches;  // row-major, ny * nx entries
};

PatchGrid partition_grid(int height, int width, int patch_w, int patch_h);

/// Selects each patch independently with probability `ratio` and sets all of
/// its pixels. Reproducible for a fixed seed.
PixelMask sample_ratio_mask(const PatchGrid& grid, double ratio,
                            std::uint64_t seed);

/// Selects exactly round(ratio * P) patches uniformly without replacement.
PixelMask exact_ratio_mask(const PatchGrid& grid, double ratio,
                           std::uint64_t seed);

struct MaskPlacement {
  enum class Kind {
    Center,
    TopLeft,
    TopRight,
    BottomLeft,
    BottomRight,
    Explicit
  };
  Kind kind = Kind::Center;
  int x0 = 0;  // Explicit only
  int y0 = 0;

  /// Parses "center", "top-left", ..., or "x,y" offsets.
  static MaskPlacement parse(const std::string& s);
  std::string to_string() const;
};

/// Single contiguous rectangle of the given size at a named position.
/// Coordinates are top-left origin; "bottom-left" of a 512x512 image with a
/// 200x200 rectangle therefore starts at (0, 312). Rejects sizes that do not
/// fit at the requested position.
PixelMask static_mask(int height, int width, int size_w, int size_h,
                      const MaskPlacement& pos);

/// Recipe for producing the corruption mask of each dataset image. Ratio
/// modes derive a per-image stream from (seed, image index), so a fixed seed
/// reproduces the same masks while images still get independent draws.
struct MaskSource {
  enum class Mode { Fixed, Bernoulli, Exact, Static };
  Mode mode = Mode::Fixed;
  PixelMask fixed;               // Fixed
  int patch_w = 0, patch_h = 0;  // Bernoulli / Exact
  double ratio = 0.0;
  std::uint64_t seed = 0;
  int size_w = 0, size_h = 0;    // Static
  MaskPlacement placement;

  PixelMask make(int height, int width, std::uint64_t image_index) const;
  /// Nominal corrupted-area ratio of this source for reporting.
  double nominal_ratio(int height, int width) const;
};

}  // namespace srbench
