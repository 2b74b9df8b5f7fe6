#include "srbench/mask.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "srbench/rng.hpp"

namespace srbench {

PatchGrid partition_grid(int height, int width, int patch_w, int patch_h) {
  if (height < 1 || width < 1)
    throw std::invalid_argument("partition_grid: empty image");
  if (patch_w < 1 || patch_w > width || patch_h < 1 || patch_h > height)
    throw std::invalid_argument("partition_grid: patch size out of range");

  PatchGrid grid;
  grid.image_height = height;
  grid.image_width = width;
  grid.patch_w = patch_w;
  grid.patch_h = patch_h;
  grid.nx = (width + patch_w - 1) / patch_w;
  grid.ny = (height + patch_h - 1) / patch_h;
  grid.patches.reserve(static_cast<std::size_t>(grid.nx) * grid.ny);
  for (int py = 0; py < grid.ny; ++py) {
    for (int px = 0; px < grid.nx; ++px) {
      PatchRect r;
      r.x0 = px * patch_w;
      r.y0 = py * patch_h;
      r.w = std::min(patch_w, width - r.x0);
      r.h = std::min(patch_h, height - r.y0);
      grid.patches.push_back(r);
    }
  }
  return grid;
}

namespace {

void fill_rect(PixelMask& mask, const PatchRect& r) {
  for (int y = r.y0; y < r.y0 + r.h; ++y)
    for (int x = r.x0; x < r.x0 + r.w; ++x)
      mask.at(y, x) = 1;
}

}  // namespace

PixelMask sample_ratio_mask(const PatchGrid& grid, double ratio,
                            std::uint64_t seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0))
    throw std::invalid_argument("sample_ratio_mask: ratio outside [0,1]");
  PixelMask mask(grid.image_height, grid.image_width);
  Rng rng(seed);
  for (const PatchRect& r : grid.patches) {
    // ratio == 1 must always select: uniform01() < 1 holds for every draw.
    if (rng.uniform01() < ratio) fill_rect(mask, r);
  }
  return mask;
}

PixelMask exact_ratio_mask(const PatchGrid& grid, double ratio,
                           std::uint64_t seed) {
  if (!(ratio >= 0.0 && ratio <= 1.0))
    throw std::invalid_argument("exact_ratio_mask: ratio outside [0,1]");
  const std::size_t total = grid.patches.size();
  const auto want = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(total)));

  // Partial Fisher-Yates: the first `want` slots end up holding a uniform
  // sample without replacement.
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = 0; i < want; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
    std::swap(order[i], order[j]);
  }

  PixelMask mask(grid.image_height, grid.image_width);
  for (std::size_t i = 0; i < want; ++i)
    fill_rect(mask, grid.patches[order[i]]);
  return mask;
}

MaskPlacement MaskPlacement::parse(const std::string& s) {
  MaskPlacement p;
  if (s == "center") {
    p.kind = Kind::Center;
  } else if (s == "top-left") {
    p.kind = Kind::TopLeft;
  } else if (s == "top-right") {
    p.kind = Kind::TopRight;
  } else if (s == "bottom-left") {
    p.kind = Kind::BottomLeft;
  } else if (s == "bottom-right") {
    p.kind = Kind::BottomRight;
  } else {
    auto comma = s.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("unknown mask position: " + s);
    p.kind = Kind::Explicit;
    p.x0 = std::stoi(s.substr(0, comma));
    p.y0 = std::stoi(s.substr(comma + 1));
  }
  return p;
}

std::string MaskPlacement::to_string() const {
  switch (kind) {
    case Kind::Center: return "center";
    case Kind::TopLeft: return "top-left";
    case Kind::TopRight: return "top-right";
    case Kind::BottomLeft: return "bottom-left";
    case Kind::BottomRight: return "bottom-right";
    case Kind::Explicit:
      return std::to_string(x0) + "," + std::to_string(y0);
  }
  return "center";
}

PixelMask static_mask(int height, int width, int size_w, int size_h,
                      const MaskPlacement& pos) {
  if (size_w < 1 || size_h < 1 || size_w > width || size_h > height)
    throw std::invalid_argument("static_mask: size exceeds image bounds");
  int x0 = 0, y0 = 0;
  switch (pos.kind) {
    case MaskPlacement::Kind::Center:
      x0 = (width - size_w) / 2;   // floor of the half gap
      y0 = (height - size_h) / 2;
      break;
    case MaskPlacement::Kind::TopLeft:
      break;
    case MaskPlacement::Kind::TopRight:
      x0 = width - size_w;
      break;
    case MaskPlacement::Kind::BottomLeft:
      y0 = height - size_h;
      break;
    case MaskPlacement::Kind::BottomRight:
      x0 = width - size_w;
      y0 = height - size_h;
      break;
    case MaskPlacement::Kind::Explicit:
      x0 = pos.x0;
      y0 = pos.y0;
      break;
  }
  if (x0 < 0 || y0 < 0 || x0 + size_w > width || y0 + size_h > height)
    throw std::invalid_argument("static_mask: placement out of bounds");
  PixelMask mask(height, width);
  fill_rect(mask, PatchRect{x0, y0, size_w, size_h});
  return mask;
}

PixelMask MaskSource::make(int height, int width,
                           std::uint64_t image_index) const {
  switch (mode) {
    case Mode::Fixed:
      if (fixed.height != height || fixed.width != width)
        throw std::invalid_argument("MaskSource: fixed mask shape mismatch");
      return fixed;
    case Mode::Bernoulli:
      return sample_ratio_mask(partition_grid(height, width, patch_w, patch_h),
                               ratio, derive_seed(seed, {0x4d41u, image_index}));
    case Mode::Exact:
      return exact_ratio_mask(partition_grid(height, width, patch_w, patch_h),
                              ratio, derive_seed(seed, {0x4d41u, image_index}));
    case Mode::Static:
      return static_mask(height, width, size_w, size_h, placement);
  }
  throw std::logic_error("MaskSource: bad mode");
}

double MaskSource::nominal_ratio(int height, int width) const {
  switch (mode) {
    case Mode::Fixed:
      return static_cast<double>(fixed.count()) /
             static_cast<double>(fixed.bits.size());
    case Mode::Bernoulli:
    case Mode::Exact:
      return ratio;
    case Mode::Static:
      return static_cast<double>(size_w) * size_h /
             (static_cast<double>(height) * width);
  }
  return 0.0;
}

}  // namespace srbench
