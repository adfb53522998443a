#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pullback/poly.hpp"
#include "pullback/sphere.hpp"

namespace pullback {

struct Viewport {
  Complex center;
  double width = 4.0;  // extent of the real axis; the height follows the aspect ratio
  int pixel_width = 512;
  int pixel_height = 512;

  /// Throws InputError unless width > 0 and both pixel sizes are >= 1.
  void validate() const;
  /// Center of pixel (col, row); row 0 is the top edge.
  Complex pixel_center(int col, int row) const;
};

struct AttractingCycle {
  std::vector<SpherePoint> points;  // in orbit order, starting from the smallest point
  Complex multiplier;
};

/// Follows every critical orbit until it revisits itself within `tol`
/// (period up to `max_period`), then keeps the cycles whose multiplier has
/// modulus below one. Cycles are listed in sort_points order of their first
/// point; infinity is an ordinary candidate.
std::vector<AttractingCycle> find_attracting_cycles(const RationalMap& map, int max_period = 16,
                                                    double tol = 1e-9, int max_iter = 5000);

struct BasinImage {
  static constexpr int kUnresolved = -1;

  int width = 0;
  int height = 0;
  std::vector<int> labels;      // row-major; attractor index or kUnresolved
  std::vector<int> iterations;  // steps until capture (max_iter when unresolved)

  int label(int col, int row) const { return labels[static_cast<std::size_t>(row) * width + col]; }
  double unresolved_fraction() const;
};

struct PixelClass {
  int label = BasinImage::kUnresolved;
  int iterations = 0;
};

/// Iterates z until it comes within chordal `tol` of a point of one of the cycles.
PixelClass classify_point(const RationalMap& map, const std::vector<AttractingCycle>& cycles,
                          const SpherePoint& z, int max_iter, double tol = 1e-6);

/// Classifies every pixel center. Rows run in parallel; the result does not
/// depend on the thread count.
BasinImage render_basins(const RationalMap& map, const std::vector<AttractingCycle>& cycles,
                         const Viewport& viewport, int max_iter, double tol = 1e-6);

using Rgb = std::array<std::uint8_t, 3>;

struct Palette {
  std::vector<Rgb> attractors;  // indexed by label
  Rgb unresolved{0, 0, 0};
};

/// Binary PPM (P6) bytes. Throws InputError if a label has no color.
std::string encode_ppm(const BasinImage& image, const Palette& palette);
void write_image(const BasinImage& image, const Palette& palette, const std::string& path);

/// Colors keyed by a point of the attracting cycle they belong to.
struct KeyedColor {
  SpherePoint point;
  Rgb color;
};

/// A palette for `cycles`: each cycle takes the keyed color of any of its
/// points, and otherwise a grey level from a fixed ramp.
Palette palette_for(const std::vector<AttractingCycle>& cycles,
                    const std::vector<KeyedColor>& keyed);

struct RenderPreset {
  std::string name;
  RationalMap map;
  Viewport viewport;
  std::vector<KeyedColor> colors;
};

/// "fig1": 3z^2/(2z^3+1); "fig3": 2i(z^2-(1+i)/2)^2; "fig4": z^2(3-z^4)/2.
/// Throws InputError for other names.
RenderPreset render_preset(const std::string& name);

}  // namespace pullback
