#include "pullback/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "pullback/const_sigma.hpp"
#include "pullback/error.hpp"
#include "pullback/parallel.hpp"

namespace pullback {
namespace {

constexpr Rgb kWhite{255, 255, 255};
constexpr Rgb kLightGrey{192, 192, 192};
constexpr Rgb kDarkGrey{96, 96, 96};

// Local coordinate around a point of the sphere: z near the unit disk, 1/z outside.
Complex to_chart(const SpherePoint& p, bool inverted) {
  if (!inverted) return p.value();
  return p.is_infinite() ? Complex{} : 1.0 / p.value();
}

SpherePoint from_chart(Complex u, bool inverted) {
  if (!inverted) return u;
  return u == Complex{} ? SpherePoint::infinity() : SpherePoint(1.0 / u);
}

bool use_inverted(const SpherePoint& p) { return p.modulus() > 1.0; }

// Derivative of the map at p, read in the charts at p and at its image.
Complex chart_derivative(const RationalMap& map, const SpherePoint& p) {
  const bool in_inv = use_inverted(p);
  const bool out_inv = use_inverted(rational_eval(map, p));
  const Complex u = to_chart(p, in_inv);
  const double h = 1e-6 * std::max(1.0, std::abs(u));
  auto g = [&](Complex v) { return to_chart(rational_eval(map, from_chart(v, in_inv)), out_inv); };
  return (g(u + h) - g(u - h)) / (2.0 * h);
}

// Points nearer than this belong to the same cycle during deduplication.
constexpr double kSameCycle = 1e-6;

bool cycle_less(const AttractingCycle& a, const AttractingCycle& b) {
  std::vector<SpherePoint> pair{b.points.front(), a.points.front()};
  sort_points(pair);
  return pair.front() == a.points.front() && !(a.points.front() == b.points.front());
}

}  // namespace

void Viewport::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw InputError("viewport: width must be positive");
  if (pixel_width < 1 || pixel_height < 1) throw InputError("viewport: image size must be at least 1x1");
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag())) {
    throw InputError("viewport: center must be finite");
  }
}

Complex Viewport::pixel_center(int col, int row) const {
  const double step = width / pixel_width;
  const double x = (col + 0.5 - 0.5 * pixel_width) * step;
  const double y = (0.5 * pixel_height - row - 0.5) * step;
  return center + Complex(x, y);
}

std::vector<AttractingCycle> find_attracting_cycles(const RationalMap& map, int max_period,
                                                    double tol, int max_iter) {
  if (map.degree() < 1) throw DegenerateInput("attracting cycles of a constant map");
  std::vector<AttractingCycle> cycles;
  for (const auto& cp : critical_points(map)) {
    std::vector<SpherePoint> orbit{cp.point};
    int period = 0;
    for (int it = 0; it < max_iter && period == 0; ++it) {
      orbit.push_back(rational_eval(map, orbit.back()));
      const std::size_t last = orbit.size() - 1;
      for (int p = 1; p <= max_period && static_cast<std::size_t>(p) <= last; ++p) {
        if (chordal_distance(orbit[last], orbit[last - static_cast<std::size_t>(p)]) < tol) {
          period = p;
          break;
        }
      }
    }
    if (period == 0) continue;

    AttractingCycle cycle;
    cycle.points.assign(orbit.end() - period, orbit.end());
    cycle.multiplier = 1.0;
    for (const auto& q : cycle.points) cycle.multiplier *= chart_derivative(map, q);
    if (std::abs(cycle.multiplier) >= 1.0) continue;

    const bool known = std::any_of(cycles.begin(), cycles.end(), [&](const AttractingCycle& c) {
      return find_on_sphere(c.points, cycle.points.front(), kSameCycle) >= 0;
    });
    if (known) continue;

    auto smallest = cycle.points;
    sort_points(smallest);
    const auto start = std::find_if(cycle.points.begin(), cycle.points.end(),
                                    [&](const SpherePoint& q) { return q == smallest.front(); });
    std::rotate(cycle.points.begin(), start, cycle.points.end());
    cycles.push_back(std::move(cycle));
  }
  std::sort(cycles.begin(), cycles.end(), cycle_less);
  return cycles;
}

double BasinImage::unresolved_fraction() const {
  if (labels.empty()) return 0.0;
  const auto n = std::count(labels.begin(), labels.end(), kUnresolved);
  return static_cast<double>(n) / static_cast<double>(labels.size());
}

PixelClass classify_point(const RationalMap& map, const std::vector<AttractingCycle>& cycles,
                          const SpherePoint& start, int max_iter, double tol) {
  SpherePoint z = start;
  for (int it = 0; it <= max_iter; ++it) {
    for (std::size_t k = 0; k < cycles.size(); ++k) {
      if (find_on_sphere(cycles[k].points, z, tol) >= 0) return {static_cast<int>(k), it};
    }
    if (it < max_iter) z = rational_eval(map, z);
  }
  return {BasinImage::kUnresolved, max_iter};
}

BasinImage render_basins(const RationalMap& map, const std::vector<AttractingCycle>& cycles,
                         const Viewport& viewport, int max_iter, double tol) {
  viewport.validate();
  if (max_iter < 0) throw InputError("render: max_iter must be non-negative");
  BasinImage image;
  image.width = viewport.pixel_width;
  image.height = viewport.pixel_height;
  const auto total = static_cast<std::size_t>(image.width) * static_cast<std::size_t>(image.height);
  image.labels.assign(total, BasinImage::kUnresolved);
  image.iterations.assign(total, 0);
  parallel_for(static_cast<std::size_t>(image.height), [&](std::size_t row) {
    for (int col = 0; col < image.width; ++col) {
      const auto idx = row * static_cast<std::size_t>(image.width) + static_cast<std::size_t>(col);
      const PixelClass c = classify_point(
          map, cycles, viewport.pixel_center(col, static_cast<int>(row)), max_iter, tol);
      image.labels[idx] = c.label;
      image.iterations[idx] = c.iterations;
    }
  });
  return image;
}

std::string encode_ppm(const BasinImage& image, const Palette& palette) {
  std::string out = "P6\n" + std::to_string(image.width) + " " + std::to_string(image.height) +
                    "\n255\n";
  out.reserve(out.size() + image.labels.size() * 3);
  for (const int label : image.labels) {
    const Rgb* color = &palette.unresolved;
    if (label != BasinImage::kUnresolved) {
      if (label < 0 || static_cast<std::size_t>(label) >= palette.attractors.size()) {
        throw InputError("palette has no color for label " + std::to_string(label));
      }
      color = &palette.attractors[static_cast<std::size_t>(label)];
    }
    out.append(reinterpret_cast<const char*>(color->data()), 3);
  }
  return out;
}

void write_image(const BasinImage& image, const Palette& palette, const std::string& path) {
  const std::string bytes = encode_ppm(image, palette);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

Palette palette_for(const std::vector<AttractingCycle>& cycles,
                    const std::vector<KeyedColor>& keyed) {
  static constexpr std::uint8_t kRamp[] = {224, 160, 128, 64, 32};
  Palette palette;
  std::size_t next_grey = 0;
  for (const auto& cycle : cycles) {
    const auto hit = std::find_if(keyed.begin(), keyed.end(), [&](const KeyedColor& k) {
      return find_on_sphere(cycle.points, k.point, kSameCycle) >= 0;
    });
    if (hit != keyed.end()) {
      palette.attractors.push_back(hit->color);
    } else {
      const std::uint8_t g = kRamp[next_grey++ % std::size(kRamp)];
      palette.attractors.push_back({g, g, g});
    }
  }
  return palette;
}

RenderPreset render_preset(const std::string& name) {
  RenderPreset preset;
  preset.name = name;
  if (name == "fig1") {
    preset.map = RationalMap(ComplexPoly({0.0, 0.0, 3.0}), ComplexPoly({1.0, 0.0, 0.0, 2.0}));
    preset.viewport = {Complex{}, 4.0, 512, 512};
    preset.colors = {{Complex(0.0), kWhite}, {Complex(1.0), kLightGrey}, {omega(), kDarkGrey}};
  } else if (name == "fig3") {
    preset.map = compose(example_quartic().g, example_quartic().s);
    preset.viewport = {Complex{}, 3.5, 512, 512};
    preset.colors = {{SpherePoint::infinity(), kWhite}};
  } else if (name == "fig4") {
    preset.map = compose(example_family(2).g, example_family(2).s);
    preset.viewport = {Complex{}, 3.5, 512, 512};
    preset.colors = {{SpherePoint::infinity(), kWhite},
                     {Complex(0.0), kLightGrey},
                     {Complex(1.0), kDarkGrey}};
  } else {
    throw InputError("unknown render preset '" + name + "' (expected fig1, fig3 or fig4)");
  }
  return preset;
}

}  // namespace pullback
