#pragma once

#include <functional>
#include <vector>

#include "concavity/functional.hpp"
#include "concavity/radius_result.hpp"

namespace concavity {

inline constexpr int kDefaultCircleSamples = 2048;
inline constexpr int kMinCircleSamples = 256;

/// Minimum of a real functional over the circle |z| = r.
struct CircleScan {
  double r = 0.0;
  int samples = 0;
  double min_value = 0.0;
  double argmin_angle = 0.0;  // in [0, 2 pi)
  int excluded = 0;           // samples dropped because of a nearby pole
  bool refined = false;
};

/// Which functions a scan at radius r covers.
enum class Orientation {
  /// f exactly as given: min over |z| = r of Re T_f(z).
  Fixed,
  /// Every rotation e^{-i t} f(e^{i t} z) at once. Since (1+z)/(1-z) and
  /// z f''/f' then vary independently, the minimum decouples into
  /// 2/(A-1) [ (A+1)/2 (1-r)/(1+r) - max_{|w|=r} Re(1 + w f''(w)/f'(w)) ],
  /// and argmin_angle is the argument of the maximizing w.
  RotationFamily,
};

/// Uniform sampling of `objective` at `samples` angles, then golden-section
/// refinement on a three-step window around each of the three best samples.
/// Angles where the objective throws NearPole are skipped; the scan is marked
/// unrefined when more than 1% of samples are skipped.
CircleScan scan_circle_min(const std::function<double(double)>& objective, double r, int samples);

CircleScan min_re_Tf_on_circle(const FunctionSpec& f, ConcavityParam A, double r,
                               int samples = kDefaultCircleSamples,
                               Orientation orientation = Orientation::Fixed);

struct EmpiricalRadiusOptions {
  int samples = kDefaultCircleSamples;
  Orientation orientation = Orientation::Fixed;
  /// Largest radius probed; <= 0 selects scan_ceiling(f).
  double ceiling = 0.0;
  /// Step of the forward search for the first negative circle minimum.
  double coarse_step = 0.01;
  /// First radius probed; the circle minimum must be positive there.
  double start = 1e-3;
};

struct RadiusProbe {
  double r;
  double min_value;
};

struct EmpiricalRadius {
  RadiusResult radius;
  /// Argmin of the circle scan at the reported radius.
  double argmin_angle = 0.0;
  /// Every radius probed, in probe order.
  std::vector<RadiusProbe> probes;
};

/// Largest r such that Re T_f > 0 on |z| < r, located by a forward search
/// for the first radius where the circle minimum is non-positive followed by
/// bisection to a bracket of width <= tol.
///
/// If the minimum is already non-positive at options.start the result has
/// value 0 and failure PreconditionFailed. If it stays positive up to the
/// ceiling, value = ceiling and failure NoSignChange.
EmpiricalRadius empirical_concavity_radius(const FunctionSpec& f, ConcavityParam A, double tol = 1e-9,
                                           const EmpiricalRadiusOptions& options = {});

}  // namespace concavity
