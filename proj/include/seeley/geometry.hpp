#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "seeley/halfline.hpp"
#include "seeley/testfunctions.hpp"

namespace seeley {

// Ambient data for radial extension: a positively homogeneous norm xi and
// the operator frame used in the shifted radius u = xi - 1, where the unit
// ball becomes the half-line interval (-1, 0].
struct RadialDomain {
  int ambient_dim = 1;
  std::function<double(const Vec&)> norm;
  OperatorConfig radial;
};

// Euclidean norm with the stock radial frame a=-1, kappa=-0.8,
// kappa'=-0.7, tau=-0.3, upsilon=-0.15, b=0, k=3.
RadialDomain euclidean_ball(int ambient_dim);

// The input data of the ball operators: a function on the open unit ball
// whose derivatives through order k extend continuously to the closed ball.
// jet(ell, W, dirs) is the full derivative against ambient directions.
struct BallFunction {
  int k = 0;
  int value_dim = 1;
  int ambient_dim = 1;
  std::function<Vec(int ell, const Vec& W, const std::vector<Vec>& dirs)> jet;
};

BallFunction ball_source(const SmoothND& f, int k);

// Radial extension past the unit sphere: keeps f on the closed ball and,
// for xi(W) = s > 1, runs the half-line operator in u = s - 1 along the ray
// through theta = W / s. The direction rides along as passive space
// coordinates, so one operator instance serves every ray.
class BallExtension {
 public:
  BallExtension(BallFunction f, RadialDomain domain);

  const RadialDomain& domain() const { return domain_; }
  int ambient_dim() const { return domain_.ambient_dim; }
  int value_dim() const { return f_.value_dim; }
  int order() const;

  // Everything at or beyond this radius is exactly zero.
  double vanish_radius() const { return 1.0 - domain_.radial.tau; }

  Vec value(const Vec& W) const;

  // d^ell/ds^ell of s -> value(s * theta) at s = xi(W); undefined at the
  // origin where the ray direction is ambiguous.
  Vec radial_jet(int ell, const Vec& W) const;

 private:
  BallFunction f_;
  RadialDomain domain_;
  std::shared_ptr<const ExtendedFunction> radial_;
};

BallExtension extend_ball(const BallFunction& f, const RadialDomain& domain);

// Sampled description of a partition of the space factor into classes: each
// pair must lie in a common class, and the source is probed at probe_t (a
// grid over [tau, b] when empty) to verify it is constant on the samples.
struct ClassSamples {
  std::vector<std::pair<Vec, Vec>> pairs;
  std::vector<double> probe_t;
  double tolerance = 1e-12;
};

// The half-line operator restricted to sources that are constant on each
// class. The extension is then constant on the same classes, since the sum
// reads the space coordinate only through the source.
ExtendedFunction extend_partially_constant(const BoundaryJetFunction& g,
                                           const ClassSamples& classes,
                                           const OperatorConfig& config);

// Radius frame of the polar route: annulus (0.5, 1) with kappa=0.55,
// kappa'=0.62, tau=0.7, upsilon=0.85, b=1, k=3.
OperatorConfig polar_disk_frame();

// Plane extension through polar coordinates: f survives unchanged on the
// closed unit disk; outside, the pullback f(t cos x, t sin x) is extended
// in the radius by the partially constant operator and read back through
// the angle section in [0, 2 pi).
class DiskExtension {
 public:
  DiskExtension(BallFunction f, OperatorConfig radial);

  int value_dim() const { return f_.value_dim; }
  const OperatorConfig& radial_config() const;
  double vanish_radius() const;

  Vec value(const Vec& z) const;

 private:
  BallFunction f_;
  std::shared_ptr<const ExtendedFunction> polar_;
};

DiskExtension extend_disk_polar(const BallFunction& f,
                                const OperatorConfig& radial = polar_disk_frame());

// Chart frame for extensions glued from cones: per-chart half-line operator
// in the radius over (0.4, 1) with kappa=0.5, kappa'=0.6, tau=0.7,
// upsilon=0.85, b=1, k=3; the inner cone radius is radial.a.
struct ConeChartConfig {
  OperatorConfig radial{.a = 0.4,
                        .tau = 0.7,
                        .b = 1.0,
                        .upsilon = 0.85,
                        .k = 3,
                        .kappa = 0.5,
                        .kappa_prime = 0.6};
  int samples = 200;
  std::uint64_t seed = 0;
};

// One chart of the sphere gluing: the cone over the unit-sphere cap around
// center Z, mapped to (radius, disk coordinates) and extended in the radius.
class ConeChart {
 public:
  ConeChart(BallFunction f, Vec center, ConeChartConfig config);

  const Vec& center() const { return center_; }
  double inner_radius() const { return config_.radial.a; }
  bool contains(const Vec& X) const;
  Vec value(const Vec& X) const;

 private:
  BallFunction f_;
  Vec center_;
  ConeChartConfig config_;
  std::shared_ptr<const ExtendedFunction> radial_;
};

// Sup discrepancy between the chart extensions around Z and Zp over a
// random sample of the cone overlap; zero up to roundoff because both
// charts restrict to the same one-dimensional extension on every shared ray.
double cone_chart_agreement(const BallFunction& f, const Vec& Z, const Vec& Zp,
                            const ConeChartConfig& config = {});

}  // namespace seeley
