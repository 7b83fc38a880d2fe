#include "seeley/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace seeley {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

// Sampled invariants of the norm: vanishing exactly at the origin,
// positivity away from it, and positive homogeneity.
void check_norm(const RadialDomain& domain) {
  if (!domain.norm) {
    throw std::invalid_argument("ball extension: norm is empty");
  }
  if (domain.norm(Vec::Zero(domain.ambient_dim)) != 0.0) {
    throw std::invalid_argument(
        "ball extension: norm must vanish at the origin");
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  for (int s = 0; s < 6; ++s) {
    Vec Z(domain.ambient_dim);
    for (int i = 0; i < Z.size(); ++i) Z[i] = coord(rng);
    Z[0] += std::copysign(1.5, Z[0]);
    const double base = domain.norm(Z);
    if (!(base > 0.0)) {
      throw std::invalid_argument(
          "ball extension: norm must be positive away from the origin");
    }
    for (double lambda : {0.5, 2.0, 7.25}) {
      const double scaled = domain.norm(lambda * Z);
      if (std::abs(scaled - lambda * base) >
          1e-12 * std::max(1.0, lambda * base)) {
        throw std::invalid_argument(
            "ball extension: norm is not positively homogeneous");
      }
    }
  }
}

}  // namespace

RadialDomain euclidean_ball(int ambient_dim) {
  if (ambient_dim < 1) {
    throw std::invalid_argument(
        "euclidean_ball: ambient dimension must be positive");
  }
  RadialDomain dom;
  dom.ambient_dim = ambient_dim;
  dom.norm = [](const Vec& Z) { return Z.norm(); };
  dom.radial = OperatorConfig{.a = -1.0,
                              .tau = -0.3,
                              .b = 0.0,
                              .upsilon = -0.15,
                              .k = 3,
                              .kappa = -0.8,
                              .kappa_prime = -0.7};
  return dom;
}

BallFunction ball_source(const SmoothND& f, int k) {
  if (f.dim < 1) {
    throw std::invalid_argument(
        "ball_source: needs at least one ambient coordinate");
  }
  if (k < 0) {
    throw std::invalid_argument("ball_source: order must be nonnegative");
  }
  BallFunction out;
  out.k = k;
  out.value_dim = f.value_dim;
  out.ambient_dim = f.dim;
  out.jet = [f](int ell, const Vec& W, const std::vector<Vec>& dirs) {
    if (static_cast<int>(dirs.size()) != ell) {
      throw std::invalid_argument(
          "source jet: tuple length must equal the order");
    }
    return dense_jet(f, W, dirs);
  };
  return out;
}

BallExtension::BallExtension(BallFunction f, RadialDomain domain)
    : f_(std::move(f)), domain_(std::move(domain)) {
  if (domain_.ambient_dim < 1) {
    throw std::invalid_argument(
        "ball extension: ambient dimension must be positive");
  }
  if (f_.ambient_dim != domain_.ambient_dim) {
    throw std::invalid_argument("ball extension: ambient dimension mismatch");
  }
  if (!f_.jet) {
    throw std::invalid_argument("ball extension: source jet is empty");
  }
  if (domain_.radial.a != -1.0 || domain_.radial.b != 0.0) {
    throw std::invalid_argument(
        "ball extension: radial frame must use a = -1 and b = 0");
  }
  domain_.radial.validate();
  check_norm(domain_);

  // The ray direction theta rides along as passive space coordinates, so
  // the sum only ever sees tangents whose space parts vanish; for those the
  // chain rule through (u, theta) -> (1 + u) * theta collapses to a product
  // of the lambda components with the pure radial derivative.
  BoundaryJetFunction src;
  src.k = f_.k;
  src.value_dim = f_.value_dim;
  src.domain = HalflineDomain{-1.0, 0.0, domain_.ambient_dim};
  auto jet = f_.jet;
  src.jet = [jet](int ell, const Point& at, const TangentTuple& w) {
    double mult = 1.0;
    for (const auto& u : w) {
      if (u.X.size() > 0 && u.X.cwiseAbs().maxCoeff() != 0.0) {
        throw std::logic_error(
            "radial source: tangent space parts must vanish");
      }
      mult *= u.lambda;
    }
    Vec point = (1.0 + at.t) * at.x;
    std::vector<Vec> dirs(static_cast<std::size_t>(ell), at.x);
    return Vec(mult * jet(ell, point, dirs));
  };
  radial_ = std::make_shared<const ExtendedFunction>(std::move(src),
                                                     domain_.radial);
}

int BallExtension::order() const { return radial_->order(); }

Vec BallExtension::value(const Vec& W) const {
  if (W.size() != domain_.ambient_dim) {
    throw std::invalid_argument("ball query: point dimension mismatch");
  }
  const double s = domain_.norm(W);
  if (s <= 1.0) return f_.jet(0, W, {});
  Vec theta = W / s;
  return radial_->value(s - 1.0, theta);
}

Vec BallExtension::radial_jet(int ell, const Vec& W) const {
  if (W.size() != domain_.ambient_dim) {
    throw std::invalid_argument("ball query: point dimension mismatch");
  }
  if (ell < 0 || ell > radial_->order()) {
    throw std::invalid_argument("radial jet: order exceeds the operator order");
  }
  const double s = domain_.norm(W);
  if (s == 0.0) {
    throw std::invalid_argument(
        "radial jet: direction is undefined at the origin");
  }
  Vec theta = W / s;
  if (s <= 1.0) {
    std::vector<Vec> dirs(static_cast<std::size_t>(ell), theta);
    return f_.jet(ell, W, dirs);
  }
  TangentTuple w(static_cast<std::size_t>(ell),
                 time_unit(domain_.ambient_dim));
  return radial_->jet(ell, Point{s - 1.0, theta}, w);
}

BallExtension extend_ball(const BallFunction& f, const RadialDomain& domain) {
  return BallExtension(f, domain);
}

ExtendedFunction extend_partially_constant(const BoundaryJetFunction& g,
                                           const ClassSamples& classes,
                                           const OperatorConfig& config) {
  config.validate();
  if (!g.jet) {
    throw std::invalid_argument(
        "partially constant extension: source jet is empty");
  }
  std::vector<double> probes = classes.probe_t;
  if (probes.empty()) {
    for (int i = 0; i <= 8; ++i) {
      probes.push_back(config.b - (config.b - config.tau) * i / 8.0);
    }
  }
  for (double t : probes) {
    if (!(t > config.a) || t > config.b) {
      throw std::invalid_argument(
          "partially constant extension: probe outside the source domain");
    }
  }
  for (const auto& [x, xeq] : classes.pairs) {
    if (x.size() != g.domain.space_dim || xeq.size() != g.domain.space_dim) {
      throw std::invalid_argument(
          "partially constant extension: class sample dimension mismatch");
    }
    for (double t : probes) {
      Vec v = g.jet(0, Point{t, x}, {});
      Vec veq = g.jet(0, Point{t, xeq}, {});
      const double scale = std::max(
          {1.0, v.cwiseAbs().maxCoeff(), veq.cwiseAbs().maxCoeff()});
      if ((v - veq).cwiseAbs().maxCoeff() > classes.tolerance * scale) {
        throw std::invalid_argument(
            "partially constant extension: source varies within a class");
      }
    }
  }
  return extend(g, config);
}

OperatorConfig polar_disk_frame() {
  return OperatorConfig{.a = 0.5,
                        .tau = 0.7,
                        .b = 1.0,
                        .upsilon = 0.85,
                        .k = 3,
                        .kappa = 0.55,
                        .kappa_prime = 0.62};
}

DiskExtension::DiskExtension(BallFunction f, OperatorConfig radial)
    : f_(std::move(f)) {
  if (f_.ambient_dim != 2) {
    throw std::invalid_argument("disk extension: source must live on the plane");
  }
  if (!f_.jet) {
    throw std::invalid_argument("disk extension: source jet is empty");
  }
  if (radial.b != 1.0) {
    throw std::invalid_argument(
        "disk extension: radial frame must end at the unit circle");
  }
  if (!std::isfinite(radial.a) || radial.a <= 0.0 || radial.a >= 1.0) {
    throw std::invalid_argument(
        "disk extension: annulus inner radius must sit in (0, 1)");
  }
  radial.validate();

  // Values of the extension only read values of the pullback, so jets of
  // f through the polar map are never materialized.
  BoundaryJetFunction src;
  src.k = radial.k;
  src.value_dim = f_.value_dim;
  src.domain = HalflineDomain{radial.a, 1.0, 1};
  auto jet = f_.jet;
  src.jet = [jet](int ell, const Point& at, const TangentTuple&) {
    if (ell != 0) {
      throw std::logic_error(
          "polar pullback: jets beyond order zero are not materialized");
    }
    Vec z(2);
    z << at.t * std::cos(at.x[0]), at.t * std::sin(at.x[0]);
    return jet(0, z, {});
  };

  ClassSamples classes;
  for (double x : {0.0, 1.0, 2.5, 4.0, 5.5}) {
    Vec lo(1);
    lo << x;
    Vec hi(1);
    hi << x + kTwoPi;
    classes.pairs.push_back({lo, hi});
  }
  polar_ = std::make_shared<const ExtendedFunction>(
      extend_partially_constant(src, classes, radial));
}

const OperatorConfig& DiskExtension::radial_config() const {
  return polar_->config();
}

double DiskExtension::vanish_radius() const { return polar_->vanish_from(); }

Vec DiskExtension::value(const Vec& z) const {
  if (z.size() != 2) {
    throw std::invalid_argument("disk query: point dimension mismatch");
  }
  const double s = z.norm();
  if (s <= 1.0) return f_.jet(0, z, {});
  double x = std::atan2(z[1], z[0]);
  if (x < 0.0) x += kTwoPi;
  Vec angle(1);
  angle << x;
  return polar_->value(s, angle);
}

DiskExtension extend_disk_polar(const BallFunction& f,
                                const OperatorConfig& radial) {
  return DiskExtension(f, radial);
}

ConeChart::ConeChart(BallFunction f, Vec center, ConeChartConfig config)
    : f_(std::move(f)), center_(std::move(center)), config_(std::move(config)) {
  if (center_.size() != f_.ambient_dim) {
    throw std::invalid_argument("cone chart: center dimension mismatch");
  }
  if (!f_.jet) {
    throw std::invalid_argument("cone chart: source jet is empty");
  }
  if (std::abs(center_.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "cone chart: center must lie on the unit sphere");
  }
  const OperatorConfig& radial = config_.radial;
  if (radial.b != 1.0 || !std::isfinite(radial.a) || radial.a <= 0.0 ||
      radial.a >= 1.0) {
    throw std::invalid_argument(
        "cone chart: radial frame must span an annulus below the unit sphere");
  }
  radial.validate();

  BoundaryJetFunction src;
  src.k = radial.k;
  src.value_dim = f_.value_dim;
  src.domain = HalflineDomain{radial.a, 1.0, f_.ambient_dim};
  auto jet = f_.jet;
  Vec Z = center_;
  src.jet = [jet, Z](int ell, const Point& at, const TangentTuple&) {
    if (ell != 0) {
      throw std::logic_error(
          "cone pullback: jets beyond order zero are not materialized");
    }
    const double lift = std::sqrt(std::max(0.0, 1.0 - at.x.squaredNorm()));
    Vec X = at.t * (at.x + lift * Z);
    return jet(0, X, {});
  };
  radial_ = std::make_shared<const ExtendedFunction>(std::move(src), radial);
}

bool ConeChart::contains(const Vec& X) const {
  if (X.size() != center_.size()) {
    throw std::invalid_argument("cone query: point dimension mismatch");
  }
  return X.norm() > config_.radial.a && center_.dot(X) > 0.0;
}

Vec ConeChart::value(const Vec& X) const {
  if (!contains(X)) {
    throw std::domain_error("cone chart: point outside the cone");
  }
  const double t = X.norm();
  Vec Y = (X - center_.dot(X) * center_) / t;
  return radial_->value(t, Y);
}

double cone_chart_agreement(const BallFunction& f, const Vec& Z, const Vec& Zp,
                            const ConeChartConfig& config) {
  ConeChart chart_a(f, Z, config);
  ConeChart chart_b(f, Zp, config);
  if (Z.dot(Zp) <= -1.0 + 1e-12) {
    throw std::invalid_argument("cone charts: the cones do not overlap");
  }
  if (config.samples < 1) {
    throw std::invalid_argument("cone charts: needs a positive sample count");
  }

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double a = config.radial.a;
  std::uniform_real_distribution<double> radius(a + 0.1 * (1.0 - a), 1.5);
  const int p = static_cast<int>(Z.size());

  double worst = 0.0;
  long attempts = 0;
  const long cap = 1000L * config.samples;
  for (int s = 0; s < config.samples; ++s) {
    Vec D(p);
    do {
      if (++attempts > cap) {
        throw std::runtime_error("cone charts: overlap sampling failed");
      }
      for (int i = 0; i < p; ++i) D[i] = gauss(rng);
      D.normalize();
    } while (!(D.dot(Z) > 0.01 && D.dot(Zp) > 0.01));
    Vec X = radius(rng) * D;
    worst = std::max(
        worst, (chart_a.value(X) - chart_b.value(X)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace seeley
