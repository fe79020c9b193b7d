#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "sampling.hpp"
#include "suites.hpp"
#include "twistor.hpp"

namespace cl8::detail {
namespace {

Mat8 golden_matrix() {
  Mat8 m;
  const auto& g = golden_p_e2();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = g[i][j];
  return m;
}

// Unit vector in V(theta) with Gaussian coefficients in its basis.
Vec8 random_theta_direction(SplitMix64& rng, double theta) {
  const Eigen::Matrix<double, 8, 4> basis = theta_subspace(theta);
  for (;;) {
    Eigen::Vector4d c;
    for (int i = 0; i < 4; ++i) c(i) = rng.normal();
    if (c.norm() > 1e-6) return basis * (c / c.norm());
  }
}

}  // namespace

std::vector<CheckRecord> suite_twistor(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const long long n = ctx.n();
  const double tj = ctx.t("phi_star");

  rec.upper("twistor.phi_star_orthogonal", "Phi*(x)^T Phi*(x) = I for random planes", tj, n, [n](SplitMix64& rng) {
    double worst = 0.0;
    for (long long k = 0; k < n; ++k) worst = std::max(worst, phi_star(random_grassmann(rng)).orthogonality_residual());
    return worst;
  });
  rec.upper("twistor.phi_star_square", "Phi*(x)^2 = -I for random planes", tj, n, [n](SplitMix64& rng) {
    double worst = 0.0;
    for (long long k = 0; k < n; ++k) worst = std::max(worst, phi_star(random_grassmann(rng)).square_residual());
    return worst;
  });
  rec.upper("twistor.golden_phi_star", "Phi*(e1 ^ e2) = P_e2", tj, 1, [](SplitMix64&) {
    const GrassmannPoint x = GrassmannPoint::from_frame(unit_vector(1), unit_vector(2));
    return (phi_star(x).J - golden_matrix()).cwiseAbs().maxCoeff();
  });
  const long long n_pairs = std::max<long long>(2, n);
  rec.lower("twistor.distinct_planes", "distinct random planes give distinct complex structures (min pairwise distance)",
            ctx.t("distinct"), n_pairs * (n_pairs - 1) / 2, [n_pairs](SplitMix64& rng) {
              std::vector<Mat8> js;
              for (long long k = 0; k < n_pairs; ++k) js.push_back(phi_star(random_grassmann(rng)).J);
              double best = std::numeric_limits<double>::infinity();
              for (std::size_t a = 0; a < js.size(); ++a)
                for (std::size_t b = a + 1; b < js.size(); ++b) best = std::min(best, (js[a] - js[b]).norm());
              return best;
            });
  rec.upper("twistor.well_defined", "Phi* does not depend on the oriented frame chosen for a plane", tj, n,
            [n](SplitMix64& rng) {
              double worst = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
                const Vec8 u2 = std::cos(t) * x.u() + std::sin(t) * x.w();
                const Vec8 w2 = -std::sin(t) * x.u() + std::cos(t) * x.w();
                const GrassmannPoint y = GrassmannPoint::from_frame(u2, w2);
                worst = std::max(worst, (phi_star(x).J - phi_star(y).J).cwiseAbs().maxCoeff());
              }
              return worst;
            });
  rec.upper("twistor.j_v", "J_v is an orthogonal complex structure with J_v e1 = v", tj, n, [n](SplitMix64& rng) {
    double worst = 0.0;
    for (long long k = 0; k < n; ++k) {
      const S6Point v = random_s6(rng);
      const ComplexStructure8 j = j_v(v);
      worst = std::max({worst, j.orthogonality_residual(), j.square_residual(), (j.J.col(0) - v.vec()).norm(),
                        (j.J * v.vec() + unit_vector(1)).norm()});
    }
    return worst;
  });
  rec.upper("twistor.fibration", "tau(u J_v u) = v for random v and u", ctx.t("fiber"), n, [n](SplitMix64& rng) {
    double worst = 0.0;
    for (long long k = 0; k < n; ++k) {
      const S6Point v = random_s6(rng);
      const Vec8 u = random_unit8(rng);
      worst = std::max(worst, (tau(fiber_point(v, u)).vec() - v.vec()).norm());
    }
    return worst;
  });
  rec.upper("twistor.span_invariance", "Phi*(x) preserves span{e1, v} for x over v", ctx.t("span"), n,
            [n](SplitMix64& rng) {
              double worst = 0.0;
              for (long long k = 0; k < n; ++k) {
                const S6Point v = random_s6(rng);
                const GrassmannPoint x = fiber_point(v, random_unit8(rng));
                const Mat8 j = phi_star(x).J;
                Eigen::Matrix<double, 8, 2> q;
                q.col(0) = unit_vector(1);
                q.col(1) = v.vec();
                for (int c = 0; c < 2; ++c) {
                  const Vec8 y = j * q.col(c);
                  worst = std::max(worst, (y - q * (q.transpose() * y)).norm());
                }
              }
              return worst;
            });
  rec.upper("twistor.cross_description", "x e1 X A = e1 Y A gives Y = Phi*(x) X on T_v S^6", ctx.t("cross"), n,
            [n](SplitMix64& rng) {
              double worst = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const S6Point v = tau(x);
                const Vec8 X = random_s6_tangent(rng, v);
                worst = std::max(worst, (tangent_action(x, X) - phi_star(x).J * X).norm());
              }
              return worst;
            });
  return rec.take();
}

std::vector<CheckRecord> suite_s4_twistor(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const long long n_theta = std::max<long long>(20, ctx.n() / 10);
  const long long dirs = 10;
  const long long total = n_theta * dirs;

  // Each record draws the same (theta, a) sequence from its own stream.
  auto each_fiber = [n_theta](SplitMix64& rng, const std::function<void(double, const GrassmannPoint&)>& f) {
    for (long long i = 0; i < n_theta; ++i) {
      const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
      for (long long d = 0; d < dirs; ++d) f(theta, theta_fiber(theta, random_theta_direction(rng, theta)));
    }
  };

  rec.upper("s4-twistor.theta_fiber", "theta-family planes lie over e3 and map to cos(theta) e4 + sin(theta) e6",
            ctx.t("tau1"), total, [&](SplitMix64& rng) {
              double worst = 0.0;
              each_fiber(rng, [&](double theta, const GrassmannPoint& x) {
                const Vec8 t = std::cos(theta) * unit_vector(4) + std::sin(theta) * unit_vector(6);
                worst = std::max({worst, (tau(x).vec() - unit_vector(3)).norm(), (tau1(x).vec() - t).norm()});
              });
              return worst;
            });
  rec.upper("s4-twistor.spinor_identity", "x A8 beta8 = e1 v A8 + e1 (e3 - v) A8 beta8 on theta-family planes",
            ctx.t("spinor_identity"), total, [&](SplitMix64& rng) {
              double worst = 0.0;
              each_fiber(rng, [&](double theta, const GrassmannPoint& x) {
                worst = std::max(worst, calibration_identity_residual(x, theta));
              });
              return worst;
            });
  rec.upper("s4-twistor.invariance", "J_x preserves span{e1, e2, e3, t} and induces J^2 = -I on T_t S^4", ctx.t("s4"),
            total, [&](SplitMix64& rng) {
              double worst = 0.0;
              each_fiber(rng, [&](double, const GrassmannPoint& x) {
                const S4Invariance inv = s4_invariance_check(x);
                worst = std::max({worst, inv.invariance_residual, inv.square_residual});
              });
              return worst;
            });
  rec.upper("s4-twistor.calibration_contact", "theta-family planes are contact planes of the calibration (pairing 1)",
            ctx.t("spinor_identity"), total, [&](SplitMix64& rng) {
              double worst = 0.0;
              each_fiber(rng, [&](double theta, const GrassmannPoint& x) {
                worst = std::max(worst, std::abs(blade_inner(calibration_form(theta), x.bivector()) - 1.0));
              });
              return worst;
            });
  rec.upper("s4-twistor.fiber_tau1", "tau1 is unit and orthogonal to e1, e2, e3 on random planes over e3", ctx.t("tau1"),
            ctx.n(), [&](SplitMix64& rng) {
              double worst = 0.0;
              const S6Point e3 = S6Point::make(unit_vector(3));
              for (long long k = 0; k < ctx.n(); ++k) {
                const Vec8 t = tau1(fiber_point(e3, random_unit8(rng))).vec();
                worst = std::max({worst, std::abs(t.norm() - 1.0), std::abs(t(0)), std::abs(t(1)), std::abs(t(2))});
              }
              return worst;
            });
  return rec.take();
}

}  // namespace cl8::detail
