#include <algorithm>
#include <cmath>
#include <limits>

#include "sampling.hpp"
#include "sections.hpp"
#include "smooth.hpp"
#include "suites.hpp"

namespace cl8::detail {
namespace {

G28Tangent unit_tangent(SplitMix64& rng, const GrassmannPoint& x) {
  G28Tangent t = random_g28_tangent(rng, x);
  t.vec *= 1.0 / metric_norm(t);
  return t;
}

struct KahlerSample {
  double n_projected = 0, n_bent = 0, n_bent_half = 0;
  double dw_projected = 0, dw_bent = 0, dw_bent_half = 0;
};

}  // namespace

std::vector<CheckRecord> suite_kahler(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const long long n = ctx.n();
  const double h = ctx.bracket_step();

  // One pass computes every residual; the records then read the table.
  std::vector<KahlerSample> table;
  const long long ms = timed_ms([&] {
    SplitMix64 rng(ctx.cfg.seed, "kahler.samples");
    for (long long k = 0; k < n; ++k) {
      const GrassmannPoint x = random_grassmann(rng);
      const G28Tangent X = unit_tangent(rng, x), Y = unit_tangent(rng, x), Z = unit_tangent(rng, x);
      KahlerSample s;
      s.n_projected = metric_norm(nijenhuis_g28(X, Y, h));
      s.n_bent = metric_norm(nijenhuis_g28(X, Y, h, FieldExtension::Bent));
      s.n_bent_half = metric_norm(nijenhuis_g28(X, Y, h / 2, FieldExtension::Bent));
      s.dw_projected = std::abs(kahler_d_omega(X, Y, Z, h));
      s.dw_bent = std::abs(kahler_d_omega(X, Y, Z, h, FieldExtension::Bent));
      s.dw_bent_half = std::abs(kahler_d_omega(X, Y, Z, h / 2, FieldExtension::Bent));
      table.push_back(s);
    }
  });
  auto worst = [&](double KahlerSample::*field) {
    double w = 0.0;
    for (const auto& s : table) w = std::max(w, s.*field);
    return w;
  };
  const long long share = ms / 5;

  rec.upper("kahler.nijenhuis", "N_J~(X, Y) = 0 on G(2,8), projected constant fields", ctx.t("nijenhuis"), n,
            [&](SplitMix64&) { return worst(&KahlerSample::n_projected); }, share);
  rec.upper("kahler.nijenhuis_bent", "N_J~(X, Y) = 0 on G(2,8), bent field extension", ctx.t("nijenhuis"), n,
            [&](SplitMix64&) { return worst(&KahlerSample::n_bent); }, share);
  rec.upper("kahler.d_omega", "d omega(X, Y, Z) = 0 for the Kaehler form, projected constant fields", ctx.t("d_omega"), n,
            [&](SplitMix64&) { return worst(&KahlerSample::dw_projected); }, share);
  rec.upper("kahler.d_omega_bent", "d omega(X, Y, Z) = 0 for the Kaehler form, bent field extension", ctx.t("d_omega"),
            n, [&](SplitMix64&) { return worst(&KahlerSample::dw_bent); }, share);
  rec.lower("kahler.convergence", "halving h shrinks the largest N and d omega residuals by at least the stated factor",
            ctx.t("convergence_ratio"), n, [&](SplitMix64&) {
              const double rn = worst(&KahlerSample::n_bent) / worst(&KahlerSample::n_bent_half);
              const double rw = worst(&KahlerSample::dw_bent) / worst(&KahlerSample::dw_bent_half);
              return std::min(rn, rw);
            }, share);
  rec.upper("kahler.j_orthogonal", "J~^2 = -1 and g(J~X, J~Y) = g(X, Y)", ctx.t("metric"), n, [n](SplitMix64& rng) {
    double w = 0.0;
    for (long long k = 0; k < n; ++k) {
      const GrassmannPoint x = random_grassmann(rng);
      const G28Tangent X = random_g28_tangent(rng, x), Y = random_g28_tangent(rng, x);
      const G28Tangent jx = jtilde(X), jy = jtilde(Y);
      w = std::max({w, std::abs(metric_g(jx, jy) - metric_g(X, Y)), norm(jtilde(jx).vec + X.vec)});
    }
    return w;
  });
  return rec.take();
}

std::vector<CheckRecord> suite_submersion(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const long long n = ctx.n();

  rec.upper("submersion.horizontal_isometry", "tau_* maps a g-orthonormal horizontal basis to an orthonormal basis of T_v S^6",
            ctx.t("isometry"), n, [n](SplitMix64& rng) {
              double w = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const HVBasis b = hv_basis(x);
                std::array<G28Tangent, 6> h{
                    G28Tangent{x, 0.5 * b.horizontal[0]}, G28Tangent{x, 0.5 * b.horizontal[1]},
                    G28Tangent{x, 0.5 * b.horizontal[2]}, G28Tangent{x, 0.5 * b.horizontal[3]},
                    G28Tangent{x, 0.5 * b.horizontal[4]}, G28Tangent{x, 0.5 * b.horizontal[5]}};
                std::array<Vec8, 6> img;
                for (std::size_t a = 0; a < 6; ++a) img[a] = tau_push(h[a]);
                for (std::size_t a = 0; a < 6; ++a) {
                  for (std::size_t c = 0; c < 6; ++c) {
                    const double id = a == c ? 1.0 : 0.0;
                    w = std::max({w, std::abs(metric_g(h[a], h[c]) - id), std::abs(img[a].dot(img[c]) - id)});
                  }
                }
              }
              return w;
            });
  rec.upper("submersion.vertical_kernel", "vertical vectors map to 0 under tau_*", ctx.t("vertical"), n,
            [n](SplitMix64& rng) {
              double w = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const HVBasis b = hv_basis(x);
                for (const auto& v : b.vertical) w = std::max(w, tau_push(G28Tangent{x, v}).norm());
              }
              return w;
            });
  rec.upper("submersion.diagram", "tau_* J~ = J_x tau_*", ctx.t("diagram"), n, [n](SplitMix64& rng) {
    double w = 0.0;
    for (long long k = 0; k < n; ++k) {
      const GrassmannPoint x = random_grassmann(rng);
      const G28Tangent X = random_g28_tangent(rng, x);
      w = std::max(w, (tau_push(jtilde(X)) - tangent_action(x, tau_push(X))).norm());
    }
    return w;
  });
  rec.upper("submersion.hv_preservation", "J~ maps horizontal vectors to horizontal and vertical to vertical", ctx.t("hv"),
            n, [n](SplitMix64& rng) {
              double w = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const G28Tangent X = random_g28_tangent(rng, x);
                const HVSplit s = hv_split(X);
                w = std::max(w, metric_norm(hv_split(jtilde(s.horizontal)).vertical));
                w = std::max(w, metric_norm(hv_split(jtilde(s.vertical)).horizontal));
              }
              return w;
            });
  rec.upper("submersion.hv_split", "horizontal + vertical = X with g(horizontal, vertical) = 0", ctx.t("hv"), n,
            [n](SplitMix64& rng) {
              double w = 0.0;
              for (long long k = 0; k < n; ++k) {
                const GrassmannPoint x = random_grassmann(rng);
                const G28Tangent X = random_g28_tangent(rng, x);
                const HVSplit s = hv_split(X);
                w = std::max({w, norm(s.horizontal.vec + s.vertical.vec - X.vec), std::abs(metric_g(s.horizontal, s.vertical))});
              }
              return w;
            });
  return rec.take();
}

namespace {

struct SectionSample {
  double section_err = 0, acs_err = 0, consistency_err = 0;
  double defect = 0, nijenhuis = 0;
};

}  // namespace

std::vector<CheckRecord> suite_s6_sections(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const long long n = ctx.n();
  const double h1 = ctx.push_step(), h2 = ctx.bracket_step();
  const double eps_fd = ctx.t("eps_fd"), eps_sig = ctx.t("eps_sig");

  std::vector<std::string> names;
  if (ctx.cfg.section == "all") {
    names = SectionRegistry::global().shipped_names();
  } else {
    names = {ctx.cfg.section};
  }

  for (const std::string& name : names) {
    const Section f = SectionRegistry::global().find(name);
    const std::string pre = "s6-sections." + name + ".";
    std::vector<SectionSample> table;
    const long long ms = timed_ms([&] {
      SplitMix64 rng(ctx.cfg.seed, pre + "samples");
      for (long long k = 0; k < n; ++k) {
        const S6Point v = random_s6(rng);
        const GrassmannPoint fv = f(v);
        SectionSample s;
        s.section_err = (tau(fv).vec() - v.vec()).norm();
        const TangentMap m = induced_acs_map(f, v, h1);
        const Eigen::Matrix<double, 6, 6> id = Eigen::Matrix<double, 6, 6>::Identity();
        s.acs_err = std::max((m.matrix * m.matrix + id).cwiseAbs().maxCoeff(),
                             (m.matrix.transpose() * m.matrix - id).cwiseAbs().maxCoeff());
        for (int c = 0; c < 6; ++c) {
          const Vec8 X = m.basis.col(c);
          s.consistency_err = std::max(s.consistency_err, (m.apply(X) - tangent_action(fv, X)).norm());
        }
        s.defect = holo_defect(f, v, h1);
        s.nijenhuis = nijenhuis_max(f, v, h2);
        table.push_back(s);
      }
    });
    const long long share = ms / 6;
    auto worst = [&](double SectionSample::*field) {
      double w = 0.0;
      for (const auto& s : table) w = std::max(w, s.*field);
      return w;
    };

    rec.upper(pre + "section_property", "tau(f(v)) = v", ctx.t("section"), n,
              [&](SplitMix64&) { return worst(&SectionSample::section_err); }, share);
    rec.upper(pre + "induced_acs", "J_f = tau_* J~ f_* is an orthogonal complex structure on T_v S^6", ctx.t("acs"), n,
              [&](SplitMix64&) { return worst(&SectionSample::acs_err); }, share);
    rec.upper(pre + "acs_consistency", "tau_* J~ f_* agrees with the spinor description J_f(v) on T_v S^6", ctx.t("acs"), n,
              [&](SplitMix64&) { return worst(&SectionSample::consistency_err); }, share);
    const double need = ctx.t("fraction");
    rec.upper(pre + "defect_positive", "fraction of points with holo_defect at or below defect_min (must stay under 1 - fraction)",
              1.0 - need, n, [&](SplitMix64&) {
                const auto bad = std::count_if(table.begin(), table.end(),
                                               [&](const SectionSample& s) { return !(s.defect > ctx.t("defect_min")); });
                return static_cast<double>(bad) / static_cast<double>(table.size());
              }, share);
    rec.upper(pre + "nijenhuis_positive",
              "fraction of points with max Nijenhuis norm at or below nijenhuis_min (must stay under 1 - fraction)", 1.0 - need,
              n, [&](SplitMix64&) {
                const auto bad = std::count_if(table.begin(), table.end(),
                                               [&](const SectionSample& s) { return !(s.nijenhuis > ctx.t("nijenhuis_min")); });
                return static_cast<double>(bad) / static_cast<double>(table.size());
              }, share);
    rec.exact(pre + "verdict_agreement", "holo_defect and Nijenhuis norm are both below eps_fd or both above eps_sig", n,
              [&](SplitMix64&) {
                long long mixed = 0;
                for (const auto& s : table) {
                  const bool small = s.defect < eps_fd && s.nijenhuis < eps_fd;
                  const bool large = s.defect > eps_sig && s.nijenhuis > eps_sig;
                  if (!small && !large) ++mixed;
                }
                return mixed;
              }, share);
    const long long n_rich = std::min<long long>(n, 10);
    rec.lower(pre + "richardson", "Richardson limits (h, h/2) of holo_defect and Nijenhuis norm, relative to their bounds",
              1.0, n_rich, [&](SplitMix64& rng) {
                double ratio = std::numeric_limits<double>::infinity();
                for (long long k = 0; k < n_rich; ++k) {
                  const S6Point v = random_s6(rng);
                  const double d = (4.0 * holo_defect(f, v, h1 / 2) - holo_defect(f, v, h1)) / 3.0;
                  const double nj = (4.0 * nijenhuis_max(f, v, h2 / 2) - nijenhuis_max(f, v, h2)) / 3.0;
                  ratio = std::min({ratio, d / ctx.t("defect_min"), nj / ctx.t("nijenhuis_min")});
                }
                return ratio;
              });
  }
  return rec.take();
}

}  // namespace cl8::detail
