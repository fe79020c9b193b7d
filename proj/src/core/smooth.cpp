#include "smooth.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "spinor.hpp"

namespace cl8 {
namespace {

void require_same_base(const G28Tangent& X, const G28Tangent& Y) {
  if (X.base.u() != Y.base.u() || X.base.w() != Y.base.w()) {
    fail(ErrorCode::InvalidArgument, "tangent vectors live at different base points");
  }
}

void check_fd_step(double h) {
  if (!(h > 1e-9 && h < 1e-2)) fail(ErrorCode::InvalidArgument, "finite-difference step outside (1e-9, 1e-2)");
}

RealMv project_with(const Mat8& plane, const Mat8& b) {
  const Mat8 rest = Mat8::Identity() - plane;
  return skew_to_bivector(plane * b * rest + rest * b * plane);
}

Mat8 plane_projector(const GrassmannPoint& x) { return x.u() * x.u().transpose() + x.w() * x.w().transpose(); }

const RealMv& bend_bivector() {
  static const RealMv k = [] {
    RealMv out(8);
    for (int i = 1; i <= 8; ++i)
      for (int j = i + 1; j <= 8; ++j)
        out.add_term(static_cast<Mask>(generator_mask(i) | generator_mask(j)), std::sin(1.0 + i + 2.0 * j));
    return out;
  }();
  return k;
}

// Vector field on a neighborhood of G(2,8): b -> [J~] P_{r(b)} dir(b).
struct Field {
  const RealMv* dir;
  bool rotate;
  FieldExtension ext = FieldExtension::Projected;
  const RealMv* origin = nullptr;
};

RealMv eval_field(const Field& f, const RealMv& b) {
  const GrassmannPoint p = retract(b);
  RealMv dir = *f.dir;
  if (f.ext == FieldExtension::Bent) {
    const RealMv& k = bend_bivector();
    dir += std::sin(blade_inner(b - *f.origin, k)) * k;
  }
  const RealMv t = project_with(plane_projector(p), bivector_to_skew(dir));
  if (!f.rotate) return t;
  return (p.cliff() * t).grade_project(2);
}

RealMv directional(const Field& f, const RealMv& at, const RealMv& w, double h) {
  RealMv d = eval_field(f, at + h * w) - eval_field(f, at - h * w);
  return d * (0.5 / h);
}

RealMv bracket(const Field& a, const Field& b, const RealMv& at, double h) {
  return directional(b, at, eval_field(a, at), h) - directional(a, at, eval_field(b, at), h);
}

}  // namespace

Mat8 adapted_frame(const GrassmannPoint& x) {
  Eigen::Matrix<double, 8, Eigen::Dynamic> head(8, 2);
  head.col(0) = x.u();
  head.col(1) = x.w();
  Mat8 frame;
  frame.leftCols<2>() = head;
  frame.rightCols<6>() = orthonormal_complement(head);
  return frame;
}

std::array<G28Tangent, 12> tangent_frame(const GrassmannPoint& x) {
  const Mat8 e = adapted_frame(x);
  auto element = [&](std::size_t k) {
    const int a = static_cast<int>(k % 6) + 2;
    return G28Tangent{x, k < 6 ? outer(e.col(a), e.col(1)) : outer(e.col(0), e.col(a))};
  };
  return [&]<std::size_t... I>(std::index_sequence<I...>) {
    return std::array<G28Tangent, 12>{element(I)...};
  }(std::make_index_sequence<12>{});
}

RealMv project_tangent(const GrassmannPoint& x, const RealMv& b) {
  return project_with(plane_projector(x), bivector_to_skew(b));
}

double metric_g(const G28Tangent& X, const G28Tangent& Y) {
  require_same_base(X, Y);
  return 2.0 * blade_inner(X.vec, Y.vec);
}

G28Tangent jtilde(const G28Tangent& X) {
  const RealMv y = X.base.cliff() * X.vec;
  const RealMv y2 = y.grade_project(2);
  const double scale = std::max(1.0, norm(X.vec));
  if (norm(y - y2) > 1e-9 * scale || norm(y2 - project_tangent(X.base, y2)) > 1e-9 * scale) {
    fail(ErrorCode::Internal, "J~ image left the tangent space; the input is not tangent");
  }
  return G28Tangent{X.base, y2};
}

HVBasis hv_basis(const GrassmannPoint& x) {
  const Mat8 Jv = j_v(tau(x)).J;
  const Mat8 e = adapted_frame(x);
  if ((Jv * e.col(0) - e.col(1)).norm() > 1e-8) {
    fail(ErrorCode::Internal, "base plane is not a J_v complex line");
  }
  HVBasis out;
  const Vec8 je1 = Jv * e.col(0);
  for (int a = 2; a < 8; ++a) {
    const RealMv first = outer(e.col(a), je1);
    const RealMv second = outer(e.col(0), Jv * e.col(a));
    out.vertical[static_cast<std::size_t>(a - 2)] = first + second;
    out.horizontal[static_cast<std::size_t>(a - 2)] = first - second;
  }
  return out;
}

HVSplit hv_split(const G28Tangent& X) {
  const HVBasis basis = hv_basis(X.base);
  RealMv vertical(8), horizontal(8);
  for (std::size_t a = 0; a < 6; ++a) {
    const RealMv& v = basis.vertical[a];
    const RealMv& h = basis.horizontal[a];
    vertical += (blade_inner(X.vec, v) / blade_inner(v, v)) * v;
    horizontal += (blade_inner(X.vec, h) / blade_inner(h, h)) * h;
  }
  return HVSplit{G28Tangent{X.base, horizontal}, G28Tangent{X.base, vertical}};
}

Vec8 tau_push(const G28Tangent& X) {
  const auto& spin = SpinorStructure::instance();
  const Vec16 c = spin.coords(X.vec * spin.a_real());
  if (c.tail<8>().norm() > 1e-9 * std::max(1.0, norm(X.vec))) {
    fail(ErrorCode::DecompositionFailure, "X A has a V- component");
  }
  return c.head<8>();
}

GrassmannPoint retract(const RealMv& b) {
  const Mat8 B = bivector_to_skew(b);
  Eigen::SelfAdjointEigenSolver<Mat8> eig(B.transpose() * B);
  const auto& lam = eig.eigenvalues();  // ascending; nonzero eigenvalues come in pairs
  const double top = lam(7);
  if (!(top > 1e-24)) fail(ErrorCode::RetractionFailure, "cannot retract the zero bivector");
  if (lam(5) > (1.0 - 1e-6) * lam(6)) {
    fail(ErrorCode::RetractionFailure, "top invariant plane is not isolated (bivector is far from simple)");
  }
  const Vec8 u = eig.eigenvectors().col(7);
  const Vec8 w = -(B * u);
  return GrassmannPoint::from_frame(u, w);
}

G28Tangent nijenhuis_g28(const G28Tangent& X, const G28Tangent& Y, double h, FieldExtension ext) {
  require_same_base(X, Y);
  check_fd_step(h);
  const GrassmannPoint& x = X.base;
  const RealMv at = x.bivector();
  const Field fx{&X.vec, false, ext, &at}, fy{&Y.vec, false, ext, &at};
  const Field jx{&X.vec, true, ext, &at}, jy{&Y.vec, true, ext, &at};
  auto J = [&](const RealMv& t) { return (x.cliff() * project_tangent(x, t)).grade_project(2); };
  const RealMv n = bracket(jx, jy, at, h) - J(bracket(jx, fy, at, h)) - J(bracket(fx, jy, at, h)) -
                   bracket(fx, fy, at, h);
  return G28Tangent{x, project_tangent(x, n)};
}

double kahler_d_omega(const G28Tangent& X, const G28Tangent& Y, const G28Tangent& Z, double h,
                      FieldExtension ext) {
  require_same_base(X, Y);
  require_same_base(X, Z);
  check_fd_step(h);
  const GrassmannPoint& x = X.base;
  const RealMv at = x.bivector();
  const Field fx{&X.vec, false, ext, &at}, fy{&Y.vec, false, ext, &at}, fz{&Z.vec, false, ext, &at};
  const Field jx{&X.vec, true, ext, &at}, jy{&Y.vec, true, ext, &at};

  // omega(A, B)(b) = g(J~ A, B) for the extended fields A, B.
  auto omega_field = [&](const Field& ja, const Field& fb, const RealMv& b) {
    return 2.0 * blade_inner(eval_field(ja, b), eval_field(fb, b));
  };
  auto derivative = [&](const RealMv& w, const Field& ja, const Field& fb) {
    return (omega_field(ja, fb, at + h * w) - omega_field(ja, fb, at - h * w)) * (0.5 / h);
  };
  auto omega_at = [&](const RealMv& a, const RealMv& b) {
    const RealMv ta = project_tangent(x, a);
    return 2.0 * blade_inner((x.cliff() * ta).grade_project(2), project_tangent(x, b));
  };

  const double term1 = derivative(X.vec, jy, fz);
  const double term2 = derivative(Y.vec, jx, fz);
  const double term3 = derivative(Z.vec, jx, fy);
  const double term4 = omega_at(bracket(fx, fy, at, h), Z.vec);
  const double term5 = omega_at(bracket(fx, fz, at, h), Y.vec);
  const double term6 = omega_at(bracket(fy, fz, at, h), X.vec);
  return term1 - term2 + term3 - term4 + term5 - term6;
}

}  // namespace cl8
