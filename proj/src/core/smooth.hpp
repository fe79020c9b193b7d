#pragma once

#include <array>

#include "twistor.hpp"

namespace cl8 {

/// Tangent vector to G(2,8) at base, as a bivector in the span of
/// e_a ^ e2 and e1 ^ e_a (a = 3..8) for the adapted frame (e1, e2) = (base.u, base.w).
struct G28Tangent {
  GrassmannPoint base;
  RealMv vec;
};

/// e1 = x.u, e2 = x.w, e3..e8 completing them to an orthonormal basis (columns).
Mat8 adapted_frame(const GrassmannPoint& x);

/// E_{1a} = e_a e2 (entries 0..5) and E_{2a} = e1 e_a (entries 6..11), a = 3..8.
std::array<G28Tangent, 12> tangent_frame(const GrassmannPoint& x);

/// Orthogonal projection of a bivector onto T_x G(2,8) (grade-2 part only).
RealMv project_tangent(const GrassmannPoint& x, const RealMv& b);

/// ds^2 = 2 sum (omega_i^a)^2, i.e. twice the blade inner product.
double metric_g(const G28Tangent& X, const G28Tangent& Y);
inline double metric_norm(const G28Tangent& X) { return std::sqrt(metric_g(X, X)); }

/// Left Clifford multiplication by the base plane x = e1 e2.
G28Tangent jtilde(const G28Tangent& X);

struct HVSplit {
  G28Tangent horizontal;
  G28Tangent vertical;
};

/// Rows of the vertical and horizontal spans at x:
/// V_a = e_a J_v e1 + e1 J_v e_a and H_a = e_a J_v e1 - e1 J_v e_a, with v = tau(x).
struct HVBasis {
  std::array<RealMv, 6> vertical;
  std::array<RealMv, 6> horizontal;
};
HVBasis hv_basis(const GrassmannPoint& x);

/// Metric-orthogonal projection onto the vertical and horizontal spans.
HVSplit hv_split(const G28Tangent& X);

/// tau_* X: the vector Y in T_v S^6 with X A = e1 Y A.
Vec8 tau_push(const G28Tangent& X);

/// Closest unit simple bivector to b (top invariant plane of the skew matrix of b).
/// Throws RetractionFailure if the top plane is not isolated.
GrassmannPoint retract(const RealMv& b);

/// How a tangent vector X at the base point is extended to a field near G(2,8):
/// Projected uses P_{r(b)} X; Bent uses P_{r(b)} (X + sin<b - x, K> K) for a fixed
/// bivector K, which agrees with X at the base point but is not a projected constant.
enum class FieldExtension { Projected, Bent };

/// Nijenhuis tensor of J~ at X.base, with J~ and the fields extended to a neighborhood
/// of G(2,8) in the bivector space through the retraction; central differences of step h.
G28Tangent nijenhuis_g28(const G28Tangent& X, const G28Tangent& Y, double h = 1e-4,
                         FieldExtension ext = FieldExtension::Projected);

/// d omega(X, Y, Z) for omega(U, V) = g(J~ U, V) by the invariant formula, same field
/// extension as nijenhuis_g28.
double kahler_d_omega(const G28Tangent& X, const G28Tangent& Y, const G28Tangent& Z, double h = 1e-4,
                      FieldExtension ext = FieldExtension::Projected);

}  // namespace cl8
