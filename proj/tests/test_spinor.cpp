#include <Eigen/Dense>
#include <array>

#include "doctest.h"
#include "helpers.hpp"
#include "sampling.hpp"
#include "spinor.hpp"

using namespace cl8;
using testing::error_code_of;
using testing::mv;

namespace {

// The printed upper-left block of Phi(e1 e2).
const int kPe2[8][8] = {
    {0, 1, 0, 0, 0, 0, 0, 0},  {-1, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, -1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, -1, 0, 0}, {0, 0, 0, 0, 1, 0, 0, 0},  {0, 0, 0, 0, 0, 0, 0, -1}, {0, 0, 0, 0, 0, 0, 1, 0},
};

// Re[(e1 + i e2)(e3 + i e4)(e5 + i e6)(e7 + i e8)] by multiplying complex pairs (re, im).
ExactMv complex_product_a8() {
  ExactMv re = ExactMv::scalar(Rational(1)), im(8);
  for (int k = 0; k < 4; ++k) {
    const ExactMv a = ExactMv::basis(2 * k + 1), b = ExactMv::basis(2 * k + 2);
    const ExactMv nre = re * a - im * b;
    const ExactMv nim = re * b + im * a;
    re = nre;
    im = nim;
  }
  return re;
}

bool matches_golden(const ExactMatrix& m, std::size_t r0, std::size_t c0) {
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (m(r0 + i, c0 + j) != kPe2[i][j]) return false;
  return true;
}

}  // namespace

TEST_SUITE("spinor") {
  const SpinorStructure& spin = SpinorStructure::instance();

  TEST_CASE("constants") {
    CHECK(spin.beta8() == mv("e1357"));
    CHECK(spin.a8() == complex_product_a8());
    CHECK(spin.a8().grade_project(4) == spin.a8());
    CHECK(spin.a8().terms().size() == 8);
    CHECK(spin.a() == spin.a8() * (mv("1") + spin.beta8()));
    CHECK(spin.alpha(1) == -spin.a());
    CHECK(spin.alpha_rank() == 16);
  }

  TEST_CASE("alpha parity: alpha_B in the even part, alpha_{B+8} in the odd part") {
    for (int j = 1; j <= 8; ++j) {
      CHECK(spin.alpha(j).is_even());
      CHECK(spin.alpha(j + 8).is_odd());
    }
  }

  TEST_CASE("coordinates of basis elements and of e1 e2 A") {
    const ExactSpinorCoords c = spin.coords(spin.alpha(3));
    for (int j = 0; j < 16; ++j) CHECK(c[static_cast<std::size_t>(j)] == (j == 2 ? 1 : 0));

    // Oracle: dense least-squares solve of the 256 x 16 system in double precision.
    Eigen::MatrixXd basis(256, 16);
    Eigen::VectorXd rhs(256);
    const ExactMv s = mv("e12") * spin.a();
    for (int m = 0; m < 256; ++m) {
      for (int j = 1; j <= 16; ++j) basis(m, j - 1) = spin.alpha(j).coefficient(static_cast<Mask>(m)).get_d();
      rhs(m) = s.coefficient(static_cast<Mask>(m)).get_d();
    }
    const Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(rhs);
    const ExactSpinorCoords ex = spin.coords(s);
    for (int j = 0; j < 16; ++j) CHECK(ex[static_cast<std::size_t>(j)].get_d() == doctest::Approx(sol(j)).epsilon(1e-12));
    CHECK(ex[1] == 1);  // e1 e2 A = e1 e_2 A = alpha_2
  }

  TEST_CASE("elements outside the ideal are rejected") {
    CHECK(error_code_of([&] { spin.coords(mv("e5")); }) == ErrorCode::NotInIdeal);
    CHECK(error_code_of([&] { spin.coords(to_real(mv("e5"))); }) == ErrorCode::NotInIdeal);
  }

  TEST_CASE("real and exact coordinates agree") {
    SplitMix64 rng(41);
    for (int k = 0; k < 20; ++k) {
      const ExactMv s = random_exact_multivector(rng) * spin.a();
      const ExactSpinorCoords ex = spin.coords(s);
      const Vec16 re = spin.coords(to_real(s));
      for (int j = 0; j < 16; ++j) CHECK(re(j) == doctest::Approx(ex[static_cast<std::size_t>(j)].get_d()).epsilon(1e-12));
    }
  }

  TEST_CASE("rep examples") {
    CHECK(spin.rep(mv("1")) == ExactMatrix::identity(16));
    const ExactMatrix r5 = spin.rep(mv("e5"));
    ExactMatrix minus_id(16, 16);
    for (std::size_t i = 0; i < 16; ++i) minus_id(i, i) = -1;
    CHECK(r5 * r5 == minus_id);
    const ExactMatrix r12 = spin.rep(mv("e12"));
    CHECK(matches_golden(r12, 0, 0));
    CHECK(r12.block(0, 8, 8, 8).is_zero());
    CHECK(r12.block(8, 0, 8, 8).is_zero());
  }

  TEST_CASE("odd blocks") {
    std::array<Rational, 8> e2{};
    e2[1] = 1;
    const ExactMatrix p2 = spin.odd_block(e2);
    CHECK(matches_golden(p2, 0, 0));
    std::array<Rational, 8> two_e2{};
    two_e2[1] = 2;
    const ExactMatrix p22 = spin.odd_block(two_e2);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) CHECK(p22(i, j) == 2 * p2(i, j));
    std::array<Rational, 8> e1{};
    e1[0] = 1;
    const ExactMatrix p1 = spin.odd_block(e1);
    CHECK(p1 * p1.transpose() == ExactMatrix::identity(8));
    // Oracle: the block of rep(e1) computed directly.
    CHECK(spin.rep(mv("e1")).block(0, 8, 8, 8) == p1);
    Vec8 v = Vec8::Zero();
    v(1) = 1.0;
    CHECK((spin.odd_block(v) - spin.rep(to_real(mv("e2"))).block<8, 8>(0, 8)).norm() < 1e-14);
  }

  TEST_CASE("homomorphism and transpose identity on random exact inputs") {
    SplitMix64 rng(42);
    for (int k = 0; k < 30; ++k) {
      const ExactMv x = random_exact_multivector(rng), y = random_exact_multivector(rng);
      CHECK(spin.rep(x * y) == spin.rep(x) * spin.rep(y));
      CHECK(spin.rep(x.reversion().grade_involution()) == spin.rep(x).transpose());
    }
  }

  TEST_CASE("transpose identity fails for the other readings of alpha") {
    // alpha = identity (plain reversion) fails, and so does leaving x untouched.
    const ExactMv x = mv("e1 + e23");
    CHECK_FALSE(spin.rep(x.reversion()) == spin.rep(x).transpose());
    CHECK_FALSE(spin.rep(x) == spin.rep(x).transpose());
  }

  TEST_CASE("blade table reproduces rep for real inputs") {
    SplitMix64 rng(43);
    for (int k = 0; k < 10; ++k) {
      RealMv x(8);
      for (int t = 0; t < 5; ++t) x.add_term(static_cast<Mask>(rng.integer(0, 255)), rng.normal());
      CHECK((spin.rep_linear(x) - spin.rep(x)).cwiseAbs().maxCoeff() < 1e-12);
      CHECK((spin.even_block(x) - spin.rep(x).block<8, 8>(0, 0)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("expanded A8 has the expected term pattern") {
    CHECK(format_multivector(expand_a8()) == "e1357 - e1368 - e1458 - e1467 - e2358 - e2367 - e2457 + e2468");
  }
}
