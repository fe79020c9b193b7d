#include <cmath>
#include <set>

#include "doctest.h"
#include "rng.hpp"
#include "sampling.hpp"

using namespace cl8;

TEST_SUITE("rng") {
  TEST_CASE("SplitMix64 reference outputs for seed 0") {
    SplitMix64 g(0);
    CHECK(g.next() == 0xe220a8397b1dcdafULL);
    CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(g.next() == 0x06c45d188009454fULL);
  }

  TEST_CASE("FNV-1a reference values") {
    static_assert(SplitMix64::fnv1a64("") == 0xcbf29ce484222325ULL);
    static_assert(SplitMix64::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
  }

  TEST_CASE("labelled streams and split are deterministic and distinct") {
    SplitMix64 a(42, "twistor.fibration"), b(42, "twistor.fibration"), c(42, "twistor.span_invariance");
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
    SplitMix64 p(5), q(5);
    SplitMix64 pc = p.split(), qc = q.split();
    CHECK(pc.next() == qc.next());
    CHECK(p.next() == q.next());
  }

  TEST_CASE("uniform and normal moments") {
    SplitMix64 g(7);
    double sum = 0, sq = 0, usum = 0;
    const int n = 20000;
    for (int k = 0; k < n; ++k) {
      const double u = g.uniform01();
      CHECK((u >= 0.0 && u < 1.0));
      usum += u;
      const double z = g.normal();
      sum += z;
      sq += z * z;
    }
    CHECK(std::abs(usum / n - 0.5) < 0.01);
    CHECK(std::abs(sum / n) < 0.03);
    CHECK(std::abs(sq / n - 1.0) < 0.05);
  }

  TEST_CASE("integer range") {
    SplitMix64 g(9);
    std::set<long long> seen;
    for (int k = 0; k < 2000; ++k) {
      const long long v = g.integer(-3, 3);
      CHECK((v >= -3 && v <= 3));
      seen.insert(v);
    }
    CHECK(seen.size() == 7);
  }

  TEST_CASE("sampled points satisfy their constraints") {
    SplitMix64 g(10);
    for (int k = 0; k < 100; ++k) {
      const S6Point v = random_s6(g);
      CHECK(std::abs(v.vec().norm() - 1.0) < 1e-12);
      CHECK(v.vec()(0) == 0.0);
      const Vec8 X = random_s6_tangent(g, v);
      CHECK(std::abs(X.dot(v.vec())) < 1e-12);
      CHECK(X(0) == 0.0);
      const GrassmannPoint x = random_grassmann(g);
      CHECK(std::abs(x.u().dot(x.w())) < 1e-12);
    }
  }

  TEST_CASE("low-discrepancy S^6 sequence") {
    const S6Sequence s(0), s2(0), shifted(3);
    std::set<double> firsts;
    for (std::uint64_t n = 0; n < 200; ++n) {
      const Vec8 v = s.at(n).vec();
      CHECK(std::abs(v.norm() - 1.0) < 1e-12);
      CHECK(v(0) == 0.0);
      CHECK((v - s2.at(n).vec()).norm() == 0.0);
      firsts.insert(v(1));
    }
    CHECK(firsts.size() == 200);
    CHECK((s.at(5).vec() - shifted.at(5).vec()).norm() > 1e-3);
    // Coverage: every closed hemisphere around a coordinate axis receives points.
    for (int axis = 1; axis < 8; ++axis) {
      int pos = 0, neg = 0;
      for (std::uint64_t n = 0; n < 200; ++n) (s.at(n).vec()(axis) > 0 ? pos : neg)++;
      CHECK(pos > 60);
      CHECK(neg > 60);
    }
  }
}
