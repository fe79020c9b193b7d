#include <Eigen/Dense>
#include <algorithm>

#include "multivector_text.hpp"
#include "sampling.hpp"
#include "spinor.hpp"
#include "suites.hpp"

namespace cl8::detail {
namespace {

ExactMv alpha_transpose(const ExactMv& x) { return x.reversion().grade_involution(); }

bool block_zero(const ExactMatrix& m, std::size_t r0, std::size_t c0) { return m.block(r0, c0, 8, 8).is_zero(); }

Eigen::MatrixXd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).get_d();
  return out;
}

}  // namespace

std::vector<CheckRecord> suite_clifford(const SuiteContext& ctx) {
  Recorder rec(ctx);
  rec.exact("clifford.anticommutation", "e_B e_C + e_C e_B = -2 delta_BC for all 64 pairs", 64, [](SplitMix64&) {
    long long bad = 0;
    for (int b = 1; b <= 8; ++b) {
      for (int c = 1; c <= 8; ++c) {
        const ExactMv eb = ExactMv::basis(b), ec = ExactMv::basis(c);
        const ExactMv expect = ExactMv::scalar(Rational(b == c ? -2 : 0));
        if (eb * ec + ec * eb != expect) ++bad;
      }
    }
    return bad;
  });
  const long long n_assoc = std::max<long long>(1000, ctx.n());
  rec.exact("clifford.associativity", "(ab)c = a(bc) on random exact triples", n_assoc, [n_assoc](SplitMix64& rng) {
    long long bad = 0;
    for (long long k = 0; k < n_assoc; ++k) {
      const ExactMv a = random_exact_multivector(rng), b = random_exact_multivector(rng),
                    c = random_exact_multivector(rng);
      if ((a * b) * c != a * (b * c)) ++bad;
    }
    return bad;
  });
  const long long n_inv = std::max<long long>(200, ctx.n());
  rec.exact("clifford.involutions", "grade involution and reversion: involutive, (xy)^t = y^t x^t, alpha(xy) = alpha(x) alpha(y)",
            n_inv, [n_inv](SplitMix64& rng) {
              long long bad = 0;
              for (long long k = 0; k < n_inv; ++k) {
                const ExactMv x = random_exact_multivector(rng), y = random_exact_multivector(rng);
                if (x.grade_involution().grade_involution() != x) ++bad;
                if (x.reversion().reversion() != x) ++bad;
                if ((x * y).reversion() != y.reversion() * x.reversion()) ++bad;
                if ((x * y).grade_involution() != x.grade_involution() * y.grade_involution()) ++bad;
              }
              return bad;
            });
  const long long n_text = std::max<long long>(100, ctx.n());
  rec.exact("clifford.text_roundtrip", "format(parse(s)) = s on canonical strings", n_text, [n_text](SplitMix64& rng) {
    long long bad = 0;
    for (long long k = 0; k < n_text; ++k) {
      const ExactMv x = random_exact_multivector(rng);
      const std::string s = format_multivector(x);
      const ExactMv y = parse_multivector<Rational>(s);
      if (y != x || format_multivector(y) != s) ++bad;
    }
    return bad;
  });
  return rec.take();
}

std::vector<CheckRecord> suite_spin_rep(const SuiteContext& ctx) {
  Recorder rec(ctx);
  const auto& spin = SpinorStructure::instance();

  rec.exact("spin-rep.constants", "A8 has 8 grade-4 terms with coefficients +-1; beta8 = e1357; A = A8 (1 + beta8)", 1,
            [&](SplitMix64&) {
              long long bad = 0;
              if (spin.a8().terms().size() != 8) ++bad;
              for (const auto& [m, c] : spin.a8().terms())
                if (grade(m) != 4 || abs(c) != 1) ++bad;
              if (spin.beta8() != ExactMv::blade(generator_mask(1) | generator_mask(3) | generator_mask(5) | generator_mask(7), Rational(1)))
                ++bad;
              if (spin.a() != spin.a8() * (ExactMv::scalar(Rational(1)) + spin.beta8())) ++bad;
              return bad;
            });
  rec.exact("spin-rep.alpha_rank", "the 16 spinor basis elements are linearly independent", 1,
            [&](SplitMix64&) { return static_cast<long long>(spin.alpha_rank() == 16 ? 0 : 1); });
  const long long n_ideal = std::max<long long>(100, ctx.n());
  rec.exact("spin-rep.ideal_membership", "x A lies in span(alpha_1..alpha_16) for random exact x", n_ideal,
            [&, n_ideal](SplitMix64& rng) {
              long long bad = 0;
              for (long long k = 0; k < n_ideal; ++k) {
                const ExactMv s = random_exact_multivector(rng) * spin.a();
                try {
                  const auto c = spin.coords(s);
                  ExactMv back(8);
                  for (int j = 1; j <= 16; ++j) back += c[static_cast<std::size_t>(j - 1)] * spin.alpha(j);
                  if (back != s) ++bad;
                } catch (const Error&) {
                  ++bad;
                }
              }
              return bad;
            });
  const long long n_rep = std::max<long long>(200, ctx.n());
  rec.exact("spin-rep.homomorphism", "Phi(xy) = Phi(x) Phi(y) on random exact pairs", n_rep, [&, n_rep](SplitMix64& rng) {
    long long bad = 0;
    for (long long k = 0; k < n_rep; ++k) {
      const ExactMv x = random_exact_multivector(rng), y = random_exact_multivector(rng);
      if (spin.rep(x * y) != spin.rep(x) * spin.rep(y)) ++bad;
    }
    return bad;
  });
  rec.exact("spin-rep.transpose", "Phi(alpha(x^t)) = Phi(x)^T with alpha the grade involution", n_rep,
            [&, n_rep](SplitMix64& rng) {
              long long bad = 0;
              for (long long k = 0; k < n_rep; ++k) {
                const ExactMv x = random_exact_multivector(rng);
                if (spin.rep(alpha_transpose(x)) != spin.rep(x).transpose()) ++bad;
              }
              return bad;
            });
  rec.exact("spin-rep.block_structure", "Phi(blade) is block diagonal for even blades and block anti-diagonal for odd ones",
            256, [&](SplitMix64&) {
              long long bad = 0;
              for (unsigned m = 0; m < 256; ++m) {
                const ExactMatrix& r = spin.blade_rep(static_cast<Mask>(m));
                const bool even = grade(static_cast<Mask>(m)) % 2 == 0;
                const bool ok = even ? block_zero(r, 0, 8) && block_zero(r, 8, 0) : block_zero(r, 0, 0) && block_zero(r, 8, 8);
                if (!ok) ++bad;
              }
              return bad;
            });
  rec.exact("spin-rep.injectivity", "the 256 matrices Phi(blade) have rank 256", 256, [&](SplitMix64&) {
    ExactMatrix flat(256, 256);
    for (std::size_t m = 0; m < 256; ++m) {
      const ExactMatrix& r = spin.blade_rep(static_cast<Mask>(m));
      for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) flat(m, i * 16 + j) = r(i, j);
    }
    return static_cast<long long>(256 - exact_rank(flat));
  });
  rec.exact("spin-rep.golden_block", "upper-left 8x8 block of Phi(e1 e2) equals the printed P_e2", 64, [&](SplitMix64&) {
    const ExactMatrix r = spin.rep(ExactMv::blade(generator_mask(1) | generator_mask(2), Rational(1)));
    const auto& g = golden_p_e2();
    long long bad = 0;
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        if (r(i, j) != g[i][j]) ++bad;
    return bad;
  });
  rec.exact("spin-rep.bivector_blocks", "Phi(e_B e_C) = diag(B, C) with B, C in SO(8)", 28, [&](SplitMix64&) {
    long long bad = 0;
    const ExactMatrix id = ExactMatrix::identity(8);
    for (int b = 1; b <= 8; ++b) {
      for (int c = b + 1; c <= 8; ++c) {
        const ExactMatrix& r = spin.blade_rep(static_cast<Mask>(generator_mask(b) | generator_mask(c)));
        const ExactMatrix p = r.block(0, 0, 8, 8), q = r.block(8, 8, 8, 8);
        bool ok = block_zero(r, 0, 8) && block_zero(r, 8, 0);
        ok = ok && p.transpose() * p == id && q.transpose() * q == id;
        ok = ok && std::abs(to_eigen(p).determinant() - 1.0) < 1e-12 && std::abs(to_eigen(q).determinant() - 1.0) < 1e-12;
        if (!ok) ++bad;
      }
    }
    return bad;
  });
  const long long n_odd = std::max<long long>(50, ctx.n());
  rec.exact("spin-rep.odd_block", "Phi(v) = [[0, P_v], [-P_v^T, 0]] with P_v P_v^T = |v|^2 I", n_odd,
            [&, n_odd](SplitMix64& rng) {
              long long bad = 0;
              for (long long k = 0; k < n_odd; ++k) {
                const auto v = random_exact_vector(rng);
                ExactMv vm(8);
                Rational sq = 0;
                for (int i = 0; i < 8; ++i) {
                  vm += ExactMv::blade(generator_mask(i + 1), v[static_cast<std::size_t>(i)]);
                  sq += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
                }
                const ExactMatrix r = spin.rep(vm);
                const ExactMatrix p = spin.odd_block(v);
                ExactMatrix expect(16, 16);
                for (std::size_t i = 0; i < 8; ++i) {
                  for (std::size_t j = 0; j < 8; ++j) {
                    expect(i, j + 8) = p(i, j);
                    expect(i + 8, j) = -p(j, i);
                  }
                }
                ExactMatrix scaled_id = ExactMatrix::identity(8);
                for (std::size_t i = 0; i < 8; ++i) scaled_id(i, i) = sq;
                if (r != expect || p * p.transpose() != scaled_id) ++bad;
              }
              return bad;
            });
  return rec.take();
}

}  // namespace cl8::detail
