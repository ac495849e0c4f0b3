#pragma once

#include <bsfan/dop.hpp>
#include <bsfan/linear_form.hpp>
#include <bsfan/polynomial.hpp>
#include <bsfan/signature.hpp>

#include <cstdint>
#include <random>
#include <vector>

namespace bsfan::testing {

/// Seeded random sources for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// Small nonzero rational, mostly integers.
  Rational coefficient() {
    Rational c(uniform(1, 5) * (coin() ? 1 : -1));
    if (uniform(0, 3) == 0) c /= uniform(2, 4);
    c.canonicalize();
    return c;
  }

  /// Random exponent with entries in [0, max_entry]; z stays 0 unless with_z.
  Exponent exponent(RingSignature sig, int max_entry, bool with_z = false) {
    Exponent e(sig.width());
    for (std::size_t i = 0; i + 1 < sig.width(); ++i) e[i] = static_cast<std::uint32_t>(uniform(0, max_entry));
    if (with_z) e[sig.z()] = static_cast<std::uint32_t>(uniform(0, max_entry));
    return e;
  }

  /// Sparse exponent: at most `support` nonzero entries, total degree at most max_total.
  Exponent sparse_exponent(RingSignature sig, int max_total, bool with_z = false) {
    Exponent e(sig.width());
    const int budget = uniform(0, max_total);
    const std::size_t slots = with_z ? sig.width() : sig.width() - 1;
    for (int k = 0; k < budget; ++k) e[static_cast<std::size_t>(uniform(0, static_cast<int>(slots) - 1))] += 1;
    return e;
  }

  DOp op(RingSignature sig, int terms, int max_total) {
    DOp p(sig);
    for (int i = 0; i < terms; ++i) p.add_term(sparse_exponent(sig, max_total, sig.homogenized()), coefficient());
    return p;
  }

  DOp nonzero_op(RingSignature sig, int terms, int max_total) {
    for (;;) {
      DOp p = op(sig, terms, max_total);
      if (!p.is_zero()) return p;
    }
  }

  /// z-free operator (valid input for homogenize).
  DOp z_free_op(RingSignature sig, int terms, int max_total) {
    DOp p(sig);
    while (p.is_zero())
      for (int i = 0; i < terms; ++i) p.add_term(sparse_exponent(sig, max_total, false), coefficient());
    return p;
  }

  /// Homogeneous operator of D<z> of the given degree.
  DOp homogeneous_op(RingSignature sig, int degree, int terms, int max_space) {
    DOp p(sig);
    while (p.is_zero()) {
      for (int i = 0; i < terms; ++i) {
        Exponent e(sig.width());
        const std::size_t m = sig.space_vars();
        for (std::size_t q = 0; q < m; ++q) e[q] = static_cast<std::uint32_t>(uniform(0, max_space) == 0 ? 1 : 0);
        int left = degree;
        while (left > 0) {
          const int slot = uniform(0, static_cast<int>(m));
          if (slot == static_cast<int>(m)) e[sig.z()] += 1;
          else e[m + static_cast<std::size_t>(slot)] += 1;
          --left;
        }
        p.add_term(e, coefficient());
      }
    }
    return p;
  }

  /// Form sum l_j V_j with small positive integer weights.
  LinearForm v_form(int n, int p) {
    std::vector<Rational> l;
    for (int j = 0; j < p; ++j) l.emplace_back(uniform(0, 4));
    if (l[0] == 0 && (p == 1 || l[1] == 0)) l[0] = 1;
    return LinearForm::v_form(n, l);
  }

  Polynomial polynomial(std::size_t vars, int terms, int max_degree) {
    Polynomial f(vars);
    for (int i = 0; i < terms; ++i) {
      Polynomial::Monomial m(vars, 0);
      for (std::size_t v = 0; v < vars; ++v) m[v] = static_cast<std::uint32_t>(uniform(0, max_degree));
      f.add_term(m, coefficient());
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bsfan::testing
