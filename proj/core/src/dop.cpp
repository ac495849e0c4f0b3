#include <bsfan/dop.hpp>
#include <bsfan/errors.hpp>

#include <algorithm>

namespace bsfan {

RingSignature RingSignature::make(int n, int p, Ring ring) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (p < 1) throw InvalidArgument("p must be at least 1");
  return {n, p, ring};
}

std::uint64_t RingSignature::derivative_degree(const Exponent& e) const {
  std::uint64_t d = 0;
  for (std::size_t q = space_vars(); q < 2 * space_vars(); ++q) d += e[q];
  return d;
}

std::uint64_t RingSignature::homogeneous_degree(const Exponent& e) const {
  return derivative_degree(e) + e[z()];
}

std::int64_t RingSignature::v_weight(const Exponent& e, int j) const {
  return static_cast<std::int64_t>(e[dt(j)]) - static_cast<std::int64_t>(e[t(j)]);
}

DOp::DOp(RingSignature sig) : sig_(sig) {}

DOp DOp::constant(RingSignature sig, const Rational& c) {
  return monomial(sig, Exponent(sig.width()), c);
}

DOp DOp::monomial(RingSignature sig, Exponent e, const Rational& c) {
  if (e.width() != sig.width()) throw SignatureMismatch("exponent width does not match signature");
  if (!sig.homogenized() && e[sig.z()] != 0)
    throw InvalidArgument("z is not available in the Weyl ring");
  DOp r(sig);
  r.add_term(e, c);
  return r;
}

namespace {
DOp generator(RingSignature sig, std::size_t slot) {
  Exponent e(sig.width());
  e[slot] = 1;
  return DOp::monomial(sig, std::move(e));
}
void check_index(int i, int bound, const char* what) {
  if (i < 0 || i >= bound) throw InvalidArgument(std::string(what) + " index out of range");
}
}  // namespace

DOp DOp::x(RingSignature sig, int i) {
  check_index(i, sig.n, "x");
  return generator(sig, sig.x(i));
}
DOp DOp::t(RingSignature sig, int j) {
  check_index(j, sig.p, "t");
  return generator(sig, sig.t(j));
}
DOp DOp::dx(RingSignature sig, int i) {
  check_index(i, sig.n, "dx");
  return generator(sig, sig.dx(i));
}
DOp DOp::dt(RingSignature sig, int j) {
  check_index(j, sig.p, "dt");
  return generator(sig, sig.dt(j));
}
DOp DOp::z(RingSignature sig) { return generator(sig, sig.z()); }

Rational DOp::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void DOp::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool DOp::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = sig_.homogeneous_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return sig_.homogeneous_degree(t.first) == d; });
}

std::uint64_t DOp::degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, sig_.homogeneous_degree(e));
  return d;
}

std::uint64_t DOp::derivative_degree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, sig_.derivative_degree(e));
  return d;
}

bool DOp::z_free() const {
  const auto zi = sig_.z();
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[zi] == 0; });
}

DOp DOp::operator-() const {
  DOp r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

DOp& DOp::operator+=(const DOp& other) {
  if (!(sig_ == other.sig_)) throw SignatureMismatch("operands live in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

DOp& DOp::operator-=(const DOp& other) {
  if (!(sig_ == other.sig_)) throw SignatureMismatch("operands live in different rings");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

DOp& DOp::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

DOp operator*(const DOp& a, const DOp& b) { return multiply(a, b); }

namespace {

// Leibniz coefficients C(b, c) * a! / (a - c)! for c = 0..min(a, b).
void leibniz_row(std::uint32_t a, std::uint32_t b, std::vector<Integer>& out) {
  const std::uint32_t top = std::min(a, b);
  out.assign(top + 1, Integer(1));
  Integer binom = 1;
  Integer falling = 1;
  for (std::uint32_t c = 1; c <= top; ++c) {
    binom = binom * (b - c + 1) / c;
    falling *= (a - c + 1);
    out[c] = binom * falling;
  }
}

// Accumulates X^e1 * X^e2 * coeff into out.
void multiply_exponents(const RingSignature& sig, const Exponent& e1, const Exponent& e2,
                        const Rational& coeff, DOp& out) {
  const std::size_t m = sig.space_vars();
  const std::size_t zi = sig.z();
  const bool hom = sig.homogenized();

  // Slots q where dx_q of e1 meets x_q of e2 contribute commutation terms.
  std::vector<std::size_t> active;
  for (std::size_t q = 0; q < m; ++q)
    if (e1[m + q] > 0 && e2[q] > 0) active.push_back(q);

  Exponent base(sig.width());
  for (std::size_t q = 0; q < 2 * m; ++q) base[q] = e1[q] + e2[q];
  base[zi] = e1[zi] + e2[zi];

  if (active.empty()) {
    out.add_term(base, coeff);
    return;
  }

  std::vector<std::vector<Integer>> rows(active.size());
  for (std::size_t i = 0; i < active.size(); ++i)
    leibniz_row(e2[active[i]], e1[m + active[i]], rows[i]);

  std::vector<std::uint32_t> c(active.size(), 0);
  while (true) {
    Exponent e = base;
    Integer factor = 1;
    std::uint32_t total = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const auto q = active[i];
      e[q] -= c[i];
      e[m + q] -= c[i];
      total += c[i];
      factor *= rows[i][c[i]];
    }
    if (hom) e[zi] += total;
    out.add_term(e, coeff * Rational(factor));

    std::size_t i = 0;
    while (i < active.size()) {
      if (c[i] + 1 < rows[i].size()) {
        ++c[i];
        break;
      }
      c[i] = 0;
      ++i;
    }
    if (i == active.size()) break;
  }
}

}  // namespace

DOp multiply(const DOp& a, const DOp& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch("operands live in different rings");
  DOp out(a.signature());
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) multiply_exponents(a.signature(), e1, e2, c1 * c2, out);
  return out;
}

DOp multiply_monomial(const Exponent& e, const Rational& c, const DOp& b) {
  DOp out(b.signature());
  if (c == 0) return out;
  for (const auto& [e2, c2] : b.terms()) multiply_exponents(b.signature(), e, e2, c * c2, out);
  return out;
}

DOp homogenize(const DOp& p) {
  if (p.is_zero()) throw InvalidArgument("cannot homogenize the zero operator");
  if (!p.z_free()) throw InvalidArgument("homogenize expects a z-free operator");
  const RingSignature hs = p.signature().with_ring(Ring::homogenized);
  const auto d = p.derivative_degree();
  DOp out(hs);
  for (const auto& [e, c] : p.terms()) {
    Exponent h = e;
    h[hs.z()] = static_cast<std::uint32_t>(d - hs.derivative_degree(e));
    out.add_term(h, c);
  }
  return out;
}

DOp specialize_z1(const DOp& h) {
  const RingSignature ws = h.signature().with_ring(Ring::weyl);
  DOp out(ws);
  for (const auto& [e, c] : h.terms()) {
    Exponent s = e;
    s[ws.z()] = 0;
    out.add_term(s, c);
  }
  return out;
}

DOp embed(const DOp& p, Ring ring) {
  if (ring == Ring::weyl && !p.z_free()) throw InvalidArgument("operator carries z");
  DOp out(p.signature().with_ring(ring));
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

DOp times_z(const DOp& p, std::uint32_t k) {
  if (!p.signature().homogenized()) throw InvalidArgument("times_z needs the homogenized ring");
  if (k == 0) return p;
  DOp out(p.signature());
  const auto zi = p.signature().z();
  for (const auto& [e, c] : p.terms()) {
    Exponent s = e;
    s[zi] += k;
    out.add_term(s, c);
  }
  return out;
}

std::vector<Exponent> newton_diagram(const DOp& p) {
  std::vector<Exponent> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) out.push_back(e);
  return out;
}

}  // namespace bsfan
