#include <bsfan/division.hpp>
#include <bsfan/errors.hpp>
#include <bsfan/standard_basis.hpp>

#include <algorithm>
#include <set>
#include <tuple>

namespace bsfan {

RingSignature IdealPresentation::signature() const {
  if (generators.empty()) throw InvalidArgument("empty ideal presentation");
  return generators.front().signature();
}

StandardBasis::StandardBasis(std::vector<DOp> elements, OrderDescriptor order, bool reduced_minimal,
                             bool truncated)
    : elements_(std::move(elements)),
      order_(std::move(order)),
      reduced_minimal_(reduced_minimal),
      truncated_(truncated) {
  apexes_.reserve(elements_.size());
  for (const auto& q : elements_) apexes_.push_back(privileged_exponent(q, order_));
}

StandardBasis StandardBasis::with_order(const OrderDescriptor& ord, bool reduced_minimal) const {
  return StandardBasis(elements_, ord, reduced_minimal, truncated_);
}

namespace {

DOp monic(const DOp& q, const OrderDescriptor& ord) {
  return q * (Rational(1) / leading_coefficient(q, ord));
}

DOp s_polynomial(const DOp& a, const Exponent& ea, const DOp& b, const Exponent& eb) {
  const Exponent l = Exponent::lcm(ea, eb);
  DOp s = multiply_monomial(l - ea, Rational(1) / a.coefficient(ea), a);
  s -= multiply_monomial(l - eb, Rational(1) / b.coefficient(eb), b);
  return s;
}

// Pair key: lcm homogeneous degree, lcm total, then indices.
using PairKey = std::tuple<std::uint64_t, std::uint64_t, std::size_t, std::size_t>;

PairKey pair_key(const RingSignature& sig, const Exponent& ea, const Exponent& eb, std::size_t i,
                 std::size_t j) {
  const Exponent l = Exponent::lcm(ea, eb);
  return {sig.homogeneous_degree(l), l.total(), i, j};
}

}  // namespace

StandardBasis complete(const IdealPresentation& gens, const OrderDescriptor& ord,
                       const Budget& budget) {
  const RingSignature sig = gens.signature();
  std::vector<DOp> g;
  std::vector<Exponent> apex;
  for (const auto& q : gens.generators) {
    if (!(q.signature() == sig)) throw SignatureMismatch("generators live in different rings");
    if (q.is_zero()) throw InvalidArgument("zero generator");
    if (!ord.is_well_order() && !q.is_homogeneous())
      throw PreconditionViolated("completion under " + ord.describe() + " needs homogeneous generators");
    if (std::find(g.begin(), g.end(), monic(q, ord)) != g.end()) continue;
    g.push_back(monic(q, ord));
    apex.push_back(privileged_exponent(g.back(), ord));
  }

  std::set<PairKey> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.insert(pair_key(sig, apex[i], apex[j], i, j));

  std::size_t steps = 0;
  bool truncated = false;
  while (!pairs.empty()) {
    if (steps >= budget.completion_steps) {
      truncated = true;
      break;
    }
    ++steps;
    const auto [deg, tot, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    const DOp s = s_polynomial(g[i], apex[i], g[j], apex[j]);
    if (s.is_zero()) continue;
    auto r = divide(s, g, ord, budget.division_steps);
    if (r.truncated) {
      truncated = true;
      break;
    }
    if (r.remainder.is_zero()) continue;
    g.push_back(monic(r.remainder, ord));
    apex.push_back(privileged_exponent(g.back(), ord));
    const std::size_t k = g.size() - 1;
    for (std::size_t a = 0; a < k; ++a) pairs.insert(pair_key(sig, apex[a], apex[k], a, k));
  }
  return StandardBasis(std::move(g), ord, false, truncated);
}

StandardBasis reduce_minimal(const StandardBasis& b, const Budget& budget) {
  if (b.truncated()) throw PreconditionViolated("basis is truncated, not S-pair closed");
  const auto& ord = b.order();
  const auto& el = b.elements();
  const auto& ap = b.apexes();

  // Keep one element per minimal apex.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < el.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < el.size() && !dominated; ++j) {
      if (i == j || !ap[j].divides(ap[i])) continue;
      dominated = ap[j] != ap[i] || j < i;
    }
    if (!dominated) keep.push_back(i);
  }
  std::vector<DOp> minimal;
  for (auto i : keep) minimal.push_back(monic(el[i], ord));

  std::vector<DOp> reduced;
  for (const auto& q : minimal) {
    const Exponent e = privileged_exponent(q, ord);
    DOp tail = q;
    tail.add_term(e, -q.coefficient(e));
    auto r = divide(tail, minimal, ord, budget.division_steps);
    if (r.truncated) throw BudgetExhausted("tail reduction ran out of division steps");
    DOp out = DOp::monomial(q.signature(), e);
    out += r.remainder;
    reduced.push_back(std::move(out));
  }
  // Apexes sorted by the fixed base order so that equal bases list equal elements.
  std::sort(reduced.begin(), reduced.end(), [&](const DOp& a, const DOp& c) {
    return compare_base0(privileged_exponent(c, ord), privileged_exponent(a, ord)) < 0;
  });
  return StandardBasis(std::move(reduced), ord, true, false);
}

StandardBasis reduced_basis(const IdealPresentation& gens, const OrderDescriptor& ord,
                            const Budget& budget) {
  auto b = complete(gens, ord, budget);
  if (b.truncated()) return b;
  return reduce_minimal(b, budget);
}

IdealPresentation homogenize_ideal(const std::vector<DOp>& gens, const Budget& budget) {
  if (gens.empty()) throw InvalidArgument("empty generator list");
  const RingSignature sig = gens.front().signature().with_ring(Ring::weyl);
  IdealPresentation in;
  for (const auto& g : gens) in.generators.push_back(embed(g, Ring::weyl));
  if (!(in.generators.front().signature() == sig)) throw SignatureMismatch("bad signature");
  auto b = complete(in, OrderDescriptor::degree_first(sig.n, sig.p), budget);
  if (b.truncated()) throw BudgetExhausted("completion of I ran out of budget");
  b = reduce_minimal(b, budget);
  IdealPresentation out;
  out.homogenized = true;
  for (const auto& q : b.elements()) out.generators.push_back(homogenize(q));
  return out;
}

bool exp_set_membership(const Exponent& e, const StandardBasis& b) {
  return std::any_of(b.apexes().begin(), b.apexes().end(),
                     [&](const Exponent& a) { return a.divides(e); });
}

bool is_s_pair_closed(const std::vector<DOp>& elements, const OrderDescriptor& ord,
                      std::size_t max_steps) {
  std::vector<Exponent> ap;
  for (const auto& q : elements) ap.push_back(privileged_exponent(q, ord));
  for (std::size_t j = 0; j < elements.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const DOp s = s_polynomial(elements[i], ap[i], elements[j], ap[j]);
      if (s.is_zero()) continue;
      auto r = divide(s, elements, ord, max_steps);
      if (r.truncated || !r.remainder.is_zero()) return false;
    }
  return true;
}

std::string verify_reduced_minimal(const std::vector<DOp>& elements, const OrderDescriptor& ord,
                                   std::size_t max_steps) {
  std::vector<Exponent> ap;
  for (const auto& q : elements) {
    if (q.is_zero()) return "zero element";
    ap.push_back(privileged_exponent(q, ord));
    if (q.coefficient(ap.back()) != 1) return "element not monic";
  }
  for (std::size_t i = 0; i < ap.size(); ++i)
    for (std::size_t j = 0; j < ap.size(); ++j)
      if (i != j && ap[i].divides(ap[j])) return "apexes do not form an antichain";
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& [e, c] : elements[i].terms()) {
      if (e == ap[i]) continue;
      for (const auto& a : ap)
        if (a.divides(e)) return "tail term lies in Exp";
    }
  if (!is_s_pair_closed(elements, ord, max_steps)) return "S-pairs do not reduce to zero";
  return {};
}

}  // namespace bsfan
