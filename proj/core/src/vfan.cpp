#include <bsfan/errors.hpp>
#include <bsfan/vfan.hpp>

#include <algorithm>

namespace bsfan {

bool Cone2::contains(const SlopeDirection& d) const {
  if (d == lower) return lower_closed;
  if (d == upper) return upper_closed;
  return lower < d && d < upper;
}

SlopeDirection Cone2::interior_direction() const {
  if (is_ray()) return lower;
  return {lower.a() + upper.a(), lower.b() + upper.b()};
}

std::optional<std::size_t> VFan::locate(const SlopeDirection& d) const {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!cones[i].cone.contains(d)) continue;
    if (hit) return std::nullopt;
    hit = i;
  }
  return hit;
}

std::optional<std::size_t> VFan::cone_between(const SlopeDirection& lo,
                                              const SlopeDirection& hi) const {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (!cones[i].cone.is_ray() && cones[i].cone.lower == lo && cones[i].cone.upper == hi) return i;
  return std::nullopt;
}

namespace {

struct Bound {
  SlopeDirection dir;
  bool closed;
};

class Interval {
 public:
  Interval() : lo_{SlopeDirection::v1(), true}, hi_{SlopeDirection::v2(), true} {}

  void raise_lower(const SlopeDirection& d, bool closed) {
    if (lo_.dir < d) {
      lo_ = {d, closed};
    } else if (lo_.dir == d) {
      lo_.closed = lo_.closed && closed;
    }
  }
  void cut_upper(const SlopeDirection& d, bool closed) {
    if (d < hi_.dir) {
      hi_ = {d, closed};
    } else if (hi_.dir == d) {
      hi_.closed = hi_.closed && closed;
    }
  }

  // a d1 + b d2 = 0 inside the quadrant.
  void require_zero(std::int64_t d1, std::int64_t d2) {
    if (d1 == 0 && d2 == 0) return;
    SlopeDirection ray = SlopeDirection::v1();
    if (d1 == 0) {
      ray = SlopeDirection::v1();
    } else if (d2 == 0) {
      ray = SlopeDirection::v2();
    } else if ((d1 > 0) != (d2 > 0)) {
      ray = d1 > 0 ? SlopeDirection(-d2, d1) : SlopeDirection(d2, -d1);
    } else {
      empty_ = true;
      return;
    }
    raise_lower(ray, true);
    cut_upper(ray, true);
  }

  // a d1 + b d2 > 0 inside the quadrant.
  void require_positive(std::int64_t d1, std::int64_t d2) {
    if (d1 > 0 && d2 > 0) return;
    if (d1 > 0 && d2 == 0) {
      cut_upper(SlopeDirection::v2(), false);
    } else if (d1 == 0 && d2 > 0) {
      raise_lower(SlopeDirection::v1(), false);
    } else if (d1 > 0 && d2 < 0) {
      cut_upper(SlopeDirection(-d2, d1), false);
    } else if (d1 < 0 && d2 > 0) {
      raise_lower(SlopeDirection(d2, -d1), false);
    } else {
      empty_ = true;
    }
  }

  bool empty() const {
    if (empty_) return true;
    if (hi_.dir < lo_.dir) return true;
    if (hi_.dir == lo_.dir) return !(lo_.closed && hi_.closed);
    return false;
  }

  Cone2 cone() const {
    if (empty()) throw Error("stability region is empty");
    return {lo_.dir, hi_.dir, lo_.closed, hi_.closed};
  }

 private:
  Bound lo_;
  Bound hi_;
  bool empty_ = false;
};

std::pair<std::int64_t, std::int64_t> v_vector(const RingSignature& sig, const Exponent& e) {
  return {sig.v_weight(e, 0), sig.v_weight(e, 1)};
}

// Adds the constraints keeping apex e and the symbol support S of q unchanged.
void constrain(Interval& iv, const DOp& q, const Exponent& e, const std::vector<Exponent>& symbol) {
  const auto& sig = q.signature();
  const auto [e1, e2] = v_vector(sig, e);
  for (const auto& [m, c] : q.terms()) {
    if (m == e) continue;
    const auto [m1, m2] = v_vector(sig, m);
    const std::int64_t d1 = e1 - m1, d2 = e2 - m2;
    if (std::find(symbol.begin(), symbol.end(), m) != symbol.end()) {
      iv.require_zero(d1, d2);
    } else {
      iv.require_positive(d1, d2);
    }
  }
}

void check_p2(const StandardBasis& basis) {
  if (basis.elements().empty()) return;
  if (basis.elements().front().signature().p != 2)
    throw PreconditionViolated("stability cones need p = 2");
}

// Stability interval for the generic form just above `cur` (slope cur + epsilon).
Cone2 stability_above(const StandardBasis& basis, const SlopeDirection& cur) {
  check_p2(basis);
  Interval iv;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DOp& q = basis.elements()[j];
    const auto& sig = q.signature();
    std::pair<std::int64_t, std::int64_t> best{0, 0};
    bool first = true;
    for (const auto& [m, c] : q.terms()) {
      const auto [v1, v2] = v_vector(sig, m);
      std::pair<std::int64_t, std::int64_t> key{cur.a() * v1 + cur.b() * v2, v2};
      if (first || key > best) best = key;
      first = false;
    }
    std::vector<Exponent> symbol;
    for (const auto& [m, c] : q.terms()) {
      const auto [v1, v2] = v_vector(sig, m);
      if (std::pair<std::int64_t, std::int64_t>{cur.a() * v1 + cur.b() * v2, v2} == best)
        symbol.push_back(m);
    }
    constrain(iv, q, basis.apexes()[j], symbol);
  }
  iv.raise_lower(cur, false);
  return iv.cone();
}

bool same_elements(std::vector<DOp> a, std::vector<DOp> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

}  // namespace

Cone2 stability_cone(const StandardBasis& basis, const LinearForm& L) {
  if (!basis.reduced_minimal()) throw PreconditionViolated("stability cone needs a reduced minimal basis");
  check_p2(basis);
  Interval iv;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const DOp& q = basis.elements()[j];
    constrain(iv, q, basis.apexes()[j], newton_diagram(symbol_L(q, L)));
  }
  return iv.cone();
}

std::int64_t kappa_sigma(const StandardBasis& basis, const SlopeDirection& upper, int n) {
  const LinearForm v1 = LinearForm::v_j(n, 2, 0);
  const LinearForm l2 = upper.form(n);
  Rational best = 0;
  for (const auto& q : basis.elements()) {
    const auto full = ord_L(q, v1);
    const auto top = ord_L(symbol_L(q, l2), v1);
    if (full && top) best = std::max(best, Rational(*full - *top));
  }
  if (best.get_den() != 1 || !best.get_num().fits_slong_p()) throw Error("kappa is not integral");
  return best.get_num().get_si();
}

OrderDescriptor boundary_order(const Cone2& cone, const SlopeDirection& L, int n) {
  return OrderDescriptor::tri(L.form(n), cone.interior_witness(n));
}

VFan compute_fan(const IdealPresentation& hI, const Budget& budget) {
  const RingSignature sig = hI.signature();
  if (!sig.homogenized()) throw PreconditionViolated("fan needs a presentation of h(I)");
  for (const auto& g : hI.generators)
    if (!g.is_homogeneous()) throw PreconditionViolated("fan needs homogeneous generators");
  VFan fan;
  fan.n = sig.n;
  fan.p = sig.p;
  if (sig.p > 2) throw PreconditionViolated("fan computation is limited to p <= 2");

  if (sig.p == 1) {
    auto b = reduced_basis(hI, OrderDescriptor::lh_order(LinearForm::v_j(sig.n, 1, 0)), budget);
    fan.partial = b.truncated();
    fan.cones.push_back({Cone2{SlopeDirection::v1(), SlopeDirection::v1(), true, true}, std::move(b), 0});
    fan.skeleton = {SlopeDirection::v1()};
    return fan;
  }

  SlopeDirection cur = SlopeDirection::v1();
  bool covered = false;
  while (true) {
    Cone2 cone;
    StandardBasis basis({}, OrderDescriptor::base0(sig.n, sig.p));
    if (!covered) {
      auto b = reduced_basis(hI, OrderDescriptor::lh_order(cur.form(sig.n)), budget);
      if (b.truncated()) {
        fan.partial = true;
        break;
      }
      cone = stability_cone(b, cur.form(sig.n));
      cone.lower = cur;
      cone.lower_closed = true;
      if (!cone.is_ray()) {
        auto w = reduced_basis(hI, OrderDescriptor::lh_order(cone.interior_witness(sig.n)), budget);
        if (w.truncated()) {
          fan.partial = true;
          break;
        }
        if (!same_elements(w.elements(), b.elements()))
          throw Error("fan sweep: basis at " + cur.to_string() + " is not stable inside its cone");
        basis = std::move(w);
      } else {
        basis = std::move(b);
      }
    } else {
      if (cur == SlopeDirection::v2()) break;
      auto b = reduced_basis(hI, OrderDescriptor::tri(cur.form(sig.n), SlopeDirection::v2().form(sig.n)),
                             budget);
      if (b.truncated()) {
        fan.partial = true;
        break;
      }
      cone = stability_above(b, cur);
      auto w = reduced_basis(hI, OrderDescriptor::lh_order(cone.interior_witness(sig.n)), budget);
      if (w.truncated()) {
        fan.partial = true;
        break;
      }
      if (!same_elements(w.elements(), b.elements()))
        throw Error("fan sweep: generic basis above " + cur.to_string() + " is not stable");
      basis = std::move(w);
    }
    const bool done = cone.upper == SlopeDirection::v2() && cone.upper_closed;
    cur = cone.upper;
    covered = cone.upper_closed;
    fan.cones.push_back({cone, std::move(basis), 0});
    if (done) break;
  }

  // Axis rays whose basis is the neighbouring cone's basis are absorbed into it.
  auto& cs = fan.cones;
  if (cs.size() >= 2 && cs.front().cone.is_ray() && cs.front().cone.lower == SlopeDirection::v1() &&
      same_elements(cs[0].basis.elements(), cs[1].basis.elements())) {
    cs[1].cone.lower_closed = true;
    cs.erase(cs.begin());
  }
  if (cs.size() >= 2 && cs.back().cone.is_ray() && cs.back().cone.lower == SlopeDirection::v2() &&
      same_elements(cs[cs.size() - 2].basis.elements(), cs.back().basis.elements())) {
    cs[cs.size() - 2].cone.upper_closed = true;
    cs.pop_back();
  }

  for (auto& c : cs)
    c.kappa_sigma = c.cone.is_ray() ? 0 : kappa_sigma(c.basis, c.cone.upper, sig.n);
  fan.skeleton = skeleton(fan);
  return fan;
}

std::vector<SlopeDirection> skeleton(const VFan& fan) {
  std::vector<SlopeDirection> out;
  for (const auto& c : fan.cones) {
    out.push_back(c.cone.lower);
    out.push_back(c.cone.upper);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KappaResult kappa1(const VFan& fan) {
  if (fan.partial) throw PreconditionViolated("kappa needs a complete fan");
  KappaResult r;
  for (const auto& c : fan.cones) {
    r.per_cone.emplace_back(c.cone, c.kappa_sigma);
    if (!c.cone.is_ray()) r.kappa1 = std::max(r.kappa1, c.kappa_sigma);
  }
  r.shift_vector = {r.kappa1, 0};
  return r;
}

}  // namespace bsfan
