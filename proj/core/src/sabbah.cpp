#include <bsfan/division.hpp>
#include <bsfan/errors.hpp>
#include <bsfan/expr.hpp>
#include <bsfan/sabbah.hpp>

#include <algorithm>

namespace bsfan {

struct ModuleContext::Cache {
  std::once_flag fan_once;
  std::optional<VFan> fan;
  std::mutex mutex;
  std::map<std::string, std::unique_ptr<StandardBasis>> bases;
};

namespace {

std::string ord_text(const OrderValue& v) { return v ? to_string(*v) : "-inf"; }

std::string form_text(const LinearForm& L) {
  auto l = L.v_coordinates();
  if (!l) return "L";
  std::string s = "(";
  for (std::size_t j = 0; j < l->size(); ++j) s += (j ? "," : "") + to_string((*l)[j]);
  return s + ")";
}

Rational bound_at(const LinearForm& L, const std::vector<std::int64_t>& w) {
  return L.evaluate_shift(std::span<const std::int64_t>(w));
}

// h-padded representatives of p and p1 in a common degree.
std::pair<DOp, DOp> padded_pair(const DOp& p, const DOp& p1) {
  const RingSignature hs = p.signature().with_ring(Ring::homogenized);
  const auto d = std::max(p.derivative_degree(), p1.derivative_degree());
  auto pad = [&](const DOp& q) {
    if (q.is_zero()) return DOp(hs);
    return times_z(homogenize(q), static_cast<std::uint32_t>(d - q.derivative_degree()));
  };
  return {pad(p), pad(p1)};
}

}  // namespace

ModuleContext::ModuleContext(IdealPresentation ideal, Budget budget)
    : ideal_(std::move(ideal)),
      budget_(budget),
      global_({}, OrderDescriptor::base0(1, 1)),
      cache_(std::make_unique<Cache>()) {
  const RingSignature sig = ideal_.signature().with_ring(Ring::weyl);
  for (auto& g : ideal_.generators) g = embed(g, Ring::weyl);
  ideal_.homogenized = false;
  global_ = reduced_basis(ideal_, OrderDescriptor::degree_first(sig.n, sig.p), budget_);
  if (global_.truncated()) throw BudgetExhausted("completion of I ran out of budget");
  h_ideal_.homogenized = true;
  for (const auto& q : global_.elements()) h_ideal_.generators.push_back(homogenize(q));
}

ModuleContext::~ModuleContext() = default;

RingSignature ModuleContext::signature() const { return ideal_.signature(); }

const VFan& ModuleContext::fan() const {
  if (signature().p > 2) throw PreconditionViolated("fan computation is limited to p <= 2");
  std::call_once(cache_->fan_once, [&] { cache_->fan = compute_fan(h_ideal_, budget_); });
  return *cache_->fan;
}

bool ModuleContext::contains(const DOp& p) const {
  if (p.is_zero()) return true;
  return normal_form(embed(p, Ring::weyl), global_, budget_.division_steps).is_zero();
}

const StandardBasis& ModuleContext::basis_at(const LinearForm& L) const {
  const auto ord = OrderDescriptor::lh_order(L);
  const std::string key = ord.describe();
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->bases.find(key);
  if (it == cache_->bases.end()) {
    auto b = reduced_basis(h_ideal_, ord, budget_);
    if (b.truncated()) throw BudgetExhausted("completion for " + key + " ran out of budget");
    it = cache_->bases.emplace(key, std::make_unique<StandardBasis>(std::move(b))).first;
  }
  return *it->second;
}

std::vector<OrderValue> orders_at(const DOp& p, const std::vector<LinearForm>& forms) {
  std::vector<OrderValue> out;
  out.reserve(forms.size());
  for (const auto& L : forms) out.push_back(ord_L(p, L));
  return out;
}

DOp lower_order_step(const ModuleContext& ctx, const DOp& p, const LinearForm& target,
                     const std::vector<LinearForm>& others, const StandardBasis& basis,
                     const OrderDescriptor& div_order, const DOp& p1) {
  const auto before = ord_L(p, target);
  if (!ord_less(ord_L(p1, target), before))
    throw PreconditionViolated("witness does not have a smaller order at the target form");
  if (!ctx.same_element(p, p1)) throw PreconditionViolated("P - P1 is not in I");

  const auto [h, h1] = padded_pair(p, p1);
  const DOp h0 = h - h1;
  auto div = divide(h0, basis.elements(), div_order, ctx.budget().division_steps);
  if (div.truncated) throw BudgetExhausted("division inside the lowering step ran out of steps");
  if (!div.remainder.is_zero())
    throw Error("cone basis does not reduce h(P - P1) to zero under " + div_order.describe());

  const auto top = ord_L(h0, target);
  DOp w(h.signature());
  for (std::size_t j = 0; j < div.quotients.size(); ++j) {
    const DOp& q = div.quotients[j];
    if (q.is_zero()) continue;
    if (ord_L(q * basis.elements()[j], target) != top) continue;
    w += symbol_L(q, target) * basis.elements()[j];
  }
  const DOp result = specialize_z1(h - w);

  if (!ctx.same_element(result, p)) throw Error("lowering step left the class of P");
  if (!ord_less(ord_L(result, target), before)) throw Error("lowering step did not lower the target order");
  for (const auto& L : others)
    if (ord_less(ord_L(p, L), ord_L(result, L)))
      throw Error("lowering step raised the order at " + form_text(L));
  return result;
}

LoweringTrace lower_until(const ModuleContext& ctx, const DOp& p, const LinearForm& target,
                          const Rational& bound, const std::vector<LinearForm>& others,
                          const StandardBasis& basis, const OrderDescriptor& div_order,
                          const DOp& p1) {
  if (!ord_le(ord_L(p1, target), bound))
    throw PreconditionViolated("witness exceeds the requested bound at " + form_text(target));
  LoweringTrace tr{p, 0, {ord_L(p, target)}};
  while (!ord_le(tr.target_orders.back(), bound)) {
    if (tr.iterations >= ctx.budget().lowering_iterations)
      throw BudgetExhausted("order lowering ran out of iterations");
    tr.result = lower_order_step(ctx, tr.result, target, others, basis, div_order, p1);
    ++tr.iterations;
    tr.target_orders.push_back(ord_L(tr.result, target));
  }
  return tr;
}

ConeView cone_view(const VFan& fan, std::size_t idx) {
  if (idx >= fan.cones.size()) throw InvalidArgument("cone index out of range");
  const auto& c = fan.cones[idx];
  ConeView v;
  v.cone = c.cone;
  v.basis = &c.basis;
  v.generators.push_back(c.cone.lower);
  if (!c.cone.is_ray()) v.generators.push_back(c.cone.upper);
  return v;
}

DOp sigmaV_witness(const ModuleContext& ctx, const ConeView& cone, const std::vector<DOp>& witnesses,
                   const std::vector<std::int64_t>& w) {
  const RingSignature sig = ctx.signature();
  if (witnesses.size() != cone.generators.size())
    throw InvalidArgument("one witness per cone generator is required");
  if (witnesses.empty()) throw InvalidArgument("cone without generators");
  std::vector<LinearForm> forms;
  for (const auto& g : cone.generators) forms.push_back(g.form(sig.n, sig.p));
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (!ord_le(ord_L(witnesses[i], forms[i]), bound_at(forms[i], w)))
      throw PreconditionViolated("witness " + std::to_string(i) + " exceeds its bound");
    if (i > 0 && !ctx.same_element(witnesses[i], witnesses[0]))
      throw PreconditionViolated("witnesses denote different elements");
  }
  DOp cur = witnesses[0];
  for (std::size_t i = 1; i < forms.size(); ++i) {
    std::vector<LinearForm> others(forms.begin(), forms.begin() + static_cast<std::ptrdiff_t>(i));
    const auto ord = boundary_order(cone.cone, cone.generators[i], sig.n);
    cur = lower_until(ctx, cur, forms[i], bound_at(forms[i], w), others, *cone.basis, ord,
                      witnesses[i])
              .result;
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!ord_le(ord_L(cur, forms[i]), bound_at(forms[i], w)))
      throw Error("sigma-V witness violates the bound at " + form_text(forms[i]));
  if (!ctx.same_element(cur, witnesses[0])) throw Error("sigma-V witness left the class of m");
  return cur;
}

RaiseResult controlled_raise(const ModuleContext& ctx, const DOp& p, const ConeView& cone,
                             const std::vector<std::int64_t>& w, const DOp& p2, std::int64_t kappa) {
  const RingSignature sig = ctx.signature();
  if (sig.p != 2) throw PreconditionViolated("controlled raise needs p = 2");
  if (cone.generators.size() != 2) throw PreconditionViolated("controlled raise needs a 2-dimensional cone");
  if (w.size() != 2) throw InvalidArgument("w must have two entries");
  const LinearForm l1 = cone.generators[0].form(sig.n);
  const LinearForm l2 = cone.generators[1].form(sig.n);
  const LinearForm v1 = LinearForm::v_j(sig.n, 2, 0);
  if (!ord_le(ord_L(p, l1), bound_at(l1, w))) throw PreconditionViolated("ord at L1 exceeds L1(w)");
  if (!ord_le(ord_L(p2, l2), bound_at(l2, w))) throw PreconditionViolated("witness exceeds L2(w)");
  if (!ctx.same_element(p, p2)) throw PreconditionViolated("P - P2 is not in I");

  RaiseResult res{p, 0, {ord_L(p, v1)}};
  const Rational cap = std::max(p.is_zero() ? Rational(w[0] + kappa) : *ord_L(p, v1),
                                Rational(static_cast<long>(w[0] + kappa)));
  const auto ord = boundary_order(cone.cone, cone.generators[1], sig.n);
  while (!ord_le(ord_L(res.result, l2), bound_at(l2, w))) {
    if (res.iterations >= ctx.budget().lowering_iterations)
      throw BudgetExhausted("controlled raise ran out of iterations");
    res.result = lower_order_step(ctx, res.result, l2, {l1}, *cone.basis, ord, p2);
    ++res.iterations;
    res.v1_orders.push_back(ord_L(res.result, v1));
    if (!ord_le(res.v1_orders.back(), cap))
      throw Error("controlled raise exceeded the V1 bound " + to_string(cap));
  }
  if (!ctx.same_element(res.result, p)) throw Error("controlled raise left the class of P");
  if (!ord_le(ord_L(res.result, l1), bound_at(l1, w))) throw Error("controlled raise broke the L1 bound");
  return res;
}

ChainResult vbar_to_V_representative(const ModuleContext& ctx, const std::vector<std::int64_t>& w,
                                     const std::vector<DOp>& witnesses) {
  const RingSignature sig = ctx.signature();
  if (sig.p != 2) throw PreconditionViolated("the skeleton chain needs p = 2");
  if (w.size() != 2) throw InvalidArgument("w must have two entries");
  const VFan& fan = ctx.fan();
  const auto k = kappa1(fan);
  const auto& skel = fan.skeleton;
  if (witnesses.size() != skel.size())
    throw InvalidArgument("one witness per skeleton ray is required");
  const LinearForm v1 = LinearForm::v_j(sig.n, 2, 0);
  const Rational v1_cap = Rational(static_cast<long>(w[0] + k.kappa1));

  for (std::size_t i = 0; i < skel.size(); ++i) {
    const auto L = skel[i].form(sig.n);
    if (!ord_le(ord_L(witnesses[i], L), bound_at(L, w)))
      throw PreconditionViolated("witness for " + skel[i].to_string() + " exceeds its bound");
    if (i > 0 && !ctx.same_element(witnesses[i], witnesses[0]))
      throw PreconditionViolated("witnesses denote different elements");
  }

  ChainResult out{witnesses[0], k.kappa1, {}};
  auto record = [&](std::size_t i, const DOp& t) {
    const auto L = skel[i].form(sig.n);
    ChainStep st{skel[i], t, ord_L(t, L), ord_L(t, v1)};
    if (!ctx.same_element(t, witnesses[0])) throw Error("chain step left the class of m");
    if (!ord_le(st.order_at_generator, bound_at(L, w)))
      throw Error("chain step violates the bound at " + skel[i].to_string());
    if (!ord_le(st.v1_order, v1_cap)) throw Error("chain step exceeds w1 + kappa1 in V1-order");
    out.steps.push_back(std::move(st));
  };
  record(0, out.result);
  for (std::size_t i = 1; i < skel.size(); ++i) {
    auto idx = fan.cone_between(skel[i - 1], skel[i]);
    if (!idx) throw Error("no 2-dimensional cone between consecutive skeleton rays");
    const auto view = cone_view(fan, *idx);
    out.result = controlled_raise(ctx, out.result, view, w, witnesses[i], fan.cones[*idx].kappa_sigma).result;
    record(i, out.result);
  }
  const LinearForm v2 = LinearForm::v_j(sig.n, 2, 1);
  if (!ord_le(ord_L(out.result, v2), Rational(static_cast<long>(w[1]))))
    throw Error("chain result exceeds w2 in V2-order");
  return out;
}

std::optional<DOp> find_vl_witness(const ModuleContext& ctx, const DOp& p, const LinearForm& L,
                                   const Rational& k, unsigned max_shift) {
  const DOp pw = embed(p, Ring::weyl);
  if (ord_le(ord_L(pw, L), k)) return pw;
  const StandardBasis& basis = ctx.basis_at(L);
  const DOp h = homogenize(pw);
  for (unsigned s = 0; s <= max_shift; ++s) {
    const DOp r = normal_form(times_z(h, s), basis, ctx.budget().division_steps);
    DOp cand = specialize_z1(r);
    if (ord_le(ord_L(cand, L), k)) {
      if (!ctx.same_element(cand, pw)) throw Error("normal form left the class of P");
      return cand;
    }
  }
  return std::nullopt;
}

namespace {

void add_bound(MembershipResult& r, const DOp& cert, const LinearForm& L, const Rational& k) {
  r.bounds.push_back("ord^" + form_text(L) + " = " + ord_text(ord_L(cert, L)) + " <= " + to_string(k));
}

bool meets(const DOp& q, const std::vector<LinearForm>& forms, const std::vector<Rational>& bounds) {
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (!ord_le(ord_L(q, forms[i]), bounds[i])) return false;
  return true;
}

MembershipResult member_with(const ModuleContext& ctx, const DOp& p, const DOp& cert,
                             const std::vector<LinearForm>& forms, const std::vector<Rational>& bounds) {
  if (!ctx.same_element(cert, p) || !meets(cert, forms, bounds))
    throw Error("certificate failed re-verification");
  MembershipResult r;
  r.status = MembershipStatus::member;
  r.certificate = cert;
  for (std::size_t i = 0; i < forms.size(); ++i) add_bound(r, cert, forms[i], bounds[i]);
  return r;
}

MembershipResult query_v(const ModuleContext& ctx, const DOp& p, const std::vector<std::int64_t>& w) {
  const RingSignature sig = ctx.signature();
  std::vector<LinearForm> forms;
  std::vector<Rational> bounds;
  for (int j = 0; j < sig.p; ++j) {
    forms.push_back(LinearForm::v_j(sig.n, sig.p, j));
    bounds.emplace_back(static_cast<long>(w[static_cast<std::size_t>(j)]));
  }
  MembershipResult r;
  std::vector<DOp> per;
  if (meets(p, forms, bounds)) return member_with(ctx, p, p, forms, bounds);
  for (std::size_t j = 0; j < forms.size(); ++j) {
    auto c = find_vl_witness(ctx, p, forms[j], bounds[j]);
    if (!c) {
      r.trace.push_back("no representative with ord^V" + std::to_string(j + 1) + " <= " + to_string(bounds[j]));
      return r;
    }
    r.trace.push_back("V" + std::to_string(j + 1) + " witness: " + format_operator(*c));
    if (meets(*c, forms, bounds)) {
      auto m = member_with(ctx, p, *c, forms, bounds);
      m.trace = r.trace;
      return m;
    }
    per.push_back(*c);
  }
  if (sig.p != 2) return r;

  const VFan& fan = ctx.fan();
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    const auto& c = fan.cones[i].cone;
    if (c.lower == SlopeDirection::v1() && c.upper == SlopeDirection::v2()) {
      const DOp cert = sigmaV_witness(ctx, cone_view(fan, i), per, w);
      r.trace.push_back("combined through the cone spanning the quadrant");
      auto m = member_with(ctx, p, cert, forms, bounds);
      m.trace = r.trace;
      return m;
    }
  }

  const auto k = kappa1(fan).kappa1;
  const std::vector<std::int64_t> shifted{w[0] - k, w[1]};
  std::vector<DOp> skel_w;
  for (const auto& L : fan.skeleton) {
    const LinearForm f = L.form(sig.n);
    auto c = find_vl_witness(ctx, p, f, bound_at(f, shifted));
    if (!c) {
      r.trace.push_back("no skeleton witness at " + L.to_string() + " for w - (kappa1, 0)");
      return r;
    }
    skel_w.push_back(*c);
  }
  auto chain = vbar_to_V_representative(ctx, shifted, skel_w);
  r.trace.push_back("skeleton chain with kappa1 = " + std::to_string(k));
  auto m = member_with(ctx, p, chain.result, forms, bounds);
  m.trace = r.trace;
  return m;
}

}  // namespace

MembershipResult filtration_member(const ModuleContext& ctx, const DOp& p, const FiltrationQuery& q) {
  const RingSignature sig = ctx.signature();
  const DOp pw = embed(p, Ring::weyl);
  try {
    switch (q.kind) {
      case FiltrationQuery::Kind::VL: {
        if (!q.L) throw InvalidArgument("V^L query needs a form");
        auto c = find_vl_witness(ctx, pw, *q.L, q.k);
        if (!c) {
          MembershipResult r;
          r.trace.push_back("no representative with ord^" + form_text(*q.L) + " <= " + to_string(q.k));
          return r;
        }
        return member_with(ctx, pw, *c, {*q.L}, {q.k});
      }
      case FiltrationQuery::Kind::V:
        if (q.w.size() != static_cast<std::size_t>(sig.p)) throw InvalidArgument("w must have p entries");
        return query_v(ctx, pw, q.w);
      case FiltrationQuery::Kind::sigmaV: {
        if (q.w.size() != static_cast<std::size_t>(sig.p)) throw InvalidArgument("w must have p entries");
        const VFan& fan = ctx.fan();
        const auto view = cone_view(fan, q.cone);
        std::vector<LinearForm> forms;
        std::vector<Rational> bounds;
        std::vector<DOp> per;
        MembershipResult r;
        for (const auto& g : view.generators) {
          forms.push_back(g.form(sig.n, sig.p));
          bounds.push_back(bound_at(forms.back(), q.w));
          auto c = find_vl_witness(ctx, pw, forms.back(), bounds.back());
          if (!c) {
            r.trace.push_back("no witness at generator " + g.to_string());
            return r;
          }
          per.push_back(*c);
        }
        return member_with(ctx, pw, sigmaV_witness(ctx, view, per, q.w), forms, bounds);
      }
      case FiltrationQuery::Kind::Vbar: {
        if (q.w.size() != static_cast<std::size_t>(sig.p)) throw InvalidArgument("w must have p entries");
        const VFan& fan = ctx.fan();
        MembershipResult r;
        for (const auto& L : fan.skeleton) {
          const LinearForm f = L.form(sig.n, sig.p);
          const Rational b = bound_at(f, q.w);
          auto c = find_vl_witness(ctx, pw, f, b);
          if (!c) {
            r.witnesses.clear();
            r.bounds.clear();
            r.trace.push_back("no witness at skeleton ray " + L.to_string());
            return r;
          }
          if (!ctx.same_element(*c, pw) || !ord_le(ord_L(*c, f), b))
            throw Error("skeleton witness failed re-verification");
          add_bound(r, *c, f, b);
          r.witnesses.emplace_back(L, *c);
        }
        r.status = MembershipStatus::member;
        return r;
      }
    }
  } catch (const BudgetExhausted& e) {
    MembershipResult r;
    r.status = MembershipStatus::truncated;
    r.trace.push_back(e.what());
    return r;
  }
  return {};
}

std::string AssembledB::factored(std::span<const std::string> names) const {
  if (factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += '*';
    out += '(' + factors[i].to_string(names) + ')';
  }
  return out;
}

AssembledB assemble_b(const BsatoFactors& factors, const std::vector<std::int64_t>& kappa,
                      const std::vector<std::int64_t>& v,
                      const std::vector<std::vector<std::int64_t>>& skeleton) {
  const std::size_t p = v.size();
  if (p == 0 || kappa.size() != p) throw InvalidArgument("v and kappa must have p entries");
  AssembledB out{Polynomial::constant(p, 1), {}};
  for (const auto& L : skeleton) {
    if (L.size() != p) throw InvalidArgument("skeleton entries must have p coordinates");
    auto it = factors.b_L.find(L);
    if (it == factors.b_L.end()) {
      std::string s;
      for (auto c : L) s += (s.empty() ? "" : ",") + std::to_string(c);
      throw InvalidArgument("missing b_L for skeleton ray (" + s + ")");
    }
    const Polynomial& b = it->second;
    if (b.vars() != 1 || b.is_zero()) throw InvalidArgument("b_L must be a nonzero polynomial in one variable");
    std::int64_t top = 0;
    for (std::size_t j = 0; j < p; ++j) top += L[j] * (v[j] + kappa[j]);
    for (std::int64_t k = 0; k > -top; --k) {
      Polynomial arg = Polynomial::constant(p, Rational(static_cast<long>(-k)));
      for (std::size_t j = 0; j < p; ++j)
        if (L[j] != 0) arg += Polynomial::variable(p, j) * Rational(static_cast<long>(L[j]));
      const std::vector<Polynomial> sub{arg};
      Polynomial f = b.compose(sub);
      out.product = out.product * f;
      out.factors.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace bsfan
