#pragma once

#include <bsfan/budget.hpp>
#include <bsfan/dop.hpp>
#include <bsfan/linear_form.hpp>
#include <bsfan/polynomial.hpp>
#include <bsfan/slope.hpp>
#include <bsfan/standard_basis.hpp>
#include <bsfan/vfan.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bsfan {

/// M = D/I together with the data every membership question needs: a global
/// Groebner basis of I (ideal membership), h(I), the V-fan (built on first
/// use) and per-form bases for V^L searches. Thread-safe.
class ModuleContext {
 public:
  /// gens generate I in the Weyl ring.
  explicit ModuleContext(IdealPresentation ideal, Budget budget = {});
  ~ModuleContext();
  ModuleContext(const ModuleContext&) = delete;
  ModuleContext& operator=(const ModuleContext&) = delete;

  RingSignature signature() const;
  const Budget& budget() const noexcept { return budget_; }
  const IdealPresentation& ideal() const noexcept { return ideal_; }
  const StandardBasis& global_basis() const noexcept { return global_; }
  const IdealPresentation& homogenized() const noexcept { return h_ideal_; }

  /// Throws PreconditionViolated for p > 2.
  const VFan& fan() const;

  /// P in I.
  bool contains(const DOp& p) const;
  /// a delta = b delta in M.
  bool same_element(const DOp& a, const DOp& b) const { return contains(a - b); }

  /// Reduced basis of h(I) for <_L^h, cached per form.
  const StandardBasis& basis_at(const LinearForm& L) const;

 private:
  struct Cache;

  IdealPresentation ideal_;
  Budget budget_;
  StandardBasis global_;
  IdealPresentation h_ideal_;
  std::unique_ptr<Cache> cache_;
};

/// Orders of a representative at each form of a list.
std::vector<OrderValue> orders_at(const DOp& p, const std::vector<LinearForm>& forms);

/// One application of the order-lowering construction. The division of
/// h-padded P - P1 runs under div_order (the boundary order of the cone at
/// target); W collects the quotients whose product attains the target order.
/// Throws PreconditionViolated unless P - P1 in I and ord_target(P1) < ord_target(P),
/// BudgetExhausted when the division truncates, and Error if a postcondition fails.
DOp lower_order_step(const ModuleContext& ctx, const DOp& p, const LinearForm& target,
                     const std::vector<LinearForm>& others, const StandardBasis& basis,
                     const OrderDescriptor& div_order, const DOp& p1);

struct LoweringTrace {
  DOp result;
  std::size_t iterations = 0;
  /// Target order after each step, starting with the input.
  std::vector<OrderValue> target_orders;
};

/// Repeats lower_order_step until ord_target <= bound.
LoweringTrace lower_until(const ModuleContext& ctx, const DOp& p, const LinearForm& target,
                          const Rational& bound, const std::vector<LinearForm>& others,
                          const StandardBasis& basis, const OrderDescriptor& div_order,
                          const DOp& p1);

/// A cone of the fan seen through its primitive generators (the closure's rays).
struct ConeView {
  std::vector<SlopeDirection> generators;
  const StandardBasis* basis = nullptr;
  Cone2 cone;
};

/// Generators of the cone at index idx of the fan.
ConeView cone_view(const VFan& fan, std::size_t idx);

/// Single representative P with P delta = m and ord^{L_i}(P) <= L_i(w) for every
/// generator, from per-generator witnesses (witnesses[i] for generators[i]).
DOp sigmaV_witness(const ModuleContext& ctx, const ConeView& cone,
                   const std::vector<DOp>& witnesses, const std::vector<std::int64_t>& w);

struct RaiseResult {
  DOp result;
  std::size_t iterations = 0;
  /// ord^{V_1} after each step, starting with the input.
  std::vector<OrderValue> v1_orders;
};

/// Lowers the L_2-order of P (cone generators L_1 < L_2) below L_2(w) while the
/// V_1-order stays below max(ord^{V_1}(P), w_1 + kappa). Requires p = 2,
/// ord^{L_1}(P) <= L_1(w) and ord^{L_2}(p2) <= L_2(w) with p2 delta = P delta.
RaiseResult controlled_raise(const ModuleContext& ctx, const DOp& p, const ConeView& cone,
                             const std::vector<std::int64_t>& w, const DOp& p2,
                             std::int64_t kappa);

struct ChainStep {
  SlopeDirection generator;
  DOp representative;
  OrderValue order_at_generator;
  OrderValue v1_order;
};

struct ChainResult {
  DOp result;
  std::int64_t kappa1 = 0;
  std::vector<ChainStep> steps;
};

/// Walks the skeleton V_1 = L_0 < ... < L_q = V_2 with controlled raises.
/// witnesses[i] is a representative with ord^{L_i} <= L_i(w), all denoting the
/// same element. The result lies in V_{w + (kappa1, 0)}.
ChainResult vbar_to_V_representative(const ModuleContext& ctx, const std::vector<std::int64_t>& w,
                                     const std::vector<DOp>& witnesses);

/// Searches a representative of p delta with ord^L <= k, by reducing z^s h(p)
/// with the <_L^h basis for s = 0..max_shift.
std::optional<DOp> find_vl_witness(const ModuleContext& ctx, const DOp& p, const LinearForm& L,
                                   const Rational& k, unsigned max_shift = 4);

struct FiltrationQuery {
  enum class Kind { V, VL, sigmaV, Vbar };
  Kind kind = Kind::V;
  std::vector<std::int64_t> w;
  /// VL only.
  std::optional<LinearForm> L;
  Rational k = 0;
  /// sigmaV only: index into the fan's cone list.
  std::size_t cone = 0;
};

enum class MembershipStatus { member, no_certificate, truncated };

struct MembershipResult {
  MembershipStatus status = MembershipStatus::no_certificate;
  /// Single representative (V, VL, sigmaV).
  std::optional<DOp> certificate;
  /// One representative per skeleton ray (Vbar).
  std::vector<std::pair<SlopeDirection, DOp>> witnesses;
  /// Checked bounds, "ord^L(P) <= k" style.
  std::vector<std::string> bounds;
  std::vector<std::string> trace;

  bool member() const noexcept { return status == MembershipStatus::member; }
};

/// Semi-decision for m = p delta lying in the queried filtration step. Every
/// certificate is re-checked (I-membership of the difference and all bounds).
MembershipResult filtration_member(const ModuleContext& ctx, const DOp& p,
                                   const FiltrationQuery& q);

/// Per-skeleton-ray polynomials b_L(lambda) in one variable.
struct BsatoFactors {
  std::map<std::vector<std::int64_t>, Polynomial> b_L;
  std::string provenance;
};

struct AssembledB {
  Polynomial product;
  /// The factors b_L(L(s) - k) in skeleton order, then k descending.
  std::vector<Polynomial> factors;

  /// "(s1+1)*(s2+1)"; "1" for an empty product.
  std::string factored(std::span<const std::string> names) const;
};

/// prod_L prod_{-L(v + kappa) < k <= 0} b_L(L(s) - k). Throws InvalidArgument
/// on a missing or zero factor.
AssembledB assemble_b(const BsatoFactors& factors, const std::vector<std::int64_t>& kappa,
                      const std::vector<std::int64_t>& v,
                      const std::vector<std::vector<std::int64_t>>& skeleton);

}  // namespace bsfan
