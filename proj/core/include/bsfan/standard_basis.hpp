#pragma once

#include <bsfan/budget.hpp>
#include <bsfan/dop.hpp>
#include <bsfan/exponent.hpp>
#include <bsfan/order.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bsfan {

/// A finite family of nonzero operators generating a left ideal.
struct IdealPresentation {
  std::vector<DOp> generators;
  /// True when the generators live in D<z> and present h(I).
  bool homogenized = false;

  RingSignature signature() const;
};

class StandardBasis {
 public:
  StandardBasis(std::vector<DOp> elements, OrderDescriptor order, bool reduced_minimal = false,
                bool truncated = false);

  const std::vector<DOp>& elements() const noexcept { return elements_; }
  const OrderDescriptor& order() const noexcept { return order_; }
  const std::vector<Exponent>& apexes() const noexcept { return apexes_; }
  bool reduced_minimal() const noexcept { return reduced_minimal_; }
  /// Completion stopped on its budget; the family may not be S-pair closed.
  bool truncated() const noexcept { return truncated_; }
  std::size_t size() const noexcept { return elements_.size(); }

  /// Same elements, reinterpreted under another order (apexes recomputed).
  StandardBasis with_order(const OrderDescriptor& ord, bool reduced_minimal) const;

 private:
  std::vector<DOp> elements_;
  OrderDescriptor order_;
  std::vector<Exponent> apexes_;
  bool reduced_minimal_;
  bool truncated_;
};

/// Buchberger-style completion: S-pairs over lcm of apexes, smallest lcm degree first.
/// On exhaustion of budget.completion_steps the partial basis is flagged truncated.
/// Orders that are not well-orders require homogeneous generators (PreconditionViolated).
StandardBasis complete(const IdealPresentation& gens, const OrderDescriptor& ord,
                       const Budget& budget = {});

/// Drops dominated apexes, fully reduces tails, makes elements monic and sorts
/// them by apex (descending under <_0). Throws PreconditionViolated on a truncated input.
StandardBasis reduce_minimal(const StandardBasis& b, const Budget& budget = {});

/// complete + reduce_minimal.
StandardBasis reduced_basis(const IdealPresentation& gens, const OrderDescriptor& ord,
                            const Budget& budget = {});

/// Presentation of h(I): complete I in D under a degree-first well-order, then
/// homogenize every element. Throws BudgetExhausted on a truncated completion.
IdealPresentation homogenize_ideal(const std::vector<DOp>& gens, const Budget& budget = {});

/// e in union_j (apex_j + N^w).
bool exp_set_membership(const Exponent& e, const StandardBasis& b);

/// True when every S-pair of the family reduces to zero under ord.
bool is_s_pair_closed(const std::vector<DOp>& elements, const OrderDescriptor& ord,
                      std::size_t max_steps = kDefaultDivisionSteps);

/// Checks the reduced-minimal conditions (antichain apexes, monic, tails outside Exp)
/// together with S-pair closure, under ord. Returns an empty string on success,
/// otherwise a short reason.
std::string verify_reduced_minimal(const std::vector<DOp>& elements, const OrderDescriptor& ord,
                                   std::size_t max_steps = kDefaultDivisionSteps);

}  // namespace bsfan
