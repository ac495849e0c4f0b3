#pragma once

#include <bsfan/budget.hpp>
#include <bsfan/dop.hpp>
#include <bsfan/exponent.hpp>
#include <bsfan/order.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace bsfan {

class StandardBasis;

/// Delta_j = (e_j + N^w) minus the earlier cells; Delta-bar is the rest.
class StaircasePartition {
 public:
  explicit StaircasePartition(std::vector<Exponent> apexes) : apexes_(std::move(apexes)) {}

  const std::vector<Exponent>& apexes() const noexcept { return apexes_; }
  std::size_t size() const noexcept { return apexes_.size(); }

  /// Index j of the cell containing e, or nullopt for Delta-bar.
  std::optional<std::size_t> cell(const Exponent& e) const;
  bool in_cell(const Exponent& e, std::size_t j) const;
  bool in_complement(const Exponent& e) const { return !cell(e).has_value(); }

 private:
  std::vector<Exponent> apexes_;
};

/// Apexes are the privileged exponents under ord. Throws InvalidArgument on a zero divisor.
StaircasePartition build_partition(const std::vector<DOp>& divisors, const OrderDescriptor& ord);

struct DivisionResult {
  std::vector<DOp> quotients;
  DOp remainder;
  std::size_t step_count = 0;
  /// Set when the step budget ran out. The unprocessed part was moved to the
  /// remainder, so p = sum q_j Q_j + R still holds but R may violate (3).
  bool truncated = false;
};

/// Division of p by the divisors: the leading term is repeatedly sent to the
/// quotient of its cell or to the remainder. One step = one leading term.
DivisionResult divide(const DOp& p, const std::vector<DOp>& divisors,
                      const OrderDescriptor& ord, std::size_t max_steps = kDefaultDivisionSteps);

/// Remainder of the division by the basis elements under the basis order.
/// Throws BudgetExhausted when truncated.
DOp normal_form(const DOp& p, const StandardBasis& basis,
                std::size_t max_steps = kDefaultDivisionSteps);

}  // namespace bsfan
