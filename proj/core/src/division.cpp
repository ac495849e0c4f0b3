#include <bsfan/division.hpp>
#include <bsfan/errors.hpp>
#include <bsfan/standard_basis.hpp>

#include <map>

namespace bsfan {

std::optional<std::size_t> StaircasePartition::cell(const Exponent& e) const {
  for (std::size_t j = 0; j < apexes_.size(); ++j)
    if (apexes_[j].divides(e)) return j;
  return std::nullopt;
}

bool StaircasePartition::in_cell(const Exponent& e, std::size_t j) const {
  auto c = cell(e);
  return c && *c == j;
}

StaircasePartition build_partition(const std::vector<DOp>& divisors, const OrderDescriptor& ord) {
  std::vector<Exponent> apexes;
  apexes.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw InvalidArgument("zero divisor");
    apexes.push_back(privileged_exponent(d, ord));
  }
  return StaircasePartition(std::move(apexes));
}

DivisionResult divide(const DOp& p, const std::vector<DOp>& divisors, const OrderDescriptor& ord,
                      std::size_t max_steps) {
  for (const auto& d : divisors)
    if (!(d.signature() == p.signature())) throw SignatureMismatch("divisor lives in another ring");
  const StaircasePartition part = build_partition(divisors, ord);
  std::vector<Rational> lead;
  lead.reserve(divisors.size());
  for (std::size_t j = 0; j < divisors.size(); ++j)
    lead.push_back(divisors[j].coefficient(part.apexes()[j]));

  DivisionResult res{std::vector<DOp>(divisors.size(), DOp(p.signature())), DOp(p.signature()), 0,
                     false};
  std::map<Exponent, Rational, OrderLess> work(OrderLess{&ord});
  for (const auto& [e, c] : p.terms()) work.emplace(e, c);

  auto accumulate = [&](const Exponent& e, const Rational& c) {
    auto [it, inserted] = work.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) work.erase(it);
    }
  };

  while (!work.empty()) {
    if (res.step_count >= max_steps) {
      res.truncated = true;
      for (const auto& [e, c] : work) res.remainder.add_term(e, c);
      break;
    }
    ++res.step_count;
    auto top = std::prev(work.end());
    const Exponent e = top->first;
    const Rational c = top->second;
    auto j = part.cell(e);
    if (!j) {
      res.remainder.add_term(e, c);
      work.erase(top);
      continue;
    }
    const Exponent shift = e - part.apexes()[*j];
    const Rational q = c / lead[*j];
    res.quotients[*j].add_term(shift, q);
    const DOp prod = multiply_monomial(shift, q, divisors[*j]);
    for (const auto& [pe, pc] : prod.terms()) accumulate(pe, -pc);
  }
  return res;
}

DOp normal_form(const DOp& p, const StandardBasis& basis, std::size_t max_steps) {
  auto r = divide(p, basis.elements(), basis.order(), max_steps);
  if (r.truncated) throw BudgetExhausted("normal form ran out of division steps");
  return std::move(r.remainder);
}

}  // namespace bsfan
