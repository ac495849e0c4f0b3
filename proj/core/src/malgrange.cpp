#include <bsfan/errors.hpp>
#include <bsfan/malgrange.hpp>

namespace bsfan {

DOp polynomial_operator(const Polynomial& f, RingSignature sig) {
  if (f.vars() != static_cast<std::size_t>(sig.n))
    throw SignatureMismatch("polynomial must be in x_1..x_n");
  DOp out(sig);
  for (const auto& [m, c] : f.terms()) {
    Exponent e(sig.width());
    for (int i = 0; i < sig.n; ++i) e[sig.x(i)] = m[static_cast<std::size_t>(i)];
    out.add_term(e, c);
  }
  return out;
}

IdealPresentation malgrange_ideal(const MalgrangeInput& input) {
  if (input.f.empty()) throw InvalidArgument("at least one function is required");
  const RingSignature sig = RingSignature::make(input.n, input.p(), Ring::weyl);
  for (const auto& f : input.f) {
    if (f.vars() != static_cast<std::size_t>(input.n))
      throw InvalidArgument("function variable count differs from n");
    if (f.is_zero()) throw InvalidArgument("functions must be nonzero");
  }
  IdealPresentation out;
  for (int j = 0; j < sig.p; ++j)
    out.generators.push_back(DOp::t(sig, j) - polynomial_operator(input.f[static_cast<std::size_t>(j)], sig));
  for (int i = 0; i < sig.n; ++i) {
    DOp g = DOp::dx(sig, i);
    for (int j = 0; j < sig.p; ++j) {
      const Polynomial d = input.f[static_cast<std::size_t>(j)].derivative(static_cast<std::size_t>(i));
      if (!d.is_zero()) g += polynomial_operator(d, sig) * DOp::dt(sig, j);
    }
    out.generators.push_back(std::move(g));
  }
  return out;
}

}  // namespace bsfan
