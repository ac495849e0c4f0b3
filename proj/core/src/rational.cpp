#include <bsfan/errors.hpp>
#include <bsfan/rational.hpp>

#include <cctype>

namespace bsfan {

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  const std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) throw ParseError("expected digits", i);
  if (i < text.size()) {
    if (text[i] != '/') throw ParseError("unexpected character in rational", i);
    ++i;
    const std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) throw ParseError("malformed denominator", i);
  }
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator", 0);
  r.canonicalize();
  return r;
}

}  // namespace bsfan
