#include "elemop/rational.hpp"

#include <cctype>
#include <ostream>

namespace elemop {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  const std::size_t slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = all_digits(text, start, text.size());
  } else {
    ok = all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  }
  if (!ok) throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
  mpq_class v(text);
  if (sgn(v.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
  v.canonicalize();
  return from_mpq(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace elemop
