#include "primdec/rational.hpp"

#include <cctype>

#include "primdec/error.hpp"

namespace primdec {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  bool digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw InvalidArgument("malformed rational: " + s);
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw InvalidArgument("malformed rational: " + s);
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational: " + s);
  if (q.get_den() == 0) throw InvalidArgument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace primdec
