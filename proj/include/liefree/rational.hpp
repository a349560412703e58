#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace liefree {

// Exact arithmetic over Q. Values are kept canonical by the backing type:
// denominator > 0 and gcd(|num|, den) = 1.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

/// Build p/q, normalizing the sign of q. Throws on q = 0.
inline Rational make_rational(Int p, Int q) {
  if (q == 0) throw std::invalid_argument("rational: zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  return Rational(p, q);
}

/// Renders "p/q", or "p" when the denominator is 1.
inline std::string rat_to_string(const Rational& r) {
  if (rat_den(r) == 1) return rat_num(r).str();
  return rat_num(r).str() + "/" + rat_den(r).str();
}

/// Parses "p" or "p/q" with optional sign on either part. Throws on malformed
/// input or zero denominator.
inline Rational rat_from_string(const std::string& s) {
  auto parse_int = [](const std::string& t) -> Int {
    if (t.empty()) throw std::invalid_argument("rational: empty integer part");
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("rational: sign without digits");
    for (std::size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9')
        throw std::invalid_argument("rational: bad character in '" + t + "'");
    Int v(t.substr(i));
    return t[0] == '-' ? Int(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

}  // namespace liefree
