#include "chevalley/rational.hpp"

#include <cctype>

#include "chevalley/errors.hpp"

namespace chevalley {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  // mpz does not accept a leading '+'
  auto strip_plus = [](std::string_view v) {
    return std::string(v.front() == '+' ? v.substr(1) : v);
  };
  const mpz_class p(strip_plus(num), 10);
  const mpz_class q(strip_plus(den), 10);
  if (q == 0)
    throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

} // namespace chevalley
