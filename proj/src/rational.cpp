#include "phframe/rational.hpp"

#include "phframe/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace phframe {

std::string to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Int parse_int(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw ValidationError("not a rational number: \"" + std::string(text) + "\"");
  }
  Int d = parse_int(den);
  if (sgn(d) == 0) throw ValidationError("zero denominator in \"" + std::string(text) + "\"");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  Rat n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
  Rat r = (re * o.re + im * o.im) / n;
  Rat i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

std::string to_string(const GaussRat& x) {
  if (x.is_real()) return x.re.get_str();
  return "(" + x.re.get_str() + (sgn(x.im) < 0 ? "-" : "+") + Rat(abs(x.im)).get_str() + "i)";
}

std::ostream& operator<<(std::ostream& os, const GaussRat& x) { return os << to_string(x); }

}  // namespace phframe
