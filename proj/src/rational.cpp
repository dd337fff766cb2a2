#include "solvsym/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>

namespace solvsym {

namespace {

bool parse_integer(const std::string& s, Integer* out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  }
  *out = Integer(s);
  return true;
}

}  // namespace

std::optional<Rational> try_parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Integer num;
  if (slash == std::string::npos) {
    if (!parse_integer(text, &num)) return std::nullopt;
    return Rational(num);
  }
  Integer den;
  if (!parse_integer(text.substr(0, slash), &num)) return std::nullopt;
  if (!parse_integer(text.substr(slash + 1), &den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  Integer n = numerator(x);
  Integer d = denominator(x);
  Integer sn = boost::multiprecision::sqrt(n);
  Integer sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

std::string to_string(const GaussianRational& x) {
  if (x.im == 0) return to_string(x.re);
  std::string im = to_string(x.im);
  std::string tail = (im[0] == '-') ? "-" + im.substr(1) + "*i" : "+" + im + "*i";
  if (x.re == 0) return (x.im < 0 ? "-" : "") + to_string(abs(x.im)) + "*i";
  return to_string(x.re) + tail;
}

std::optional<Rational> rationalize(double x, unsigned max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Best rational approximation with bounded denominator via continued
  // fractions, then validate against tol.
  double v = x;
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(v);
    if (fl > 9e17 || fl < -9e17) break;
    auto a = static_cast<std::int64_t>(fl);
    std::int64_t p2 = a * p1 + p0;
    std::int64_t q2 = a * q1 + q0;
    if (q2 > static_cast<std::int64_t>(max_den)) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) > tol) return std::nullopt;
  return Rational(Integer(p1), Integer(q1));
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace solvsym
