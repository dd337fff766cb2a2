#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace solvsym {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator; zero is canonically 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& x) { return numerator(x); }
inline Integer rational_den(const Rational& x) { return denominator(x); }

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

/// Parses "p" or "p/q" (optional leading sign, arbitrary precision).
/// Returns nullopt on malformed input.
std::optional<Rational> try_parse_rational(const std::string& text);

inline Rational parse_rational(const std::string& text) {
  auto r = try_parse_rational(text);
  if (!r) throw std::invalid_argument("malformed rational literal: '" + text + "'");
  return *r;
}

/// Exact square root of a nonnegative rational, when the result is again
/// rational; nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& x);

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    Rational n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::invalid_argument("division by zero GaussianRational");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string to_string(const GaussianRational& x);

// Uniform scalar helpers so exterior-algebra code can be generic over the
// ground field.
inline Rational conj(const Rational& x) { return x; }
inline GaussianRational conj(const GaussianRational& x) { return {x.re, -x.im}; }

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const GaussianRational& x) { return x.is_zero(); }

inline GaussianRational complexify(const Rational& x) { return GaussianRational(x); }

template <typename T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_complex = false;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool is_complex = true;
  static GaussianRational zero() { return GaussianRational(Rational(0)); }
  static GaussianRational one() { return GaussianRational(Rational(1)); }
};

/// Nearest rational with denominator <= max_den (Stern-Brocot walk);
/// nullopt if none lies within tol of x.
std::optional<Rational> rationalize(double x, unsigned max_den, double tol);

double to_double(const Rational& x);

}  // namespace solvsym
