#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace metrize {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

using Rational = mpq_class;

// One numeric value in one of two arithmetic modes.
//
// Exact mode holds an arbitrary-precision rational: +, -, *, /, max and
// comparisons are error-free. Float mode holds a double together with a
// comparison tolerance cmp_tol: a == b means |a - b| <= cmp_tol and a < b
// requires b - a > cmp_tol, so threshold decisions stay reproducible under
// small roundoff. Mixing modes demotes the comparison or result to float.
// Arithmetic never silently switches an exact value to float; raising to a
// non-integer exponent does (see pow).
class Scalar {
public:
  static constexpr double default_tol = 1e-12;

  Scalar() : exact_(true), rat_(0) {}

  static Scalar exact(long num, long den = 1);
  static Scalar exact(Rational r);
  static Scalar real(double value, double cmp_tol = default_tol);

  bool is_exact() const { return exact_; }
  double value() const;
  const Rational& rat() const;  // exact mode only
  double cmp_tol() const { return tol_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;

  // x^e for e >= 0. An integer e keeps the arithmetic mode; a fractional e
  // forces float mode.
  Scalar pow(const Scalar& e) const;

  // Tolerance-aware comparisons (exact when both operands are exact).
  bool eq(const Scalar& o) const;
  bool lt(const Scalar& o) const;
  bool le(const Scalar& o) const { return lt(o) || eq(o); }
  bool gt(const Scalar& o) const { return o.lt(*this); }
  bool ge(const Scalar& o) const { return o.le(*this); }

  bool operator==(const Scalar& o) const { return eq(o); }
  bool operator!=(const Scalar& o) const { return !eq(o); }
  bool operator<(const Scalar& o) const { return lt(o); }
  bool operator<=(const Scalar& o) const { return le(o); }
  bool operator>(const Scalar& o) const { return gt(o); }
  bool operator>=(const Scalar& o) const { return ge(o); }

  // Tolerance-free ordering on the plain numeric value; used where a
  // deterministic total order matters (relaxation minima, max/min picking).
  static int value_cmp(const Scalar& a, const Scalar& b);
  static bool value_less(const Scalar& a, const Scalar& b) { return value_cmp(a, b) < 0; }
  static const Scalar& max(const Scalar& a, const Scalar& b) { return value_less(a, b) ? b : a; }
  static const Scalar& min(const Scalar& a, const Scalar& b) { return value_less(b, a) ? b : a; }

  bool is_zero() const;
  int value_sign() const;

  // "p/q" (or a plain integer) in exact mode, shortest round-trip decimal in
  // float mode.
  std::string str() const;

  // Accepts integers, "p/q" fractions and decimal/scientific literals.
  // Literals parse exactly unless as_float is set.
  static Scalar parse(std::string_view text, bool as_float = false,
                      double cmp_tol = default_tol);

private:
  bool exact_;
  Rational rat_;
  double flt_ = 0.0;
  double tol_ = default_tol;
};

// "p/q", plain integer, or decimal/scientific literal, converted exactly.
Rational rational_from_string(std::string_view text);
std::string rational_str(const Rational& r);

}  // namespace metrize
