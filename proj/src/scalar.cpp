#include "metrize/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace metrize {

namespace {

double tol_of(const Scalar& a, const Scalar& b) {
  double t = Scalar::default_tol;
  if (!a.is_exact()) t = std::max(t, a.cmp_tol());
  if (!b.is_exact()) t = std::max(t, b.cmp_tol());
  return t;
}

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar Scalar::exact(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return exact(std::move(r));
}

Scalar Scalar::exact(Rational r) {
  Scalar s;
  s.exact_ = true;
  s.rat_ = std::move(r);
  return s;
}

Scalar Scalar::real(double value, double cmp_tol) {
  if (!std::isfinite(value)) throw Error("non-finite float value");
  if (cmp_tol < 0) throw Error("negative comparison tolerance");
  Scalar s;
  s.exact_ = false;
  s.flt_ = value;
  s.tol_ = cmp_tol;
  return s;
}

double Scalar::value() const { return exact_ ? rat_.get_d() : flt_; }

const Rational& Scalar::rat() const {
  if (!exact_) throw Error("rat() on a float-mode scalar");
  return rat_;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(Rational(rat_ + o.rat_));
  return real(value() + o.value(), tol_of(*this, o));
}

Scalar Scalar::operator-(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(Rational(rat_ - o.rat_));
  return real(value() - o.value(), tol_of(*this, o));
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (exact_ && o.exact_) return exact(Rational(rat_ * o.rat_));
  return real(value() * o.value(), tol_of(*this, o));
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (exact_ && o.exact_) {
    if (o.rat_ == 0) throw Error("division by exact zero");
    return exact(Rational(rat_ / o.rat_));
  }
  if (o.value() == 0.0) throw Error("division by zero");
  return real(value() / o.value(), tol_of(*this, o));
}

Scalar Scalar::pow(const Scalar& e) const {
  if (e.is_exact()) {
    const Rational& er = e.rat();
    if (er < 0) throw Error("negative exponent");
    if (er.get_den() == 1) {
      if (!er.get_num().fits_ulong_p()) throw Error("integer exponent too large");
      unsigned long k = er.get_num().get_ui();
      if (k == 0) return exact_ ? exact(1) : real(1.0, tol_);
      if (k == 1) return *this;
      if (exact_) {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), rat_.get_num().get_mpz_t(), k);
        mpz_pow_ui(den.get_mpz_t(), rat_.get_den().get_mpz_t(), k);
        return exact(Rational(num, den));
      }
      return real(std::pow(flt_, static_cast<double>(k)), tol_);
    }
  }
  double base = value();
  if (base < 0) throw Error("fractional power of a negative value");
  return real(std::pow(base, e.value()), tol_of(*this, e));
}

bool Scalar::eq(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ == o.rat_;
  return std::fabs(value() - o.value()) <= tol_of(*this, o);
}

bool Scalar::lt(const Scalar& o) const {
  if (exact_ && o.exact_) return rat_ < o.rat_;
  return o.value() - value() > tol_of(*this, o);
}

int Scalar::value_cmp(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) return mpq_cmp(a.rat_.get_mpq_t(), b.rat_.get_mpq_t());
  double x = a.value(), y = b.value();
  return x < y ? -1 : (x > y ? 1 : 0);
}

bool Scalar::is_zero() const { return eq(Scalar()); }

int Scalar::value_sign() const {
  if (exact_) return sgn(rat_);
  return flt_ < 0 ? -1 : (flt_ > 0 ? 1 : 0);
}

std::string Scalar::str() const {
  if (exact_) return rational_str(rat_);
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, flt_);
  if (ec != std::errc()) throw Error("float formatting failed");
  return std::string(buf, end);
}

Scalar Scalar::parse(std::string_view text, bool as_float, double cmp_tol) {
  if (as_float) {
    if (text.find('/') != std::string_view::npos)
      return real(rational_from_string(text).get_d(), cmp_tol);
    std::string tmp(text);
    char* end = nullptr;
    double v = std::strtod(tmp.c_str(), &end);
    if (end == tmp.c_str() || *end != '\0') throw Error("unparseable numeric literal: " + tmp);
    return real(v, cmp_tol);
  }
  return exact(rational_from_string(text));
}

Rational rational_from_string(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error("unparseable numeric literal: " + std::string(text));
  };

  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) return fail();
  std::string_view s = text.substr(b, e - b + 1);

  if (size_t slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    std::string_view nbody = num;
    if (!nbody.empty() && (nbody[0] == '+' || nbody[0] == '-')) nbody.remove_prefix(1);
    if (!is_digits(nbody) || !is_digits(den)) return fail();
    Rational r(std::string(num) + "/" + std::string(den));
    if (r.get_den() == 0) throw Error("rational with zero denominator: " + std::string(text));
    r.canonicalize();
    return r;
  }

  // Decimal or scientific literal, converted exactly.
  bool neg = false;
  std::string_view body = s;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    neg = body[0] == '-';
    body.remove_prefix(1);
  }
  long exp10 = 0;
  if (size_t ep = body.find_first_of("eE"); ep != std::string_view::npos) {
    std::string_view es = body.substr(ep + 1);
    body = body.substr(0, ep);
    std::string_view ebody = es;
    if (!ebody.empty() && (ebody[0] == '+' || ebody[0] == '-')) ebody.remove_prefix(1);
    if (!is_digits(ebody)) return fail();
    exp10 = std::stol(std::string(es));
  }
  std::string digits;
  long frac_digits = 0;
  if (size_t dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot), fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) return fail();
    if ((!ip.empty() && !is_digits(ip)) || (!fp.empty() && !is_digits(fp))) return fail();
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!is_digits(body)) return fail();
    digits = std::string(body);
  }
  if (digits.empty()) return fail();

  mpz_class mant(digits, 10);
  if (neg) mant = -mant;
  long net = exp10 - frac_digits;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(net >= 0 ? net : -net));
  Rational r = net >= 0 ? Rational(mant * scale) : Rational(mant, scale);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

}  // namespace metrize
