#include "gfm/rational.hpp"

#include <cctype>
#include <ostream>

#include "gfm/errors.hpp"

namespace gfm {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

[[noreturn]] void malformed(std::string_view text) {
  throw ValidationError("malformed rational literal '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  value_ = mpq_class(numerator, 1) / mpq_class(denominator, 1);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) malformed(text);
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(num), 10), d);
  } else {
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      if (!all_digits(exp_text) || exp_text.size() > 6) malformed(text);
      exponent = std::stol(std::string(exp_text));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      int_part = s.substr(0, dot);
      frac_part = s.substr(dot + 1);
      if (!frac_part.empty() && !all_digits(frac_part)) malformed(text);
      if (int_part.empty() && frac_part.empty()) malformed(text);
      if (!int_part.empty() && !all_digits(int_part)) malformed(text);
    } else if (!all_digits(int_part)) {
      malformed(text);
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) {
      q = mpq_class(mantissa * pow10(static_cast<unsigned long>(exponent)));
    } else {
      q = mpq_class(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    }
  }
  q.canonicalize();
  if (negative) q = -q;
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (sgn(value_) == 0) return "0";
  mpq_class magnitude = abs(value_);

  // Find e with 10^e <= magnitude < 10^(e+1).
  long e = static_cast<long>(mpz_sizeinbase(mpz_class(magnitude.get_num()).get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mpz_class(magnitude.get_den()).get_mpz_t(), 10));
  auto scaled_by = [&](long k) {
    return k >= 0 ? mpq_class(magnitude * mpq_class(pow10(static_cast<unsigned long>(k))))
                  : mpq_class(magnitude / mpq_class(pow10(static_cast<unsigned long>(-k))));
  };
  while (scaled_by(-e) >= 10) ++e;
  while (scaled_by(-e) < 1) --e;

  // Round magnitude * 10^(significant-1-e) to an integer, half away from zero.
  const mpq_class scaled = scaled_by(significant - 1 - e);
  mpz_class digits = (scaled.get_num() * 2 + scaled.get_den()) / (scaled.get_den() * 2);
  if (digits == pow10(static_cast<unsigned long>(significant))) {
    digits /= 10;
    ++e;
  }
  std::string d = digits.get_str();

  std::string out = sgn(value_) < 0 ? "-" : "";
  if (e < -4 || e >= significant) {
    std::string mant = d.substr(0, 1);
    std::string rest = d.substr(1);
    while (!rest.empty() && rest.back() == '0') rest.pop_back();
    if (!rest.empty()) mant += "." + rest;
    const std::string exp_digits = std::to_string(e < 0 ? -e : e);
    out += mant + "e" + (e < 0 ? "-" : "+") + (exp_digits.size() < 2 ? "0" : "") + exp_digits;
    return out;
  }
  std::string int_part;
  std::string frac_part;
  if (e >= 0) {
    int_part = d.substr(0, static_cast<std::size_t>(e + 1));
    frac_part = d.substr(static_cast<std::size_t>(e + 1));
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + d;
  }
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

Rational Rational::pow(unsigned exponent) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(std::move(r));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gfm
