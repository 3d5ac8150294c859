#include "drg/rational.hpp"

#include <cctype>

namespace drg {

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  auto valid_integer = [](std::string_view t) {
    std::size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den)) {
      throw ParseError("malformed rational literal '" + s + "'");
    }
    Integer d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(Integer(strip_plus(num)), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!valid_integer(whole) || (!frac.empty() && !valid_integer(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+'))) {
      throw ParseError("malformed decimal literal '" + s + "'");
    }
    Integer scale = power(Integer(10), frac.size());
    Integer numer = Integer(whole) * scale + (frac.empty() ? Integer(0) : Integer(frac));
    Rational q(numer, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  if (!valid_integer(s)) throw ParseError("malformed rational literal '" + s + "'");
  return Rational(Integer(strip_plus(s)));
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = power(Integer(10), static_cast<unsigned long>(digits));
  Rational scaled = abs_value(q) * scale;
  // round half up on the magnitude
  Integer rounded = floor_of(scaled + Rational(1, 2));
  std::string body = rounded.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  bool zero = rounded == 0;
  return (sgn(q) < 0 && !zero ? "-" : "") + body;
}

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational power(const Rational& base, unsigned long exponent) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rational_sqrt(const Rational& q, Rational& root) {
  if (sgn(q) < 0) return false;
  if (!is_perfect_square(q.get_num()) || !is_perfect_square(q.get_den())) return false;
  root = Rational(isqrt(q.get_num()), isqrt(q.get_den()));
  root.canonicalize();
  return true;
}

}  // namespace drg
