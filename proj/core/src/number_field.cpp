#include "drg/number_field.hpp"

#include <stdexcept>

namespace drg {

NumberField::NumberField(AlgebraicNumber generator) : gen_(std::move(generator)) {}

FieldPtr make_field(const AlgebraicNumber& generator) { return std::make_shared<const NumberField>(generator); }

FieldElement::FieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)), rep_(value) {}

FieldElement::FieldElement(FieldPtr field, const Poly& rep) : field_(std::move(field)) {
  rep_ = rep % field_->modulus();
}

FieldElement FieldElement::generator(const FieldPtr& field) { return FieldElement(field, Poly::x()); }

Rational FieldElement::rational_value() const {
  if (!is_rational()) throw std::logic_error("field element is not rational");
  return rep_.coeff(0);
}

namespace {

void check_same(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() && a.field()->modulus() != b.field()->modulus()) {
    throw std::invalid_argument("field elements from different fields");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.rep_ + b.rep_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.rep_ - b.rep_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same(a, b);
  return FieldElement(a.field_, a.rep_ * b.rep_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (is_rational()) return FieldElement(field_, 1 / rep_.coeff(0));
  Poly s, t;
  Poly g = extended_gcd(rep_, field_->modulus(), s, t);
  if (g.degree() != 0) throw std::logic_error("field modulus is reducible");
  return FieldElement(field_, s);
}

FieldElement FieldElement::pow(unsigned n) const {
  FieldElement result(field_, Rational(1));
  FieldElement base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Poly FieldElement::charpoly() const {
  // prod over conjugates (x - e(theta_i)) = Res_y(f(y), x - e(y)) for monic f
  const Poly& f = field_->modulus();
  const int n = f.degree();
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= n; ++k) {
    xs.emplace_back(k);
    ys.push_back(resultant(f, Poly(Rational(k)) - rep_));
  }
  return interpolate(xs, ys);
}

AlgebraicNumber FieldElement::to_algebraic() const {
  if (is_rational()) return AlgebraicNumber(rational_value());
  Poly c = charpoly();
  SturmChain sc(c);
  AlgebraicNumber theta = field_->generator();
  Rational width = theta.interval().width();
  while (true) {
    AlgebraicNumber t = theta.refined(width);
    Interval e = evaluate_on(rep_, t.interval());
    if (sc.count_closed(e.lo, e.hi) == 1) return AlgebraicNumber::root_in(sc.base(), e.lo, e.hi);
    width = t.interval().width() / 2;
  }
}

std::string FieldElement::decimal(int digits) const { return to_algebraic().decimal(digits); }

int compare(const FieldElement& a, const FieldElement& b) { return (a - b).sign(); }

}  // namespace drg
