#pragma once

#include <memory>
#include <string>

#include "drg/algebraic.hpp"

namespace drg {

// Q(theta) for a real algebraic theta, realised as Q[x]/(minpoly of theta).
// When theta is rational the field is Q itself (modulus x - theta).
class NumberField {
 public:
  explicit NumberField(AlgebraicNumber generator);

  const AlgebraicNumber& generator() const { return gen_; }
  const Poly& modulus() const { return gen_.minimal_polynomial(); }
  int degree() const { return modulus().degree(); }

 private:
  AlgebraicNumber gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const AlgebraicNumber& generator);

// Element of a NumberField, stored as a polynomial in the generator of degree
// below the field degree.
class FieldElement {
 public:
  FieldElement(FieldPtr field, const Rational& value);
  FieldElement(FieldPtr field, const Poly& rep);

  static FieldElement generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  const Poly& representative() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rational rational_value() const;  // requires is_rational()

  // Sign of the real value under the field's embedding.
  int sign() const { return field_->generator().sign_at(rep_); }
  // The same real number as a standalone algebraic number.
  AlgebraicNumber to_algebraic() const;
  // Characteristic polynomial of multiplication by this element.
  Poly charpoly() const;
  std::string decimal(int digits) const;

  FieldElement operator-() const { return FieldElement(field_, -rep_); }
  FieldElement inverse() const;
  FieldElement pow(unsigned n) const;
  FieldElement abs() const { return sign() < 0 ? -*this : *this; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return a.rep_ != b.rep_; }

 private:
  FieldPtr field_;
  Poly rep_;
};

// Exact order comparison of two elements of the same field.
int compare(const FieldElement& a, const FieldElement& b);

}  // namespace drg
