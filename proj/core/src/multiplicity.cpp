#include "drg/multiplicity.hpp"

#include <stdexcept>

namespace drg {

Poly christoffel_sum_poly(const TridiagonalSequence& t) {
  auto cp = companion_polys(t);
  auto k = kappa_counts(t.to_array());
  Poly S;
  for (std::size_t j = 0; j < cp.u.size(); ++j) S += cp.u[j] * cp.u[j] * k[j];
  return S;
}

ChristoffelTable christoffel(const TridiagonalSequence& t, const Spectrum& s) {
  ChristoffelTable tab;
  for (const Rational& kj : kappa_counts(t.to_array())) tab.vertex_count += kj;
  tab.sum_poly = christoffel_sum_poly(t);
  for (const auto& f : s.factors) tab.factors.push_back({f.poly, tab.sum_poly % f.poly});
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    const int fi = s.factor_of[i];
    const FactorCertificate& cert = tab.factors[static_cast<std::size_t>(fi)];
    ChristoffelEntry e;
    e.theta = s.eigenvalues[i];
    e.factor = fi;
    if (cert.constant()) {
      const Rational S = cert.reduced_sum.coeff(0);
      if (sgn(S) <= 0) throw std::logic_error("nonpositive Christoffel sum");
      e.rational = tab.vertex_count / S;
      e.weight = AlgebraicNumber(*e.rational);
    } else {
      FieldElement S(make_field(e.theta), cert.reduced_sum);
      if (S.sign() <= 0) throw std::logic_error("nonpositive Christoffel sum");
      e.weight = (FieldElement(S.field(), tab.vertex_count) / S).to_algebraic();
    }
    tab.entries.push_back(std::move(e));
  }
  return tab;
}

ChristoffelTable christoffel(const TridiagonalSequence& t) { return christoffel(t, spectrum(t)); }

AcResult check_ac(const TridiagonalSequence& t, const Spectrum& s) {
  AcResult r;
  const Poly S = christoffel_sum_poly(t);
  r.holds = true;
  for (const auto& f : s.factors) {
    FactorCertificate c{f.poly, S % f.poly};
    if (!c.constant()) r.holds = false;
    r.certificate.push_back(std::move(c));
  }
  return r;
}

AcResult check_ac(const TridiagonalSequence& t) { return check_ac(t, spectrum(t)); }

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::CombinatoriallyInvalid:
      return "combinatorially-invalid";
    case Feasibility::SpectrallyInfeasible:
      return "spectrally-infeasible";
    case Feasibility::Feasible:
      return "feasible";
  }
  return "?";
}

FeasibilityVerdict feasibility(const IntersectionArray& a) {
  FeasibilityVerdict v;
  v.array = a;
  v.combinatorial = validate_array(a);
  if (!v.combinatorial.valid()) {
    v.reason = v.combinatorial.violations.front().message;
    return v;
  }
  std::optional<TridiagonalSequence> t;
  try {
    t.emplace(tridiagonal_of(a));
  } catch (const InvalidSequence& e) {
    v.structural_error = e.what();
    v.reason = e.what();
    return v;
  }
  v.spectrum = spectrum(*t);
  v.table = christoffel(*t, *v.spectrum);
  v.ac = true;
  for (const auto& c : v.table->factors) v.ac = v.ac && c.constant();
  v.multiplicities_integral = true;
  for (const auto& e : v.table->entries) {
    if (!e.rational) {
      v.multiplicities_integral = false;
      if (v.reason.empty()) v.reason = "multiplicity of " + e.theta.str() + " is irrational (" + e.weight.decimal(6) + ")";
    } else if (!is_integer(*e.rational)) {
      v.multiplicities_integral = false;
      if (v.reason.empty()) v.reason = "multiplicity of " + e.theta.str() + " is " + to_string(*e.rational);
    }
  }
  if (!v.ac && v.reason.empty()) v.reason = "conjugate eigenvalues have different Christoffel numbers";
  v.status = (v.ac && v.multiplicities_integral) ? Feasibility::Feasible : Feasibility::SpectrallyInfeasible;
  return v;
}

}  // namespace drg
