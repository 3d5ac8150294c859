#include "drg/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "drg/spectral.hpp"
#include "drg/surd.hpp"

namespace drg {

namespace {

double to_double(const FieldElement& x) {
  return x.is_rational() ? x.rational_value().get_d() : x.to_algebraic().to_double();
}

const FieldElement& shared_q(const QuadraticSurd& x, const QuadraticSurd& y) {
  if (x.b().is_zero()) return y.q();
  if (y.b().is_zero()) return x.q();
  if (x.q() != y.q()) throw std::logic_error("surds over different square roots");
  return x.q();
}

QuadraticSurd inverse(const QuadraticSurd& x) {
  const FieldElement n = x.norm();
  if (!n.is_zero()) return QuadraticSurd(x.a() / n, -x.b() / n, x.q());
  if (x.b().is_zero()) throw std::domain_error("division by zero");
  // a^2 = b^2 q with b != 0: sqrt(q) = |a/b| lies in the base field.
  const FieldElement v = x.a() + x.b() * (x.a() / x.b()).abs();
  if (v.is_zero()) throw std::domain_error("division by zero");
  return QuadraticSurd(v.inverse(), FieldElement(v.field(), Rational(0)), x.q());
}

QuadraticSurd lift(const FieldElement& x) { return QuadraticSurd(x); }

FieldElement field_value(const FieldPtr& f, long v) { return FieldElement(f, Rational(v)); }

// Roots of A z^2 + B z + C over the field of the coefficients.
RootPair root_pair(int index, const FieldElement& A, const FieldElement& B, const FieldElement& C) {
  const FieldElement disc = B * B - field_value(A.field(), 4) * A * C;
  if (disc.is_zero()) {
    throw OnGuidePoint(index, "theta is a guide point of triple " + std::to_string(index));
  }
  const FieldElement two_a = field_value(A.field(), 2) * A;
  const FieldElement center = -B / two_a;
  const FieldElement half = two_a.inverse();
  RootPair out{index, QuadraticSurd(center, half, disc), QuadraticSurd(center, -half, disc)};
  if (disc.sign() > 0 && center.sign() < 0) std::swap(out.first, out.second);
  return out;
}

FieldElement field_theta(const AlgebraicNumber& theta) { return FieldElement::generator(make_field(theta)); }

int compare_exact(const FieldElement& x, const FieldElement& y) { return compare(x, y); }

const FieldElement& max_of(const FieldElement& x, const FieldElement& y) { return compare(x, y) >= 0 ? x : y; }

// Sign of x - prod(factors), decided on rational enclosures before falling
// back to an exact product.
int compare_product(const AlgebraicNumber& x, const std::vector<AlgebraicNumber>& factors) {
  Rational width(1, 16);
  for (int round = 0; round < 12; ++round) {
    Rational lo(1), hi(1);
    for (const AlgebraicNumber& f : factors) {
      const AlgebraicNumber r = f.refined(width);
      const Rational c[4] = {lo * r.lower(), lo * r.upper(), hi * r.lower(), hi * r.upper()};
      lo = *std::min_element(c, c + 4);
      hi = *std::max_element(c, c + 4);
    }
    const AlgebraicNumber xr = x.refined(width);
    if (xr.upper() < lo) return -1;
    if (xr.lower() > hi) return 1;
    width /= 1 << 10;
  }
  AlgebraicNumber p(1);
  for (const AlgebraicNumber& f : factors) p = p * f;
  return compare(x, p);
}

}  // namespace

QuadraticSurd::QuadraticSurd(FieldElement a, FieldElement b, FieldElement q)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {}

QuadraticSurd::QuadraticSurd(const FieldElement& a)
    : a_(a), b_(a.field(), Rational(0)), q_(a.field(), Rational(0)) {}

bool QuadraticSurd::is_zero() const {
  if (b_.is_zero()) return a_.is_zero();
  if (q_.sign() < 0) return false;  // nonzero imaginary part
  return surd_sign(a_, b_, q_) == 0;
}

int QuadraticSurd::sign() const {
  if (!real()) throw std::domain_error("sign of a complex number");
  if (b_.is_zero()) return a_.sign();
  return surd_sign(a_, b_, q_);
}

QuadraticSurd QuadraticSurd::pow(unsigned n) const {
  QuadraticSurd result(FieldElement(a_.field(), Rational(1)), FieldElement(a_.field(), Rational(0)), q_);
  QuadraticSurd base = *this;
  while (n != 0) {
    if (n & 1U) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

AlgebraicNumber QuadraticSurd::to_algebraic() const {
  if (!real()) throw std::domain_error("complex number has no real algebraic form");
  if (b_.is_zero()) return a_.to_algebraic();
  if (a_.is_rational() && b_.is_rational() && q_.is_rational()) {
    return AlgebraicNumber::quadratic(a_.rational_value(), b_.rational_value(), q_.rational_value());
  }
  return a_.to_algebraic() + b_.to_algebraic() * q_.to_algebraic().sqrt();
}

double QuadraticSurd::real_part() const {
  if (b_.is_zero()) return to_double(a_);
  const double q = to_double(q_);
  return q < 0 ? to_double(a_) : to_double(a_) + to_double(b_) * std::sqrt(q);
}

double QuadraticSurd::imag_part() const {
  if (b_.is_zero()) return 0;
  const double q = to_double(q_);
  return q < 0 ? to_double(b_) * std::sqrt(-q) : 0;
}

std::string QuadraticSurd::str(int digits) const {
  if (real()) return to_algebraic().decimal(digits);
  std::ostringstream os;
  os.precision(digits);
  const double im = imag_part();
  os << real_part() << (im < 0 ? " - " : " + ") << std::fabs(im) << "i";
  return os.str();
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
  return QuadraticSurd(x.a() + y.a(), x.b() + y.b(), shared_q(x, y));
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
  return QuadraticSurd(x.a() - y.a(), x.b() - y.b(), shared_q(x, y));
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
  const FieldElement& q = shared_q(x, y);
  return QuadraticSurd(x.a() * y.a() + x.b() * y.b() * q, x.a() * y.b() + x.b() * y.a(), q);
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  shared_q(x, y);
  return x * inverse(y);
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign(); }

RootPair auxiliary_roots(const TridiagonalSequence& t, int i, const FieldElement& theta) {
  if (i < 1 || i > t.g()) throw std::out_of_range("auxiliary roots need 1 <= i <= g");
  const Triple& tr = t.base().at(i);
  const FieldPtr& f = theta.field();
  return root_pair(i, field_value(f, tr.beta), field_value(f, tr.alpha) - theta, field_value(f, tr.gamma));
}

RootPair auxiliary_roots(const TridiagonalSequence& t, int i, const AlgebraicNumber& theta) {
  return auxiliary_roots(t, i, field_theta(theta));
}

RootPair tail_roots(const TridiagonalSequence& t, int i, const FieldElement& theta) {
  if (i < 0 || i >= t.g()) throw std::out_of_range("tail roots need 0 <= i < g");
  const Triple& tr = t.base().at(t.g() - i);
  const FieldPtr& f = theta.field();
  return root_pair(t.g() - i, field_value(f, tr.gamma), field_value(f, tr.alpha) - theta, field_value(f, tr.beta));
}

RootPair tail_roots(const TridiagonalSequence& t, int i, const AlgebraicNumber& theta) {
  return tail_roots(t, i, field_theta(theta));
}

std::optional<double> TailNu::ratio() const {
  if (nu2.is_zero()) return std::nullopt;
  const QuadraticSurd r = nu1 / nu2;
  if (r.real()) return std::fabs(r.real_part());
  return std::hypot(r.real_part(), r.imag_part());
}

RunCoefficients run_coefficients(const TridiagonalSequence& t, const AlgebraicNumber& theta) {
  const FieldElement x = field_theta(theta);
  RunCoefficients out;
  out.u = standard_vector(t, x);
  out.reconstructs = true;
  const auto& u = out.u;

  for (int i = 1; i <= t.g(); ++i) {
    RunOmega run{auxiliary_roots(t, i, x), lift(u[0]), lift(u[0])};
    const QuadraticSurd& rho = run.roots.first;
    const QuadraticSurd& sigma = run.roots.second;
    const int s = t.s(i);
    const QuadraticSurd u0 = lift(u[static_cast<std::size_t>(s - 1)]);
    const QuadraticSurd u1 = lift(u[static_cast<std::size_t>(s)]);
    run.omega1 = (u1 - sigma * u0) / (rho - sigma);
    run.omega2 = (rho * u0 - u1) / (rho - sigma);
    QuadraticSurd pr = rho.pow(0), ps = pr;
    for (int j = 0; j <= t.ell(i) + 1; ++j) {
      const QuadraticSurd value = run.omega1 * pr + run.omega2 * ps;
      if (!equal(value, lift(u[static_cast<std::size_t>(s - 1 + j)]))) out.reconstructs = false;
      pr = pr * rho;
      ps = ps * sigma;
    }
    out.runs.push_back(std::move(run));
  }

  for (int i = 0; i < t.g(); ++i) {
    TailNu tail{i, tail_roots(t, i, x), lift(u[0]), lift(u[0])};
    const QuadraticSurd& xr = tail.roots.first;
    const QuadraticSurd& yr = tail.roots.second;
    const int s = t.s(t.g() - i + 1);
    const QuadraticSurd top = lift(u[static_cast<std::size_t>(s)]);
    const QuadraticSurd below = lift(u[static_cast<std::size_t>(s - 1)]);
    tail.nu1 = (below - yr * top) / (xr - yr);
    tail.nu2 = (xr * top - below) / (xr - yr);
    QuadraticSurd px = xr.pow(0), py = px;
    for (int j = 0; j <= t.ell(t.g() - i) + 1; ++j) {
      const QuadraticSurd value = tail.nu1 * px + tail.nu2 * py;
      if (!equal(value, lift(u[static_cast<std::size_t>(s - j)]))) out.reconstructs = false;
      px = px * xr;
      py = py * yr;
    }
    out.tails.push_back(std::move(tail));
  }
  return out;
}

SumDecomposition sum_split(const TridiagonalSequence& t, const AlgebraicNumber& theta, int head_end, int gap_end) {
  const int D = t.diameter();
  if (head_end < -1 || gap_end < head_end || gap_end > D) throw std::invalid_argument("bad sum split");
  const FieldElement x = field_theta(theta);
  const std::vector<FieldElement> u = standard_vector(t, x);
  const std::vector<Rational> k = kappa_counts(t.to_array());
  const FieldElement zero(x.field(), Rational(0));
  SumDecomposition out{head_end, gap_end, zero, zero, zero, zero};
  for (int i = 0; i <= D; ++i) {
    const std::size_t n = static_cast<std::size_t>(i);
    const FieldElement term = FieldElement(x.field(), k[n]) * u[n] * u[n];
    FieldElement& part = i <= head_end ? out.head : i <= gap_end ? out.gap : out.tail;
    part = part + term;
    out.total = out.total + term;
  }
  return out;
}

SumDecomposition sum_decomposition(const Quadruple& q, const WellPlacedInterval& w, const AlgebraicNumber& theta) {
  if (theta.compare(w.lo) < 0 || theta.compare(w.hi) > 0) throw std::invalid_argument("theta outside the interval");
  if (w.a < 1 || w.b < w.a) throw std::invalid_argument("interval has no a/b indices");
  const TridiagonalSequence t = q.tridiagonal();
  return sum_split(t, theta, t.s(w.a) - 2, t.s(w.b + 1));
}

AlgebraicNumber growth_ratio(const Quadruple& q, const WellPlacedInterval& w, const AlgebraicNumber& theta) {
  const TridiagonalSequence t = q.tridiagonal();
  const SumDecomposition parts = sum_decomposition(q, w, theta);
  const long len = len_gap(q, w).len;
  if (len == 0) throw std::domain_error("Len vanishes");
  const FieldElement x = field_theta(theta);
  AlgebraicNumber denom(len);
  for (int i = 1; i < w.a; ++i) {
    const Triple& tr = t.base().at(i);
    const QuadraticSurd rho = auxiliary_roots(t, i, x).first;
    const unsigned e = static_cast<unsigned>(t.ell(i));
    const QuadraticSurd base = lift(FieldElement(x.field(), ratio(tr.beta, tr.gamma))) * rho * rho;
    denom = denom * base.pow(e).to_algebraic();
  }
  return parts.total.to_algebraic() / denom;
}

bool InequalityReport::holds() const {
  for (const InequalityCheck& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

std::optional<InequalityCheck> InequalityReport::first_failure() const {
  for (const InequalityCheck& c : checks) {
    if (c.applicable && !c.holds) return c;
  }
  return std::nullopt;
}

int InequalityReport::applicable_count() const {
  int n = 0;
  for (const InequalityCheck& c : checks) n += c.applicable ? 1 : 0;
  return n;
}

InequalityReport verify_runs(const TridiagonalSequence& t, const WellPlacedInterval& w, const AlgebraicNumber& theta) {
  if (theta.compare(w.lo) < 0 || theta.compare(w.hi) > 0) throw std::invalid_argument("theta outside the interval");
  const int a = w.a;
  if (a < 1 || a > t.g()) throw std::invalid_argument("interval index a out of range");
  const FieldElement x = field_theta(theta);
  const std::vector<FieldElement> u = standard_vector(t, x);
  auto u_at = [&](int m) { return lift(u[static_cast<std::size_t>(m)]); };

  std::vector<RootPair> pairs;
  for (int i = 1; i <= a; ++i) pairs.push_back(auxiliary_roots(t, i, x));
  auto rho = [&](int i) -> const QuadraticSurd& { return pairs[static_cast<std::size_t>(i - 1)].first; };
  auto sigma = [&](int i) -> const QuadraticSurd& { return pairs[static_cast<std::size_t>(i - 1)].second; };
  auto is_real = [&](int i) { return pairs[static_cast<std::size_t>(i - 1)].real(); };
  const QuadraticSurd one = lift(FieldElement(x.field(), Rational(1)));

  InequalityReport out;
  for (int i = 1; i < a; ++i) {
    const bool ok = is_real(i) && sigma(i).sign() > 0 && compare(sigma(i), rho(i)) < 0 && compare(rho(i), one) < 0;
    out.checks.push_back({"roots-ordered", i, true, ok});
  }

  std::vector<AlgebraicNumber> factors;
  for (int i = 2; i <= a; ++i) {
    if (!is_real(i - 1)) {
      out.checks.push_back({"u-product", i, true, false});
      break;
    }
    factors.push_back(rho(i - 1).pow(static_cast<unsigned>(t.ell(i - 1))).to_algebraic());
    const bool ok = compare_product(u[static_cast<std::size_t>(t.s(i) - 1)].to_algebraic(), factors) > 0;
    out.checks.push_back({"u-product", i, true, ok});
  }

  std::vector<std::optional<QuadraticSurd>> omega1(static_cast<std::size_t>(a) + 1);
  for (int i = 1; i <= a; ++i) {
    if (!is_real(i)) {
      out.checks.push_back({"omega-signs", i, false, true});
      continue;
    }
    const int s = t.s(i);
    const QuadraticSurd o1 = (u_at(s) - sigma(i) * u_at(s - 1)) / (rho(i) - sigma(i));
    const QuadraticSurd o2 = (rho(i) * u_at(s - 1) - u_at(s)) / (rho(i) - sigma(i));
    omega1[static_cast<std::size_t>(i)] = o1;
    const bool ok = compare(-o1, o2) < 0 && o2.sign() < 0 && o1.sign() > 0;
    out.checks.push_back({"omega-signs", i, true, ok});
  }

  for (int i = 1; i < a; ++i) {
    if (!is_real(i) || !is_real(i + 1)) {
      out.checks.push_back({"rho-decreasing", i, false, true});
      continue;
    }
    out.checks.push_back({"rho-decreasing", i, true, rho(i + 1).to_algebraic() < rho(i).to_algebraic()});
  }
  for (int i = 1; i <= a; ++i) {
    if (!is_real(i)) {
      out.checks.push_back({"u-step", i, false, true});
      continue;
    }
    const int s = t.s(i);
    out.checks.push_back({"u-step", i, true, compare(u_at(s), rho(i) * u_at(s - 1)) > 0});
  }
  for (int i = 1; i <= a; ++i) {
    const auto& o1 = omega1[static_cast<std::size_t>(i)];
    if (!o1) {
      out.checks.push_back({"omega1-dominates", i, false, true});
      continue;
    }
    out.checks.push_back({"omega1-dominates", i, true, compare(*o1, u_at(t.s(i) - 1)) > 0});
  }
  return out;
}

bool NeighbourReport::holds() const {
  for (const NeighbourCheck& c : checks) {
    if (!c.holds()) return false;
  }
  return true;
}

NeighbourReport verify_neighbour_bounds(const TridiagonalSequence& t, const AlgebraicNumber& theta) {
  const Rational kappa(t.kappa());
  if (theta.compare(kappa) > 0 || theta.compare(-kappa) < 0) throw std::invalid_argument("|theta| exceeds kappa");
  const FieldElement x = field_theta(theta);
  const FieldPtr& f = x.field();
  const std::vector<FieldElement> u = standard_vector(t, x);
  const std::vector<Rational> k = kappa_counts(t.to_array());
  const FieldElement c1(f, 3 * kappa);
  const FieldElement c2(f, 9 * kappa * kappa * kappa * kappa);

  std::vector<FieldElement> mag, weight;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mag.push_back(u[i].abs());
    weight.push_back(FieldElement(f, k[i]) * u[i] * u[i]);
  }
  NeighbourReport out;
  for (int i = 1; i + 1 <= t.diameter(); ++i) {
    const std::size_t n = static_cast<std::size_t>(i);
    const FieldElement& prev = max_of(mag[n - 1], mag[n]);
    const FieldElement& next = max_of(mag[n], mag[n + 1]);
    const FieldElement& wprev = max_of(weight[n - 1], weight[n]);
    const FieldElement& wnext = max_of(weight[n], weight[n + 1]);
    NeighbourCheck c;
    c.i = i;
    c.ratio_lower = compare_exact(next, c1 * prev) <= 0;
    c.ratio_upper = compare_exact(prev, c1 * next) <= 0;
    c.weighted_lower = compare_exact(wnext, c2 * wprev) <= 0;
    c.weighted_upper = compare_exact(wprev, c2 * wnext) <= 0;
    out.checks.push_back(c);
  }
  return out;
}

std::vector<TraceRow> sum_trace(const Quadruple& q, int index, const std::vector<long>& hs,
                                const WellPlacedInterval& w, const AlgebraicNumber& theta) {
  std::vector<TraceRow> rows;
  for (long h : hs) {
    Quadruple v = q;
    const std::size_t n = static_cast<std::size_t>(index - 1);
    v.ell.at(n) = static_cast<int>(h);
    if (!v.in_delta(index)) v.L.at(n) = static_cast<int>(h);
    validate_quadruple(v);
    const SumDecomposition parts = sum_decomposition(v, w, theta);
    TraceRow row;
    row.h = h;
    row.measure = len_gap(v, w);
    row.head = to_double(parts.head);
    row.gap = to_double(parts.gap);
    row.tail = to_double(parts.tail);
    row.total = to_double(parts.total);
    row.ratio = growth_ratio(v, w, theta).to_double();
    rows.push_back(row);
  }
  return rows;
}

std::string trace_csv(const std::vector<TraceRow>& rows) {
  std::ostringstream os;
  os.precision(17);
  os << "h,Gap,Len,head,gap,tail,total,ratio\n";
  for (const TraceRow& r : rows) {
    os << r.h << ',' << r.measure.gap << ',' << r.measure.len << ',' << r.head << ',' << r.gap << ',' << r.tail << ','
       << r.total << ',' << r.ratio << '\n';
  }
  return os.str();
}

}  // namespace drg
