#include "drg/array_model.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace drg {

std::string Triple::str() const {
  std::ostringstream os;
  os << "(" << gamma << "," << alpha << "," << beta << ")";
  return os.str();
}

long IntersectionArray::b_at(int i) const {
  if (i >= diameter()) return 0;
  return b.at(static_cast<std::size_t>(i));
}

long IntersectionArray::c_at(int i) const {
  if (i <= 0) return 0;
  return c.at(static_cast<std::size_t>(i - 1));
}

long IntersectionArray::a_at(int i) const { return valency() - b_at(i) - c_at(i); }

std::string IntersectionArray::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ";";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "}";
  return os.str();
}

bool operator<(const IntersectionArray& x, const IntersectionArray& y) {
  if (x.diameter() != y.diameter()) return x.diameter() < y.diameter();
  if (x.b != y.b) return x.b < y.b;
  return x.c < y.c;
}

IntersectionArray parse_array(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("array parse error at position " + std::to_string(pos) + ": " + what);
  };
  bool braced = !s.empty() && s.front() == '{';
  if (braced) {
    if (s.back() != '}') {
      pos = s.size();
      fail("missing closing brace");
    }
    s = s.substr(1, s.size() - 2);
    pos = 1;
  }
  std::size_t semi = s.find(';');
  if (semi == std::string::npos) fail("expected ';' separating b and c");
  if (s.find(';', semi + 1) != std::string::npos) fail("more than one ';'");

  auto read_list = [&](const std::string& part, std::size_t offset) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i <= part.size()) {
      std::size_t j = part.find(',', i);
      if (j == std::string::npos) j = part.size();
      std::string tok = part.substr(i, j - i);
      pos = offset + i + (braced ? 1 : 0);
      if (tok.empty()) fail("empty entry");
      for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("non-digit character '" + std::string(1, ch) + "'");
      }
      if (tok.size() > 12) fail("entry too large");
      out.push_back(std::stol(tok));
      i = j + 1;
    }
    return out;
  };
  IntersectionArray a;
  a.b = read_list(s.substr(0, semi), 0);
  a.c = read_list(s.substr(semi + 1), semi + 1);
  if (a.b.size() != a.c.size()) {
    pos = semi;
    fail("b has " + std::to_string(a.b.size()) + " entries but c has " + std::to_string(a.c.size()));
  }
  return a;
}

bool ValidationReport::has(std::string_view condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

std::vector<Rational> kappa_counts(const IntersectionArray& a) {
  std::vector<Rational> k{Rational(1)};
  for (int m = 1; m <= a.diameter(); ++m) {
    Rational next = k.back() * a.b_at(m - 1);
    if (a.c_at(m) == 0) {
      k.push_back(0);
      continue;
    }
    next /= a.c_at(m);
    k.push_back(next);
  }
  return k;
}

ValidationReport validate_array(const IntersectionArray& a) {
  if (a.b.empty() || a.c.empty()) throw ParseError("intersection array must be nonempty");
  if (a.b.size() != a.c.size()) throw ParseError("length mismatch between b and c");
  ValidationReport r;
  auto add = [&](const char* code, int index, const std::string& msg) { r.violations.push_back({code, index, msg}); };
  const int D = a.diameter();
  const long k = a.valency();
  for (int i = 0; i < D; ++i) {
    if (a.b_at(i) <= 0) add("b-positive", i, "b_" + std::to_string(i) + " must be positive");
  }
  if (D >= 2 && !(a.b_at(0) > a.b_at(1))) add("b-decreasing", 1, "b_0 > b_1 fails");
  for (int i = 1; i + 1 < D; ++i) {
    if (a.b_at(i) < a.b_at(i + 1)) add("b-decreasing", i + 1, "b_" + std::to_string(i) + " >= b_" + std::to_string(i + 1) + " fails");
  }
  if (a.c_at(1) != 1) add("c-first", 1, "c_1 must equal 1");
  for (int i = 1; i < D; ++i) {
    if (a.c_at(i) > a.c_at(i + 1)) add("c-nondecreasing", i + 1, "c_" + std::to_string(i) + " <= c_" + std::to_string(i + 1) + " fails");
  }
  if (a.c_at(D) > k) add("c-bound", D, "c_D <= k fails");
  for (int i = 0; i <= D; ++i) {
    if (a.a_at(i) < 0) add("a-nonnegative", i, "a_" + std::to_string(i) + " is negative");
  }
  for (int i = 1; i < D; ++i) {
    long bound = a.a_at(1) + 1 - std::min(a.b_at(i), a.c_at(i));
    if (a.a_at(i) < bound) add("lambda-bound", i, "a_" + std::to_string(i) + " >= a_1 + 1 - min(b_i, c_i) fails");
  }
  auto kc = kappa_counts(a);
  for (int i = 0; i <= D; ++i) {
    if (!is_integer(kc[static_cast<std::size_t>(i)]) || sgn(kc[static_cast<std::size_t>(i)]) <= 0) {
      add("kappa-integrality", i, "k_" + std::to_string(i) + " = " + to_string(kc[static_cast<std::size_t>(i)]) + " is not a positive integer");
    }
  }
  return r;
}

std::pair<int, int> head_tail(const IntersectionArray& a) {
  const int D = a.diameter();
  if (D <= 1) return {0, 0};
  const Triple first = a.triple(1);
  const Triple reflected{a.b_at(1), a.a_at(1), a.c_at(1)};
  int h = 0;
  for (int j = 1; j <= D - 1; ++j) {
    if (a.triple(j) == first) ++h;
  }
  int t = 0;
  for (int j = h + 1; j <= D - 1; ++j) {
    if (a.triple(j) == reflected) ++t;
  }
  return {h, t};
}

std::string GraphicalSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < triples.size(); ++i) out += (i ? "," : "") + triples[i].str();
  return out + ")";
}

void validate_graphical(const GraphicalSequence& G) {
  const long k = G.kappa;
  const long lam = G.lambda;
  const int g = G.g();
  if (g < 0) throw InvalidSequence("empty graphical sequence");
  if (k < 3 && g > 0) throw InvalidSequence("kappa must be at least 3");
  if (g > 0 && (lam < 0 || lam > k - 2)) throw InvalidSequence("lambda must satisfy 0 <= lambda <= kappa - 2");
  for (int i = 1; i <= g + 1; ++i) {
    for (int j = i + 1; j <= g + 1; ++j) {
      if (G.at(i) == G.at(j)) {
        throw InvalidSequence("terms must be distinct: triples " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  for (int i = 1; i <= g; ++i) {
    const Triple& t = G.at(i);
    bool ok = t.beta >= 1 && t.gamma >= 1 && t.alpha >= 0 && t.sum() == k && t.alpha >= lam + 1 - t.beta &&
              t.alpha >= lam + 1 - t.gamma;
    if (!ok) throw InvalidSequence("G0 fails at triple " + std::to_string(i) + " " + t.str());
  }
  if (g >= 1) {
    const Triple want{1, lam, k - lam - 1};
    if (G.at(1) != want) throw InvalidSequence("G1 fails: first triple must be " + want.str());
  }
  for (int i = 1; i <= g - 1; ++i) {
    if (G.at(i).beta < G.at(i + 1).beta) throw InvalidSequence("G2 fails: beta increases at " + std::to_string(i + 1));
  }
  for (int i = 1; i <= g; ++i) {
    if (G.at(i).gamma > G.at(i + 1).gamma) throw InvalidSequence("G2 fails: gamma decreases at " + std::to_string(i + 1));
  }
  const Triple& last = G.at(g + 1);
  if (last.beta != 0 || last.gamma + last.alpha != k || last.gamma < 1 || last.alpha < 0) {
    throw InvalidSequence("G3 fails: terminal triple " + last.str());
  }
}

GraphicalDecomposition graphical_of(const IntersectionArray& a) {
  const int D = a.diameter();
  GraphicalDecomposition out;
  out.sequence.kappa = a.valency();
  out.sequence.lambda = D >= 1 ? a.a_at(1) : 0;
  for (int m = 1; m <= D - 1; ++m) {
    Triple t = a.triple(m);
    if (!out.sequence.triples.empty() && out.sequence.triples.back() == t) {
      ++out.ell.back();
    } else {
      out.sequence.triples.push_back(t);
      out.ell.push_back(1);
    }
  }
  out.sequence.triples.push_back(a.triple(D));
  out.ell.push_back(1);
  return out;
}

TridiagonalSequence::TridiagonalSequence(GraphicalSequence g, std::vector<int> ell)
    : g_(std::move(g)), ell_(std::move(ell)) {
  validate_graphical(g_);
  if (static_cast<int>(ell_.size()) != g_.g() + 1) throw InvalidSequence("ell must have one entry per triple");
  for (int v : ell_) {
    if (v < 1) throw InvalidSequence("ell values must be positive");
  }
  if (ell_.back() != 1) throw InvalidSequence("ell(g+1) must equal 1");
  rows_.push_back({0, 0, g_.kappa});
  for (int i = 1; i <= g_.g() + 1; ++i) {
    for (int j = 0; j < ell_[static_cast<std::size_t>(i - 1)]; ++j) rows_.push_back(g_.at(i));
  }
}

int TridiagonalSequence::s(int i) const {
  int v = 1;
  for (int j = 1; j < i; ++j) v += ell(j);
  return v;
}

int TridiagonalSequence::head() const { return g() >= 1 ? ell(1) : 0; }

int TridiagonalSequence::tail() const {
  if (g() < 1) return 0;
  const Triple reflected{kappa() - lambda() - 1, lambda(), 1};
  int t = 0;
  for (int m = head() + 1; m <= diameter(); ++m) {
    if (row(m) == reflected) ++t;
  }
  return t;
}

int TridiagonalSequence::run_of(int m) const {
  int start = 1;
  for (int i = 1; i <= g() + 1; ++i) {
    int end = start + ell(i) - 1;
    if (m >= start && m <= end) return i;
    start = end + 1;
  }
  throw std::out_of_range("row index outside the sequence");
}

IntersectionArray TridiagonalSequence::to_array() const {
  IntersectionArray a;
  for (int m = 0; m < diameter(); ++m) a.b.push_back(row(m).beta);
  for (int m = 1; m <= diameter(); ++m) a.c.push_back(row(m).gamma);
  return a;
}

TridiagonalSequence build_tridiagonal(const GraphicalSequence& g, const std::vector<int>& ell) {
  return TridiagonalSequence(g, ell);
}

TridiagonalSequence tridiagonal_of(const IntersectionArray& a) {
  auto d = graphical_of(a);
  return TridiagonalSequence(std::move(d.sequence), std::move(d.ell));
}

bool Quadruple::in_delta(int i) const { return std::find(delta.begin(), delta.end(), i) != delta.end(); }

void validate_quadruple(const Quadruple& q) {
  validate_graphical(q.g);
  const int g = q.g.g();
  if (g < 1) throw InvalidSequence("quadruple needs at least one interior triple");
  if (q.delta.empty() || q.delta.front() != 1) throw InvalidSequence("Delta must contain the first triple");
  for (std::size_t p = 0; p < q.delta.size(); ++p) {
    if (q.delta[p] < 1 || q.delta[p] > g) throw InvalidSequence("Delta must consist of interior triples");
    if (p > 0 && q.delta[p] <= q.delta[p - 1]) throw InvalidSequence("Delta indices must increase");
  }
  if (static_cast<int>(q.ell.size()) != g + 1 || static_cast<int>(q.L.size()) != g + 1) {
    throw InvalidSequence("ell and L need one entry per triple");
  }
  if (q.ell.back() != 1) throw InvalidSequence("ell(g+1) must equal 1");
  for (int i = 1; i <= g + 1; ++i) {
    if (q.ell_at(i) < 1) throw InvalidSequence("ell values must be positive");
    if (!q.in_delta(i) && q.L_at(i) != q.ell_at(i)) {
      throw InvalidSequence("L(" + std::to_string(i) + ") must equal ell(" + std::to_string(i) + ") off Delta");
    }
  }
}

}  // namespace drg
