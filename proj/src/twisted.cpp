#include "quonlab/twisted.hpp"

#include <algorithm>

namespace quonlab {

Monomial Monomial::q(int k, int l, int exp) {
  Monomial m;
  if (k == l) throw std::invalid_argument("Monomial: Q_{k,k} is not an indeterminate");
  if (exp != 0) m.factors_.push_back({{k, l}, exp});
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin(), b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) out.factors_.push_back({a->first, e});
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::twisted(const Permutation& p) const {
  Monomial out;
  for (const auto& [kl, e] : factors_) {
    out.factors_.push_back({{p(kl.first), p(kl.second)}, e});
  }
  std::sort(out.factors_.begin(), out.factors_.end());
  return out;
}

LaurentPoly LaurentPoly::scalar(long long c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(Monomial(), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, long long c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

LaurentPoly LaurentPoly::q_curly(int k, int l) {
  return monomial(Monomial::q(k, l).times(Monomial::q(l, k)));
}

LaurentPoly LaurentPoly::q_set(const std::vector<int>& T) {
  Monomial m;
  for (int k : T) {
    for (int l : T) {
      if (k != l) m = m.times(Monomial::q(k, l));
    }
  }
  return monomial(std::move(m));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1.times(m2);
      auto [it, inserted] = out.terms_.emplace(std::move(m), c1 * c2);
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

LaurentPoly LaurentPoly::twisted(const Permutation& p) const {
  LaurentPoly out;
  for (const auto& [m, c] : terms_) {
    auto [it, inserted] = out.terms_.emplace(m.twisted(p), c);
    if (!inserted) it->second += c;
  }
  return out;
}

TwistedElement TwistedElement::unit(int degree) {
  TwistedElement e(degree);
  e.terms_.emplace(Permutation::identity(degree), LaurentPoly::unit());
  return e;
}

TwistedElement TwistedElement::bare(const Permutation& p) {
  TwistedElement e(p.degree());
  e.terms_.emplace(p, LaurentPoly::unit());
  return e;
}

void TwistedElement::add_term(const Permutation& p, const LaurentPoly& c) {
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TwistedElement& TwistedElement::operator+=(const TwistedElement& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("TwistedElement: degree mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

TwistedElement& TwistedElement::operator-=(const TwistedElement& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("TwistedElement: degree mismatch");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

TwistedElement TwistedElement::operator*(const TwistedElement& o) const {
  if (degree_ != o.degree_) throw std::invalid_argument("TwistedElement: degree mismatch");
  TwistedElement out(degree_);
  for (const auto& [p, cp] : terms_) {
    for (const auto& [s, cs] : o.terms_) {
      // (cp p)(cs s) = cp (p . cs) (p s): the permutation twists the
      // indeterminate subscripts as it moves past the coefficient
      out.add_term(p.compose(s), cp * cs.twisted(p));
    }
  }
  return out;
}

TwistedElement TwistedElement::operator-() const {
  TwistedElement out(degree_);
  for (const auto& [p, c] : terms_) out.terms_.emplace(p, -c);
  return out;
}

TwistedElement TwistedElement::scaled(const LaurentPoly& c) const {
  TwistedElement out(degree_);
  for (const auto& [p, pc] : terms_) {
    LaurentPoly v = c * pc;
    if (!v.is_zero()) out.terms_.emplace(p, std::move(v));
  }
  return out;
}

TwistedElement lift(const Permutation& p) {
  Monomial m;
  for (const auto& [r, s] : inversions(p)) m = m.times(Monomial::q(p(r), p(s)));
  TwistedElement e(p.degree());
  e.add_term(p, LaurentPoly::monomial(std::move(m)));
  return e;
}

TwistedElement anti_lift(const Permutation& p) {
  Monomial m;
  for (const auto& [r, s] : inversions(p)) m = m.times(Monomial::q(p(r), p(s), -1));
  TwistedElement e(p.degree());
  e.add_term(p, LaurentPoly::monomial(std::move(m)));
  return e;
}

namespace zagier {

TwistedElement alpha(int n) {
  check_size_cap(n, "zagier::alpha");
  TwistedElement out(n);
  for (const Permutation& p : johnson_trotter(n)) out += lift(p);
  return out;
}

TwistedElement alpha_comp(const std::vector<int>& parts) {
  int n = 0;
  for (int b : parts) n += b;
  TwistedElement out(n);
  for (const Permutation& p : young_subgroup(parts)) out += lift(p);
  return out;
}

TwistedElement beta(int n) {
  TwistedElement out(n);
  for (int k = 0; k < n; ++k) out += lift(cycle(k, n - 1, n));
  return out;
}

TwistedElement gamma(int n) {
  TwistedElement out = TwistedElement::unit(n);
  for (int k = 0; k + 1 < n; ++k) {
    out = out * (TwistedElement::unit(n) - lift(cycle(k, n - 1, n)));
  }
  return out;
}

TwistedElement delta(int n) {
  TwistedElement tn1 = lift(adjacent(n - 2, n));
  TwistedElement out = TwistedElement::unit(n);
  for (int k = 0; k + 1 < n; ++k) {
    out = out * (TwistedElement::unit(n) - tn1 * lift(cycle(k, n - 1, n)));
  }
  return out;
}

TwistedElement gamma_bar(int n) {
  TwistedElement out = TwistedElement::unit(n);
  for (int l = 1; l < n; ++l) {
    out = out * (TwistedElement::unit(n) - lift(cycle(0, l, n)));
  }
  return out;
}

TwistedElement xi(int n) {
  TwistedElement out(n);
  for (int k = 0; k + 1 < n; ++k) {
    LaurentPoly prod = LaurentPoly::unit();
    for (int l = k + 1; l < n; ++l) prod = prod * LaurentPoly::q_curly(k, l);
    LaurentPoly coeff = LaurentPoly::unit() - prod;
    out += lift(cycle(0, k, n)).scaled(coeff);
  }
  return out;
}

TwistedElement eta(int n) {
  TwistedElement out(n);
  for (int k = 1; k < n; ++k) {
    LaurentPoly pref = LaurentPoly::unit();
    for (int l = k + 1; l < n; ++l) pref = pref * LaurentPoly::q_curly(k, l);
    LaurentPoly sub = LaurentPoly::unit();
    for (int l = 0; l < k; ++l) sub = sub * LaurentPoly::q_curly(k, l);
    LaurentPoly coeff = pref * (LaurentPoly::unit() - sub);
    out += anti_lift(cycle(k, n - 1, n).inverse()).scaled(coeff);
  }
  return out;
}

TwistedElement gamma_alternating_sum(int n) {
  TwistedElement out(n);
  for (const Permutation& p : johnson_trotter(n)) {
    int kpos = 0;
    while (p(kpos) != n - 1) ++kpos;
    bool shape = true;
    for (int i = 0; i < kpos; ++i) shape = shape && p(i) < p(i + 1);
    for (int i = kpos; i + 1 < n; ++i) shape = shape && p(i) > p(i + 1);
    if (!shape) continue;
    int k = kpos + 1;  // 1-based position of the maximum
    long long sign = ((n - k) % 2 == 0) ? 1 : -1;
    out += lift(p.inverse()).scaled(LaurentPoly::scalar(sign));
  }
  return out;
}

GammaBarInverse gamma_bar_inverse_closed(int n) {
  GammaBarInverse out;
  out.numerator = TwistedElement(n);
  for (const Permutation& p : johnson_trotter(n)) {
    TwistedElement term = lift(p);
    for (int i = 0; i + 1 < n; ++i) {
      if (p(i) > p(i + 1)) {
        std::vector<int> T(i + 1);
        for (int t = 0; t <= i; ++t) T[t] = t;
        TwistedElement f(n);
        f.add_term(Permutation::identity(n), LaurentPoly::q_set(T));
        term = term * f;  // descent factor multiplies on the right, twisted
      }
    }
    out.numerator += term;
  }
  out.denominator = LaurentPoly::unit();
  for (int i = 2; i <= n; ++i) {
    std::vector<int> T(i);
    for (int t = 0; t < i; ++t) T[t] = t;
    out.denominator = out.denominator * (LaurentPoly::unit() - LaurentPoly::q_set(T));
  }
  return out;
}

}  // namespace zagier

TwistedElement make_zagier(ZagierKind kind, int n) {
  switch (kind) {
    case ZagierKind::Alpha: return zagier::alpha(n);
    case ZagierKind::Beta: return zagier::beta(n);
    case ZagierKind::Gamma: return zagier::gamma(n);
    case ZagierKind::Delta: return zagier::delta(n);
    case ZagierKind::GammaBar: return zagier::gamma_bar(n);
    case ZagierKind::Xi: return zagier::xi(n);
    case ZagierKind::Eta: return zagier::eta(n);
  }
  throw std::invalid_argument("make_zagier: unknown kind");
}

Cplx specialize_uniform(const LaurentPoly& poly, Cplx q) {
  Cplx out(0.0, 0.0);
  for (const auto& [m, c] : poly.terms()) {
    int deg = 0;
    for (const auto& [kl, e] : m.factors()) deg += e;
    out += static_cast<double>(c) * std::pow(q, deg);
  }
  return out;
}

}  // namespace quonlab
