#include "dissect/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dissect {

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= s;
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Polynomial rem = *this;
  std::vector<Rational> q;
  if (degree() >= d.degree()) q.assign(degree() - d.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    Rational f = rem.lead() / d.lead();
    std::size_t shift = rem.degree() - d.degree();
    q[shift] = f;
    std::vector<Rational> sc(shift + d.c_.size());
    for (std::size_t i = 0; i < d.c_.size(); ++i) sc[shift + i] = d.c_[i] * f;
    rem = rem - Polynomial(std::move(sc));
  }
  return {Polynomial(std::move(q)), rem};
}

bool Polynomial::divides(const Polynomial& p) const {
  return p.divmod(*this).second.is_zero();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(Integer(i));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead());
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Matrix Polynomial::eval(const Matrix& m) const {
  if (m.rows() != m.cols()) throw std::invalid_argument("polynomial of non-square matrix");
  Matrix r(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < m.rows(); ++i) r.at(i, i) += *it;
  }
  return r;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational a = coeff(k);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rational abs_a = a < 0 ? Rational(-a) : a;
    if (abs_a != 1 || k == 0) os << to_string(abs_a);
    if (k > 0) os << "t";
    if (k > 1) os << "^" << k;
    first = false;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Polynomial char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: non-square matrix");
  std::size_t n = m.rows();
  // Faddeev-LeVerrier recursion.
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  Matrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    c[n - k] = -mk.trace() / Rational(Integer(k));
    if (k < n) {
      Matrix next = mk;
      for (std::size_t i = 0; i < n; ++i) next.at(i, i) += c[n - k];
      mk = m * next;
    }
  }
  return Polynomial(std::move(c));
}

Polynomial min_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("min_poly: non-square matrix");
  std::size_t n = m.rows(), nn = n * n;
  auto flatten = [nn, n](const Matrix& a) {
    Vec v(nn);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
    return v;
  };
  std::vector<Vec> powers{flatten(Matrix::identity(n))};
  Matrix mk = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mk * m;
    Vec target = flatten(mk);
    Matrix sys(nn, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < nn; ++i) sys.at(i, j) = powers[j][i];
    if (auto x = solve(sys, target)) {
      std::vector<Rational> c(k + 1);
      for (std::size_t j = 0; j < k; ++j) c[j] = -(*x)[j];
      c[k] = 1;
      return Polynomial(std::move(c));
    }
    powers.push_back(std::move(target));
  }
  throw std::logic_error("min_poly: no annihilating polynomial found");  // unreachable
}

bool squarefree(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
  return gcd(p, p.derivative()).degree() <= 0;
}

namespace {

// Scale to integer coefficients with content 1 and positive lead.
Polynomial primitive_part(const Polynomial& p, Rational* unit = nullptr) {
  Integer lcm = 1;
  for (const auto& a : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(a));
  Integer g = 0;
  for (const auto& a : p.coeffs()) g = boost::multiprecision::gcd(g, numerator(a * Rational(lcm)));
  if (g == 0) g = 1;
  Rational f(lcm, g);
  if (p.lead() * f < 0) f = -f;
  if (unit) *unit = Rational(1) / f;
  return p * f;
}

std::vector<Integer> divisors(Integer v) {
  if (v < 0) v = -v;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

// Rational roots via the rational root theorem; p integer primitive.
std::vector<Rational> rational_roots(const Polynomial& p) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  if (p.coeff(0) == 0) {
    roots.push_back(0);
    return roots;
  }
  for (const Integer& a : divisors(numerator(p.coeff(0))))
    for (const Integer& b : divisors(numerator(p.lead()))) {
      for (int s : {1, -1}) {
        Rational r(s * a, b);
        if (p.eval(r) == 0) {
          roots.push_back(r);
          return roots;  // caller divides out and re-runs
        }
      }
    }
  return roots;
}

// Lagrange interpolation through integer points.
Polynomial interpolate(const std::vector<Integer>& xs, const std::vector<Rational>& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term = Polynomial::constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      term = term * Polynomial::linear_root(Rational(xs[j])) *
             (Rational(1) / Rational(xs[i] - xs[j]));
    }
    result = result + term;
  }
  return result;
}

bool has_integer_coeffs(const Polynomial& p) {
  for (const auto& a : p.coeffs())
    if (denominator(a) != 1) return false;
  return true;
}

// Kronecker's method on a squarefree primitive integer polynomial with no
// rational roots. Complete over Q; cost grows quickly with the degree, which
// stays small for the polynomials this project meets.
void kronecker_factor(const Polynomial& p, std::vector<Polynomial>& out) {
  int d = p.degree();
  if (d <= 2) {  // no rational roots => irreducible for degree <= 3 handled by caller splits
    out.push_back(p);
    return;
  }
  std::vector<Integer> xs;
  for (Integer x = 0; static_cast<int>(xs.size()) < d / 2 + 1;
       x = (x > 0 ? Integer(-x) : Integer(1 - x)))
    xs.push_back(x);
  for (int k = 2; k <= d / 2; ++k) {
    std::vector<Integer> pts(xs.begin(), xs.begin() + k + 1);
    std::vector<std::vector<Integer>> cand(k + 1);
    for (int i = 0; i <= k; ++i) {
      Integer v = numerator(p.eval(Rational(pts[i])));
      for (const Integer& dv : divisors(v)) {
        cand[i].push_back(dv);
        if (i > 0) cand[i].push_back(-dv);  // sign of the first value fixed: g vs -g
      }
    }
    std::vector<std::size_t> idx(k + 1, 0);
    while (true) {
      std::vector<Rational> ys(k + 1);
      for (int i = 0; i <= k; ++i) ys[i] = Rational(cand[i][idx[i]]);
      Polynomial g = interpolate(pts, ys);
      if (g.degree() >= 1 && has_integer_coeffs(g) && g.divides(p)) {
        Polynomial g1 = primitive_part(g);
        Polynomial rest = primitive_part(p.divmod(g1).first);
        kronecker_factor(g1, out);
        kronecker_factor(rest, out);
        return;
      }
      int pos = k;
      while (pos >= 0 && ++idx[pos] == cand[pos].size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  out.push_back(p);
}

// Squarefree factors of an integer primitive polynomial (Yun's algorithm):
// returns (factor, multiplicity) pairs.
std::vector<std::pair<Polynomial, unsigned>> yun(const Polynomial& f) {
  std::vector<std::pair<Polynomial, unsigned>> parts;
  Polynomial g = gcd(f, f.derivative());
  if (g.degree() == 0) {
    parts.emplace_back(f.monic(), 1);
    return parts;
  }
  Polynomial c = f.monic().divmod(g).first;
  Polynomial d = f.monic().derivative().divmod(g).first - c.derivative();
  unsigned i = 1;
  while (c.degree() > 0) {
    Polynomial a = gcd(c, d);
    if (a.degree() > 0) parts.emplace_back(a, i);
    c = c.divmod(a).first;
    d = d.divmod(a).first - c.derivative();
    ++i;
  }
  return parts;
}

}  // namespace

Factorization factor_rational(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
  Factorization fac;
  fac.unit = p.lead();
  if (p.degree() == 0) return fac;
  for (auto& [sqf, mult] : yun(primitive_part(p))) {
    Polynomial rest = primitive_part(sqf);
    // Strip rational roots, then hand the rest to Kronecker.
    while (rest.degree() >= 1) {
      auto roots = rational_roots(rest);
      if (roots.empty()) break;
      Polynomial lin = primitive_part(Polynomial::linear_root(roots[0]));
      fac.factors.emplace_back(lin, mult);
      rest = primitive_part(rest.divmod(lin).first);
    }
    if (rest.degree() >= 1) {
      std::vector<Polynomial> irr;
      kronecker_factor(rest, irr);
      for (auto& f : irr) fac.factors.emplace_back(f, mult);
    }
  }
  // Restore the unit so that unit * prod factors^mult == p exactly.
  Polynomial prod = Polynomial::constant(1);
  for (auto& [f, m] : fac.factors)
    for (unsigned i = 0; i < m; ++i) prod = prod * f;
  fac.unit = p.lead() / prod.lead();
  std::sort(fac.factors.begin(), fac.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.coeffs() < b.first.coeffs();
  });
  return fac;
}

namespace {

int sign_at(const Polynomial& p, const ExtRational& x) {
  if (p.is_zero()) return 0;
  switch (x.kind) {
    case ExtRational::Finite: return sign_of(p.eval(x.value));
    case ExtRational::PosInf: return sign_of(p.lead());
    case ExtRational::NegInf: return sign_of(p.lead()) * (p.degree() % 2 == 0 ? 1 : -1);
  }
  return 0;
}

}  // namespace

std::size_t sturm_count(const Polynomial& p, const ExtRational& a, const ExtRational& b) {
  if (!squarefree(p)) throw std::invalid_argument("sturm_count: polynomial not squarefree");
  std::vector<Polynomial> chain{p, p.derivative()};
  while (chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(r * Rational(-1));
  }
  auto variations = [&](const ExtRational& x) {
    std::size_t v = 0;
    int prev = 0;
    for (const auto& q : chain) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  std::size_t va = variations(a), vb = variations(b);
  return va >= vb ? va - vb : 0;
}

Polynomial root_square_poly(const Polynomial& p) {
  if (p.is_zero()) return p;
  // p(t) p(-t) = e(t^2)^2 - t^2 o(t^2)^2, the resultant of p(t) and s - t^2
  // up to a unit.
  std::vector<Rational> ec, oc;
  for (int k = 0; k <= p.degree(); ++k)
    (k % 2 == 0 ? ec : oc).push_back(p.coeff(k));
  Polynomial e{std::vector<Rational>(ec)}, o{std::vector<Rational>(oc)};
  Polynomial q = e * e - Polynomial({0, 1}) * o * o;
  if (q.lead() < 0) q = q * Rational(-1);
  return q;
}

}  // namespace dissect
