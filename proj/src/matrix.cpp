#include "dissect/matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dissect {

bool is_rational_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  Integer n = numerator(r), d = denominator(r);
  Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return false;
  if (root) *root = Rational(sn, sd);
  return true;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  Integer num(text.substr(0, slash)), den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
  return Rational(num, den);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols)
    throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
  return r;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("shape mismatch in matrix*vector");
  Vec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transposed() const {
  Matrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rational Matrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::rref() const {
  Matrix m = *this;
  auto pivots = reduce(m);
  Matrix out(pivots.size(), cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = m.at(i, j);
  return out;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return reduce(m).size();
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = reduce(aug);
  if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
  Matrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
    os << "]" << (i + 1 < rows_ ? "\n" : "");
  }
  return os.str();
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), ambient_dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ambient_dim)
      throw std::invalid_argument("subspace generator has wrong length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m.at(i, j) = rows[i][j];
  }
  Matrix r = m.rref();
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vec v(ambient_dim);
    for (std::size_t j = 0; j < ambient_dim; ++j) v[j] = r.at(i, j);
    s.basis_.push_back(std::move(v));
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(unit_vec(ambient_dim, i));
  return span(ambient_dim, rows);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  Vec r = v;
  // Basis rows are in RREF, so one elimination pass per row suffices.
  for (const auto& b : basis_) {
    std::size_t lead = 0;
    while (lead < ambient_ && b[lead] == 0) ++lead;
    if (lead < ambient_ && r[lead] != 0) {
      Rational f = r[lead] / b[lead];
      for (std::size_t j = lead; j < ambient_; ++j) r[j] -= f * b[j];
    }
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::size_t rank(const Matrix& m) { return m.rank(); }

Subspace kernel(const Matrix& m) {
  Matrix r = m;
  auto pivots = reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  std::size_t n = a.ambient_dim(), ra = a.dim(), rb = b.dim();
  // Columns: coefficients on a's basis, then on b's; kernel rows give x with
  // x in span(a) and x in span(b).
  Matrix m(n, ra + rb);
  for (std::size_t j = 0; j < ra; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < rb; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, ra + j) = -b.basis()[j][i];
  Subspace k = kernel(m);
  std::vector<Vec> gens;
  for (const auto& coef : k.basis()) {
    Vec v(n);
    for (std::size_t j = 0; j < ra; ++j)
      if (coef[j] != 0)
        for (std::size_t i = 0; i < n; ++i) v[i] += coef[j] * a.basis()[j][i];
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

Subspace sum_span(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("sum_span: ambient dimension mismatch");
  std::vector<Vec> rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient_dim(), rows);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = reduce(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

Inertia signature(const Matrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
  Matrix a = m;
  std::size_t n = a.rows();
  Inertia res;
  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      // Bring a nonzero entry to the diagonal by a symmetric operation.
      std::size_t i = k;
      while (i < n && a.at(i, i) == 0) ++i;
      if (i < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(i, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, i));
      } else {
        std::size_t p = n, q = n;
        for (std::size_t r = k; r < n && p == n; ++r)
          for (std::size_t c = r + 1; c < n; ++c)
            if (a.at(r, c) != 0) { p = r; q = c; break; }
        if (p == n) break;  // remaining block is zero
        for (std::size_t j = 0; j < n; ++j) a.at(p, j) += a.at(q, j);
        for (std::size_t j = 0; j < n; ++j) a.at(j, p) += a.at(j, q);
        if (p != k) {
          for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
          for (std::size_t j = 0; j < n; ++j) std::swap(a.at(j, k), a.at(j, p));
        }
      }
    }
    Rational piv = a.at(k, k);
    if (piv > 0) ++res.pos; else ++res.neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rational f = a.at(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (std::size_t j = 0; j < n; ++j) a.at(j, i) -= f * a.at(j, k);
    }
  }
  res.null = n - res.pos - res.neg;
  return res;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Vec& a, const Rational& s) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

Vec primitive(const Vec& v) {
  Integer lcm = 1, gcd = 0;
  for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
  Vec r = scale(v, Rational(lcm));
  for (const auto& x : r) gcd = boost::multiprecision::gcd(gcd, numerator(x));
  if (gcd == 0) return r;
  r = scale(r, Rational(1, gcd));
  for (const auto& x : r) {
    if (x == 0) continue;
    if (x < 0) r = scale(r, Rational(-1));
    break;
  }
  return r;
}

}  // namespace dissect
