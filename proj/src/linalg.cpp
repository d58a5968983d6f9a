#include "unmix/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace unmix {

RatMatrix::RatMatrix(std::vector<RatPoint> r) : rows(std::move(r)) {
  for (const auto& row : rows) {
    if (row.size() != rows[0].size())
      throw std::invalid_argument("RatMatrix: ragged rows");
  }
}

bool lex_less(const RatPoint& a, const RatPoint& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

Rat dot(const RatPoint& a, const RatPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatPoint add(const RatPoint& a, const RatPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: length mismatch");
  RatPoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatPoint sub(const RatPoint& a, const RatPoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: length mismatch");
  RatPoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool is_zero(const RatPoint& p) {
  return std::all_of(p.begin(), p.end(), [](const Rat& c) { return c.is_zero(); });
}

RatPoint int_point(const std::vector<long>& c) {
  RatPoint p(c.size());
  for (size_t i = 0; i < c.size(); ++i) p[i] = Rat(c[i]);
  return p;
}

std::string point_str(const RatPoint& p) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].str();
  os << ")";
  return os.str();
}

namespace {

// Clears denominators row by row; returns the integer matrix and the
// product of the row multipliers (det scales by it, rank is unchanged).
std::vector<std::vector<Int>> clear_rows(const RatMatrix& m, Int* scale) {
  std::vector<std::vector<Int>> out(m.row_count());
  if (scale) *scale = 1;
  for (size_t i = 0; i < m.row_count(); ++i) {
    Int l = 1;
    for (const Rat& c : m.rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    out[i].resize(m.col_count());
    for (size_t j = 0; j < m.col_count(); ++j) {
      Rat v = m.rows[i][j] * Rat(l);
      out[i][j] = v.num();
    }
    if (scale) *scale *= l;
  }
  return out;
}

}  // namespace

Int int_det(std::vector<std::vector<Int>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

int int_rank(std::vector<std::vector<Int>> a) {
  if (a.empty()) return 0;
  const size_t rows = a.size(), cols = a[0].size();
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<Int> int_kernel_vector(const std::vector<std::vector<Int>>& m) {
  if (m.empty()) throw std::invalid_argument("kernel: empty matrix");
  const size_t cols = m[0].size();
  // Fraction-free row echelon, remembering pivot columns.
  std::vector<std::vector<Int>> a = m;
  std::vector<size_t> pivot_col;
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < a.size(); ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivot_col.push_back(c);
    ++r;
  }
  if (r >= cols) throw std::invalid_argument("kernel: trivial kernel");

  // First free column, then rational back-substitution cleared to integers.
  size_t free_col = 0;
  {
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    while (free_col < cols && is_pivot[free_col]) ++free_col;
  }
  std::vector<Rat> x(cols);
  x[free_col] = Rat(1);
  for (size_t i = r; i-- > 0;) {
    size_t c = pivot_col[i];
    Rat s;
    for (size_t j = c + 1; j < cols; ++j)
      if (!x[j].is_zero()) s += Rat(a[i][j]) * x[j];
    x[c] = -s / Rat(a[i][c]);
  }
  Int l = 1;
  for (const Rat& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
  std::vector<Int> out(cols);
  for (size_t j = 0; j < cols; ++j) out[j] = (x[j] * Rat(l)).num();
  make_primitive(out);
  return out;
}

std::vector<int> affine_pivot_columns(const std::vector<RatPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_pivot_columns: empty point set");
  RatMatrix diffs;
  for (size_t i = 1; i < pts.size(); ++i) diffs.rows.push_back(sub(pts[i], pts[0]));
  if (diffs.rows.empty()) return {};
  auto a = clear_rows(diffs, nullptr);
  const size_t rows = a.size(), cols = a[0].size();
  std::vector<int> pivots;
  Int prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

Rat det(const RatMatrix& m) {
  if (m.row_count() != m.col_count())
    throw std::invalid_argument("det: matrix is not square");
  if (m.row_count() == 0) return Rat(1);
  Int scale;
  auto a = clear_rows(m, &scale);
  return Rat(int_det(std::move(a)), scale);
}

int rank(const RatMatrix& m) {
  if (m.row_count() == 0) return 0;
  auto a = clear_rows(m, nullptr);
  return int_rank(std::move(a));
}

int affine_dim(const std::vector<RatPoint>& pts) {
  if (pts.empty()) throw std::invalid_argument("affine_dim: empty point set");
  if (pts.size() == 1) return 0;
  RatMatrix diffs;
  diffs.rows.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) diffs.rows.push_back(sub(pts[i], pts[0]));
  return rank(diffs);
}

}  // namespace unmix
