#include "crystbraid/zlinalg.hpp"

#include <sstream>
#include <tuple>

#include "crystbraid/errors.hpp"

namespace cryst {

namespace {

BigInt abs_value(const BigInt& a) { return a < 0 ? BigInt(-a) : a; }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

/// (g, x, y) with x a + y b = g = gcd(a, b) >= 0.
std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_x = 1, x = 0, old_y = 0, y = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, BigInt(old_r - q * r));
    std::tie(old_x, x) = std::make_tuple(x, BigInt(old_x - q * x));
    std::tie(old_y, y) = std::make_tuple(y, BigInt(old_y - q * y));
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

/// rows (a, b) <- (p a + q b, r a + s b)
void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& p, const BigInt& q, const BigInt& r,
                  const BigInt& s) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BigInt va = m(a, c), vb = m(b, c);
    m(a, c) = p * va + q * vb;
    m(b, c) = r * va + s * vb;
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<BigVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::parse(std::string_view text) {
  std::vector<BigVector> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t cols = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    BigVector row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != cols) throw ParseError("matrix rows have different lengths");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return from_rows(rows, cols);
}

BigVector IntMatrix::row(std::size_t r) const {
  return BigVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

BigVector IntMatrix::column(std::size_t c) const {
  BigVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << '\n';
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shapes do not match for product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

BigVector operator*(const IntMatrix& a, std::span<const BigInt> x) {
  if (a.cols() != x.size()) throw DomainError("matrix/vector shapes do not match");
  BigVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm f{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = f.h;
  IntMatrix& u = f.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, c) == 0) continue;
      BigInt a = h(r, c), b = h(i, c);
      auto [g, x, y] = extended_gcd(a, b);
      // det [[x, y], [-b/g, a/g]] = (x a + y b) / g = 1
      BigInt p = -b / g, q = a / g;
      combine_rows(h, r, i, x, y, p, q);
      combine_rows(u, r, i, x, y, p, q);
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt k = floor_div(h(i, c), h(r, c));
      h.add_row_multiple(i, r, -k);
      u.add_row_multiple(i, r, -k);
    }
    ++r;
  }
  f.rank = r;
  return f;
}

BigVector SmithForm::invariants() const {
  BigVector out;
  for (std::size_t k = 0; k < rank; ++k) out.push_back(d(k, k));
  return out;
}

SmithForm snf(const IntMatrix& m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  IntMatrix& d = f.d;
  IntMatrix& u = f.u;
  IntMatrix& v = f.v;
  const std::size_t limit = std::min(d.rows(), d.cols());

  auto move_to_pivot = [&](std::size_t t, std::size_t i, std::size_t j) {
    d.swap_rows(t, i);
    u.swap_rows(t, i);
    d.swap_cols(t, j);
    v.swap_cols(t, j);
  };

  std::size_t t = 0;
  for (; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (!found || abs_value(d(i, j)) < abs_value(d(bi, bj)))) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    move_to_pivot(t, bi, bj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        BigInt q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        BigInt q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < d.rows(); ++i)
          if (d(i, t) != 0 && abs_value(d(i, t)) < abs_value(d(pi, pj))) pi = i, pj = t;
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(t, j) != 0 && abs_value(d(t, j)) < abs_value(d(pi, pj))) pi = t, pj = j;
        move_to_pivot(t, pi, pj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  f.rank = t;
  return f;
}

IntMatrix row_lattice_basis(const std::vector<BigVector>& rows, std::size_t cols) {
  // pivots[c] is the basis row whose leading column is c, if any
  std::vector<std::optional<BigVector>> pivots(cols);
  for (BigVector row : rows) {
    if (row.size() != cols) throw DomainError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c] == 0) continue;
      if (!pivots[c]) {
        pivots[c] = std::move(row);
        break;
      }
      BigVector& piv = *pivots[c];
      auto [g, x, y] = extended_gcd(piv[c], row[c]);
      const BigInt a = piv[c] / g, b = row[c] / g;
      BigVector top(cols), rest(cols);
      for (std::size_t k = c; k < cols; ++k) {
        top[k] = x * piv[k] + y * row[k];
        rest[k] = a * row[k] - b * piv[k];
      }
      piv = std::move(top);
      row = std::move(rest);
    }
  }
  std::vector<BigVector> basis;
  for (auto& p : pivots)
    if (p) basis.push_back(std::move(*p));
  return IntMatrix::from_rows(basis, cols);
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& m, std::span<const BigInt> b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side length does not match matrix rows");
  SmithForm s = snf(m);
  BigVector ub = s.u * b;
  BigVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.d(i, i) != 0) return std::nullopt;
      y[i] = ub[i] / s.d(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  IntegerSolution sol;
  sol.particular = s.v * std::span<const BigInt>(y);
  for (std::size_t c = s.rank; c < m.cols(); ++c) sol.kernel.push_back(s.v.column(c));
  return sol;
}

std::string Abelianization::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << '^' << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    os << (first ? "" : " + ") << "Z_" << t;
    first = false;
  }
  return first ? "0" : os.str();
}

Abelianization abelianization(const IntMatrix& relations) {
  SmithForm s = snf(relations);
  Abelianization ab;
  ab.free_rank = relations.cols() - s.rank;
  for (const auto& d : s.invariants())
    if (d > 1) ab.torsion.push_back(d);
  return ab;
}

}  // namespace cryst
