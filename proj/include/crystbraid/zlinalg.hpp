#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cryst {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<BigVector>& rows, std::size_t cols);
  /// Rows of whitespace-separated integers, one row per line.
  static IntMatrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  BigVector row(std::size_t r) const;
  BigVector column(std::size_t c) const;

  IntMatrix transpose() const;
  /// Bareiss fraction-free elimination; square matrices only.
  BigInt determinant() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
BigVector operator*(const IntMatrix& a, std::span<const BigInt> x);

/// U M = H with U unimodular. H is in row echelon form, pivots positive and
/// entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};
HermiteForm hnf(const IntMatrix& m);

/// U M V = D, D diagonal with d_1 | d_2 | ... | d_r, all d_i > 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;
  BigVector invariants() const;
};
SmithForm snf(const IntMatrix& m);

/// Echelon basis (at most `cols` rows) of the lattice spanned by `rows`,
/// built by inserting one row at a time. Keeps huge relation sets small.
IntMatrix row_lattice_basis(const std::vector<BigVector>& rows, std::size_t cols);

/// One integer solution of M x = b with a basis of the integer kernel of M.
struct IntegerSolution {
  BigVector particular;
  std::vector<BigVector> kernel;
};
std::optional<IntegerSolution> solve_integer(const IntMatrix& m, std::span<const BigInt> b);

/// Abelian group Z^free_rank + sum Z/torsion_i from a relation matrix whose
/// rows are relators and columns generators.
struct Abelianization {
  std::size_t free_rank = 0;
  BigVector torsion;
  /// "Z^2 + Z_3"
  std::string to_string() const;
};
Abelianization abelianization(const IntMatrix& relations);

}  // namespace cryst
