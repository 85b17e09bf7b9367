#pragma once

// Exact integer, rational and GF(2) linear algebra.
//
// Everything in the library that decides validity, orientation or homology
// goes through this header; there is no floating point anywhere.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcob {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<std::int64_t>;
using RationalVector = std::vector<Rational>;

/// Thrown when operand shapes do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Stacks the vectors as rows. All vectors must have length `cols`.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const;
  IntVector apply(const IntVector& x) const;  // entries must fit in int64

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::vector<std::vector<long long>> to_nested() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithDecomposition {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  std::size_t rank = 0;

  /// The nonzero diagonal entries d_1 | d_2 | ... | d_rank.
  std::vector<Integer> invariant_factors() const;
};

/// U * m * V = D with U, V unimodular and D in Smith normal form.
SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Invariant factors only (no transforms). Same values as
/// smith_normal_form(m).invariant_factors() but cheaper.
std::vector<Integer> invariant_factors(IntMatrix m);

/// True iff the vectors span a direct summand of Z^ambient_rank of
/// dimension equal to the number of vectors.
bool is_direct_summand(std::span<const IntVector> vectors, std::size_t ambient_rank);

/// Exact determinant by Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& m);
int det_sign(const IntMatrix& m);

/// Sign of a permutation of {0..m-1}; throws std::invalid_argument if `p`
/// is not a bijection.
int permutation_sign(std::span<const std::size_t> p);

// ---------------------------------------------------------------------------
// GF(2)

/// Bit-packed vector over GF(2).
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}
  static Gf2Vector from_ints(const IntVector& v);  // reduces mod 2
  static Gf2Vector ones(std::size_t size);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t first_set() const;

  Gf2Vector& operator^=(const Gf2Vector& other);
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  bool dot(const Gf2Vector& other) const;

  IntVector to_ints() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}
  static Gf2Matrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  Gf2Vector& row(std::size_t r) { return rows_[r]; }
  const Gf2Vector& row(std::size_t r) const { return rows_[r]; }
  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

  Gf2Vector apply(const Gf2Vector& x) const;
  std::size_t rank() const;

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

/// Solves A x = b over GF(2). The returned x is re-verified.
std::optional<Gf2Vector> solve_gf2(const Gf2Matrix& a, const Gf2Vector& b);

/// Row-echelon basis of a GF(2) subspace with canonical coset
/// representatives: reduce(v) is the unique representative of v + span.
class Gf2Subspace {
 public:
  explicit Gf2Subspace(std::size_t ambient) : ambient_(ambient) {}
  /// Returns false if v was already in the span.
  bool insert(Gf2Vector v);
  Gf2Vector reduce(Gf2Vector v) const;
  std::size_t dimension() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  /// Canonical representatives of all cosets, in a fixed order.
  std::vector<Gf2Vector> coset_representatives() const;

 private:
  std::size_t ambient_;
  std::vector<Gf2Vector> basis_;  // pivot of basis_[i] is pivots_[i]
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------------------
// Rationals

using RationalMatrix = std::vector<RationalVector>;  // row-major

std::size_t rank(RationalMatrix m);
int det_sign(RationalMatrix m);
/// Unique solution of the square system m x = b, or nullopt if singular.
std::optional<RationalVector> solve_unique(RationalMatrix m, RationalVector b);
/// Basis of {x : m x = 0}.
std::vector<RationalVector> null_space(RationalMatrix m, std::size_t cols);

Rational parse_rational(const std::string& text);  // "p/q" or "p"
std::string to_string(const Rational& r);           // "p/q", or "p" when integral

// ---------------------------------------------------------------------------
// Sparse integer matrices (chain complex boundaries)

/// Column-indexed sparse matrix used for boundary maps. Entries are small in
/// practice but stored exactly.
class SparseIntMatrix {
 public:
  struct Entry {
    std::uint32_t row;
    long long value;
  };

  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  void add(std::size_t row, std::size_t col, long long value);
  const std::vector<Entry>& column(std::size_t c) const { return columns_[c]; }

  /// Product this * other, as a sparse matrix.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const;

  /// Nonzero invariant factors (unit-pivot elimination followed by dense SNF
  /// on whatever remains).
  std::vector<Integer> invariant_factors() const;
  std::size_t rank_gf2() const;
  IntMatrix to_dense() const;

 private:
  std::size_t rows_;
  std::vector<std::vector<Entry>> columns_;  // sorted by row, no zeros
};

}  // namespace tcob
