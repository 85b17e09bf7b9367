#include "toric_cobordism/exactalg.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

namespace tcob {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionError("vector of length " + std::to_string(rows[r].size()) +
                           " in ambient rank " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  IntVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc.convert_to<std::int64_t>();
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::vector<std::vector<long long>> IntMatrix::to_nested() const {
  std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c).convert_to<long long>();
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Elementary operations mirrored onto the optional transforms: row ops act on
// u from the left, column ops on v from the right.
struct SnfState {
  IntMatrix& d;
  IntMatrix* u;
  IntMatrix* v;

  void swap_rows(std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    if (u) u->swap_rows(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    if (v) v->swap_cols(a, b);
  }
  // row[target] -= q * row[source]
  void sub_row(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (d(source, c) != 0) d(target, c) -= q * d(source, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c)
        if ((*u)(source, c) != 0) (*u)(target, c) -= q * (*u)(source, c);
  }
  // col[target] -= q * col[source]
  void sub_col(std::size_t target, std::size_t source, const Integer& q) {
    for (std::size_t r = 0; r < d.rows(); ++r)
      if (d(r, source) != 0) d(r, target) -= q * d(r, source);
    if (v)
      for (std::size_t r = 0; r < v->rows(); ++r)
        if ((*v)(r, source) != 0) (*v)(r, target) -= q * (*v)(r, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < d.cols(); ++c) d(r, c) = -d(r, c);
    if (u)
      for (std::size_t c = 0; c < u->cols(); ++c) (*u)(r, c) = -(*u)(r, c);
  }
};

std::size_t run_snf(SnfState s) {
  IntMatrix& d = s.d;
  const std::size_t m = d.rows();
  const std::size_t n = d.cols();
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot on the smallest nonzero absolute value of the trailing block.
    auto place_min_pivot = [&]() -> bool {
      std::size_t br = m, bc = n;
      Integer best = 0;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c) {
          const Integer& x = d(r, c);
          if (x == 0) continue;
          Integer a = abs(x);
          if (br == m || a < best) {
            best = a;
            br = r;
            bc = c;
            if (best == 1) goto found;
          }
        }
    found:
      if (br == m) return false;
      s.swap_rows(t, br);
      s.swap_cols(t, bc);
      return true;
    };

    if (!place_min_pivot()) break;

    for (;;) {
      bool dirty = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (d(r, t) == 0) continue;
        Integer q = d(r, t) / d(t, t);
        s.sub_row(r, t, q);
        if (d(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (d(t, c) == 0) continue;
        Integer q = d(t, c) / d(t, t);
        s.sub_col(c, t, q);
        if (d(t, c) != 0) dirty = true;
      }
      if (dirty) {
        place_min_pivot();
        continue;
      }
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t r = t + 1; r < m && divides; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (d(r, c) % d(t, t) != 0) {
            s.sub_row(t, r, Integer(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) s.negate_row(t);
  }
  return t;
}

}  // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  if (m.empty()) throw DimensionError("smith_normal_form of an empty matrix");
  SmithDecomposition out{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()), 0};
  out.rank = run_snf(SnfState{out.d, &out.u, &out.v});
  return out;
}

std::vector<Integer> invariant_factors(IntMatrix m) {
  if (m.empty()) return {};
  std::size_t r = run_snf(SnfState{m, nullptr, nullptr});
  std::vector<Integer> out;
  out.reserve(r);
  for (std::size_t i = 0; i < r; ++i) out.push_back(m(i, i));
  return out;
}

bool is_direct_summand(std::span<const IntVector> vectors, std::size_t ambient_rank) {
  IntMatrix m = IntMatrix::from_rows(vectors, ambient_rank);
  if (vectors.empty()) return true;
  if (vectors.size() > ambient_rank) return false;
  auto factors = invariant_factors(std::move(m));
  if (factors.size() != vectors.size()) return false;
  return std::all_of(factors.begin(), factors.end(), [](const Integer& x) { return x == 1; });
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

int det_sign(const IntMatrix& m) {
  Integer d = determinant(m);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

int permutation_sign(std::span<const std::size_t> p) {
  const std::size_t m = p.size();
  std::vector<bool> seen(m, false);
  for (std::size_t x : p) {
    if (x >= m || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
  std::fill(seen.begin(), seen.end(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return (m - cycles) % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// GF(2)

Gf2Vector Gf2Vector::from_ints(const IntVector& v) {
  Gf2Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) out.set(i, true);
  return out;
}

Gf2Vector Gf2Vector::ones(std::size_t size) {
  Gf2Vector out(size);
  for (std::size_t i = 0; i < size; ++i) out.set(i, true);
  return out;
}

void Gf2Vector::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (value)
    words_[i / 64] |= bit;
  else
    words_[i / 64] &= ~bit;
}

bool Gf2Vector::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Gf2Vector::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Gf2Vector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

Gf2Vector& Gf2Vector::operator^=(const Gf2Vector& other) {
  if (other.size_ != size_) throw DimensionError("GF(2) vector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  if (other.size_ != size_) throw DimensionError("GF(2) vector size mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) % 2 == 1;
}

IntVector Gf2Vector::to_ints() const {
  IntVector out(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

Gf2Matrix Gf2Matrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  Gf2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("GF(2) row length mismatch");
    m.rows_[r] = Gf2Vector::from_ints(rows[r]);
  }
  return m;
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
  if (x.size() != cols_) throw DimensionError("GF(2) matrix-vector size mismatch");
  Gf2Vector y(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) y.set(r, rows_[r].dot(x));
  return y;
}

std::size_t Gf2Matrix::rank() const {
  std::vector<Gf2Vector> work = rows_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < work.size(); ++col) {
    std::size_t p = rank;
    while (p < work.size() && !work[p].get(col)) ++p;
    if (p == work.size()) continue;
    std::swap(work[rank], work[p]);
    for (std::size_t r = rank + 1; r < work.size(); ++r)
      if (work[r].get(col)) work[r] ^= work[rank];
    ++rank;
  }
  return rank;
}

std::optional<Gf2Vector> solve_gf2(const Gf2Matrix& a, const Gf2Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_gf2: right-hand side length mismatch");
  const std::size_t n = a.cols();
  // Augmented rows [A | b].
  std::vector<Gf2Vector> work;
  work.reserve(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Gf2Vector row(n + 1);
    for (std::size_t c = 0; c < n; ++c) row.set(c, a.get(r, c));
    row.set(n, b.get(r));
    work.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < work.size(); ++col) {
    std::size_t p = rank;
    while (p < work.size() && !work[p].get(col)) ++p;
    if (p == work.size()) continue;
    std::swap(work[rank], work[p]);
    for (std::size_t r = 0; r < work.size(); ++r)
      if (r != rank && work[r].get(col)) work[r] ^= work[rank];
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < work.size(); ++r)
    if (work[r].get(n)) return std::nullopt;
  Gf2Vector x(n);
  for (std::size_t i = 0; i < rank; ++i) x.set(pivot_cols[i], work[i].get(n));
  if (!(a.apply(x) == b)) throw std::logic_error("solve_gf2: solution failed re-verification");
  return x;
}

bool Gf2Subspace::insert(Gf2Vector v) {
  v = reduce(std::move(v));
  std::size_t p = v.first_set();
  if (p == v.size()) return false;
  // Keep the basis fully reduced so that reduce() yields canonical forms.
  for (auto& b : basis_)
    if (b.get(p)) b ^= v;
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

Gf2Vector Gf2Subspace::reduce(Gf2Vector v) const {
  if (v.size() != ambient_) throw DimensionError("GF(2) subspace ambient mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (v.get(pivots_[i])) v ^= basis_[i];
  return v;
}

std::vector<Gf2Vector> Gf2Subspace::coset_representatives() const {
  std::vector<std::size_t> free_coords;
  for (std::size_t c = 0; c < ambient_; ++c)
    if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free_coords.push_back(c);
  const std::size_t count = std::size_t{1} << free_coords.size();
  std::vector<Gf2Vector> reps;
  reps.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Gf2Vector v(ambient_);
    for (std::size_t i = 0; i < free_coords.size(); ++i)
      if ((mask >> i) & 1u) v.set(free_coords[i], true);
    reps.push_back(std::move(v));
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Rationals

namespace {

// Reduces m in place to row echelon form; returns pivot columns.
std::vector<std::size_t> echelon(RationalMatrix& m, std::size_t cols, int* swap_sign = nullptr) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      if (swap_sign) *swap_sign = -*swap_sign;
    }
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational q = m[i][c] / m[r][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= q * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  return echelon(m, m.front().size()).size();
}

int det_sign(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DimensionError("det_sign of a non-square rational matrix");
  if (n == 0) return 1;
  int sign = 1;
  auto pivots = echelon(m, n, &sign);
  if (pivots.size() < n) return 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m[i][i] < 0) sign = -sign;
  return sign;
}

std::optional<RationalVector> solve_unique(RationalMatrix m, RationalVector b) {
  const std::size_t n = m.size();
  if (b.size() != n) throw DimensionError("solve_unique: right-hand side length mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DimensionError("solve_unique: non-square system");
    m[i].push_back(b[i]);
  }
  auto pivots = echelon(m, n);
  if (pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = m[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i][j] * x[j];
    x[i] = acc / m[i][i];
  }
  return x;
}

std::vector<RationalVector> null_space(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw DimensionError("null_space: row length mismatch");
  auto pivots = echelon(m, cols);
  // Back-substitute to reduced form.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t pc = pivots[i];
    Rational lead = m[i][pc];
    for (std::size_t j = pc; j < cols; ++j) m[i][j] /= lead;
    for (std::size_t k = 0; k < i; ++k) {
      if (m[k][pc] == 0) continue;
      Rational q = m[k][pc];
      for (std::size_t j = pc; j < cols; ++j) m[k][j] -= q * m[i][j];
    }
  }
  std::vector<RationalVector> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    RationalVector v(cols, Rational(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer p(text.substr(0, slash));
    Integer q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& r) {
  auto num = boost::multiprecision::numerator(r);
  auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

// ---------------------------------------------------------------------------
// SparseIntMatrix

void SparseIntMatrix::add(std::size_t row, std::size_t col, long long value) {
  if (row >= rows_ || col >= columns_.size()) throw DimensionError("sparse entry out of range");
  if (value == 0) return;
  auto& column = columns_[col];
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != column.end() && it->row == row) {
    it->value += value;
    if (it->value == 0) column.erase(it);
  } else {
    column.insert(it, Entry{static_cast<std::uint32_t>(row), value});
  }
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols() != other.rows()) throw DimensionError("sparse product size mismatch");
  SparseIntMatrix out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) {
    std::map<std::uint32_t, long long> acc;
    for (const Entry& e : other.column(j))
      for (const Entry& f : columns_[e.row]) acc[f.row] += e.value * f.value;
    for (auto [r, v] : acc)
      if (v != 0) out.columns_[j].push_back(Entry{r, v});
  }
  return out;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const Entry& e : columns_[c]) m(e.row, c) = e.value;
  return m;
}

std::size_t SparseIntMatrix::rank_gf2() const {
  Gf2Matrix m(columns_.size(), rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const Entry& e : columns_[c])
      if (e.value % 2 != 0) m.set(c, e.row, true);
  return m.rank();
}

std::vector<Integer> SparseIntMatrix::invariant_factors() const {
  // Row-major working copy plus a column -> rows index.
  std::vector<std::map<std::uint32_t, Integer>> rows(rows_);
  std::vector<std::set<std::uint32_t>> col_rows(columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const Entry& e : columns_[c]) {
      rows[e.row][static_cast<std::uint32_t>(c)] = e.value;
      col_rows[c].insert(e.row);
    }

  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < col_rows.size(); ++c) {
      if (col_rows[c].empty()) continue;
      // Unit entry in the shortest row.
      std::uint32_t best = 0;
      std::size_t best_len = 0;
      bool found = false;
      for (std::uint32_t r : col_rows[c]) {
        const Integer& v = rows[r].at(static_cast<std::uint32_t>(c));
        if ((v == 1 || v == -1) && (!found || rows[r].size() < best_len)) {
          best = r;
          best_len = rows[r].size();
          found = true;
        }
      }
      if (!found) continue;
      const auto pivot_row = rows[best];
      const Integer pivot = pivot_row.at(static_cast<std::uint32_t>(c));
      std::vector<std::uint32_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::uint32_t r : targets) {
        if (r == best) continue;
        Integer q = rows[r].at(static_cast<std::uint32_t>(c)) * pivot;  // pivot is its own inverse
        for (const auto& [pc, pv] : pivot_row) {
          Integer nv = -q * pv;
          if (auto it = rows[r].find(pc); it != rows[r].end()) nv += it->second;
          if (nv == 0) {
            rows[r].erase(pc);
            col_rows[pc].erase(r);
          } else {
            rows[r][pc] = nv;
            col_rows[pc].insert(r);
          }
        }
      }
      for (const auto& [pc, pv] : pivot_row) col_rows[pc].erase(best);
      rows[best].clear();
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (std::size_t c = 0; c < col_rows.size(); ++c)
    if (!col_rows[c].empty()) live_cols.push_back(c);

  std::vector<Integer> factors(units, Integer(1));
  if (!live_rows.empty()) {
    IntMatrix rest(live_rows.size(), live_cols.size());
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (std::size_t j = 0; j < live_cols.size(); ++j) {
        auto it = rows[live_rows[i]].find(static_cast<std::uint32_t>(live_cols[j]));
        if (it != rows[live_rows[i]].end()) rest(i, j) = it->second;
      }
    for (auto& f : tcob::invariant_factors(std::move(rest))) factors.push_back(std::move(f));
  }
  return factors;
}

}  // namespace tcob
