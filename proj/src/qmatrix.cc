// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sarr/qmatrix.h"

#include <algorithm>
#include <array>
#include <string>

#include "sarr/errors.h"

namespace sarr {
namespace {

constexpr std::array<uint32_t, 4> kPrimes = {2147483647u, 2147483629u,
                                             2147483587u, 2147483579u};

uint32_t PowMod(uint64_t base, uint64_t exp, uint32_t p) {
  uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<uint32_t>(result);
}

uint32_t InvMod(uint32_t a, uint32_t p) { return PowMod(a, p - 2, p); }

std::optional<uint32_t> Residue(const Rat& x, uint32_t p) {
  unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  unsigned long num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  return static_cast<uint32_t>(uint64_t{num} * InvMod(den, p) % p);
}

size_t DenseRankModPrime(std::vector<std::vector<uint32_t>> rows, size_t cols,
                         uint32_t p) {
  size_t rank = 0;
  const size_t limit = std::min(rows.size(), cols);
  for (size_t c = 0; c < cols && rank < limit; ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    std::vector<uint32_t>& prow = rows[rank];
    const uint64_t inv = InvMod(prow[c], p);
    for (size_t k = c; k < cols; ++k) prow[k] = static_cast<uint32_t>(prow[k] * inv % p);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      std::vector<uint32_t>& row = rows[i];
      const uint64_t factor = row[c];
      if (factor == 0) continue;
      const uint64_t neg = p - factor;
      for (size_t k = c; k < cols; ++k) {
        if (prow[k] == 0) continue;
        row[k] = static_cast<uint32_t>((row[k] + neg * prow[k]) % p);
      }
    }
    ++rank;
  }
  return rank;
}

void DivideByContent(std::vector<BigInt>& row, size_t from) {
  BigInt g = 0;
  for (size_t k = from; k < row.size(); ++k) {
    if (row[k] != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[k].get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g > 1) {
    for (size_t k = from; k < row.size(); ++k) {
      if (row[k] != 0) mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), g.get_mpz_t());
    }
  }
}

// target := a * target - b * source so that column `pivot` vanishes, then
// strip content. Columns before `from` must be zero in both vectors.
void Eliminate(std::vector<BigInt>& target, const std::vector<BigInt>& source,
               size_t pivot, size_t from) {
  BigInt g, a, b;
  const BigInt& source_pivot = source[pivot];
  const BigInt& t = target[pivot];
  mpz_gcd(g.get_mpz_t(), source_pivot.get_mpz_t(), t.get_mpz_t());
  mpz_divexact(a.get_mpz_t(), source_pivot.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(b.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t());
  const bool unit = (a == 1);
  for (size_t k = from; k < target.size(); ++k) {
    if (!unit && target[k] != 0) mpz_mul(target[k].get_mpz_t(), target[k].get_mpz_t(), a.get_mpz_t());
    if (source[k] != 0) mpz_submul(target[k].get_mpz_t(), b.get_mpz_t(), source[k].get_mpz_t());
  }
  DivideByContent(target, from);
}

// Fraction-free row echelon reduction over Z with content removal.
size_t IntegerRank(std::vector<std::vector<BigInt>> rows, size_t cols) {
  std::erase_if(rows, [](const std::vector<BigInt>& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
  });
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    for (size_t k = 0; k < x.size(); ++k) {
      int c = cmp(x[k], y[k]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  size_t rank = 0;
  const size_t limit = std::min(rows.size(), cols);
  for (size_t c = 0; c < cols && rank < limit; ++c) {
    size_t best = rows.size();
    size_t best_weight = 0;
    for (size_t i = rank; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      size_t weight = 0;
      for (size_t k = c; k < cols; ++k) {
        if (rows[i][k] != 0) weight += mpz_sizeinbase(rows[i][k].get_mpz_t(), 2);
      }
      if (best == rows.size() || weight < best_weight) {
        best = i;
        best_weight = weight;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[rank], rows[best]);
    const std::vector<BigInt>& prow = rows[rank];
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] != 0) Eliminate(rows[i], prow, c, c);
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<BigInt>> IntegerRows(const QMatrix& m) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(m.rows());
  for (size_t r = 0; r < m.rows(); ++r) rows.push_back(PrimitiveIntegerVector(m.Row(r)));
  return rows;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> RowReduce(QMatrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
    }
    const Rat inv = 1 / m(r, c);
    for (size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat factor = m(i, c);
      for (size_t k = c; k < m.cols(); ++k) {
        if (m(r, k) != 0) m(i, k) -= factor * m(r, k);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMatrix QMatrix::FromRows(std::span<const QVector> rows, size_t cols) {
  QMatrix m(0, cols);
  for (const QVector& row : rows) m.AppendRow(row);
  return m;
}

QVector QMatrix::Row(size_t r) const {
  return QVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

std::vector<QVector> QMatrix::RowList() const {
  std::vector<QVector> out;
  out.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) out.push_back(Row(r));
  return out;
}

void QMatrix::AppendRow(std::span<const Rat> row) {
  if (row.size() != cols_) {
    throw InputError("row of length " + std::to_string(row.size()) +
                     " appended to matrix with " + std::to_string(cols_) + " columns");
  }
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

QMatrix QMatrix::Transpose() const {
  QMatrix t(cols_, rows_);
  for (size_t r = 0; r < rows_; ++r) {
    for (size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

QVector QMatrix::Apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw InputError("matrix-vector shape mismatch");
  QVector out(rows_);
  for (size_t r = 0; r < rows_; ++r) {
    Rat acc = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && v[c] != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

QMatrix SparseQMatrix::ToDense() const {
  QMatrix m(rows_.size(), cols_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& [c, x] : rows_[r]) m(r, c) = x;
  }
  return m;
}

std::optional<size_t> RankModPrime(const QMatrix& m, uint32_t prime) {
  std::vector<std::vector<uint32_t>> rows(m.rows(), std::vector<uint32_t>(m.cols()));
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == 0) continue;
      auto v = Residue(m(r, c), prime);
      if (!v) return std::nullopt;
      rows[r][c] = *v;
    }
  }
  return DenseRankModPrime(std::move(rows), m.cols(), prime);
}

std::optional<size_t> RankModPrime(const SparseQMatrix& m, uint32_t prime) {
  using SparseRow = std::vector<std::pair<uint32_t, uint32_t>>;
  const uint64_t p = prime;
  // pivot_rows[c] has leading column c and leading entry 1.
  std::vector<SparseRow> pivot_rows(m.cols());
  std::vector<bool> has_pivot(m.cols(), false);
  size_t rank = 0;
  const size_t limit = std::min(m.rows(), m.cols());
  SparseRow scratch;
  for (size_t r = 0; r < m.rows() && rank < limit; ++r) {
    SparseRow row;
    for (const auto& [c, x] : m.row(r)) {
      auto v = Residue(x, prime);
      if (!v) return std::nullopt;
      if (*v != 0) row.emplace_back(static_cast<uint32_t>(c), *v);
    }
    while (!row.empty() && has_pivot[row.front().first]) {
      const SparseRow& prow = pivot_rows[row.front().first];
      const uint64_t neg = p - row.front().second;
      // row := row - factor * prow; both sorted by column.
      scratch.clear();
      size_t i = 0, j = 0;
      while (i < row.size() || j < prow.size()) {
        if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
          scratch.push_back(row[i++]);
        } else if (i == row.size() || prow[j].first < row[i].first) {
          scratch.emplace_back(prow[j].first, static_cast<uint32_t>(neg * prow[j].second % p));
          ++j;
        } else {
          const uint32_t v = static_cast<uint32_t>((row[i].second + neg * prow[j].second) % p);
          if (v != 0) scratch.emplace_back(row[i].first, v);
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    if (row.empty()) continue;
    const uint64_t inv = InvMod(row.front().second, prime);
    for (auto& [c, v] : row) v = static_cast<uint32_t>(v * inv % p);
    const uint32_t lead = row.front().first;
    pivot_rows[lead] = std::move(row);
    has_pivot[lead] = true;
    ++rank;
  }
  return rank;
}

size_t RankLowerBound(const QMatrix& m) {
  for (uint32_t p : kPrimes) {
    if (auto r = RankModPrime(m, p)) return *r;
  }
  return 0;
}

size_t RankLowerBound(const SparseQMatrix& m) {
  for (uint32_t p : kPrimes) {
    if (auto r = RankModPrime(m, p)) return *r;
  }
  return 0;
}

size_t Rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const size_t lower = RankLowerBound(m);
  if (lower == std::min(m.rows(), m.cols())) return lower;
  return IntegerRank(IntegerRows(m), m.cols());
}

size_t Rank(const SparseQMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const size_t lower = RankLowerBound(m);
  if (lower == std::min(m.rows(), m.cols())) return lower;
  return Rank(m.ToDense());
}

std::vector<QVector> KernelBasis(const QMatrix& m) {
  QMatrix reduced = m;
  const std::vector<size_t> pivots = RowReduce(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;

  std::vector<QVector> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

size_t SpanDim(std::span<const QVector> vectors) {
  if (vectors.empty()) return 0;
  const size_t len = vectors.front().size();
  for (const QVector& v : vectors) {
    if (v.size() != len) throw InputError("vectors of different lengths in span");
  }
  return Rank(QMatrix::FromRows(vectors, len));
}

std::optional<QVector> SolveMembership(std::span<const Rat> target,
                                       std::span<const QVector> span) {
  const size_t len = target.size();
  for (const QVector& v : span) {
    if (v.size() != len) throw InputError("membership test with mismatched lengths");
  }
  // Columns are the spanning vectors, last column is the target.
  QMatrix aug(len, span.size() + 1);
  for (size_t j = 0; j < span.size(); ++j) {
    for (size_t r = 0; r < len; ++r) aug(r, j) = span[j][r];
  }
  for (size_t r = 0; r < len; ++r) aug(r, span.size()) = target[r];
  const std::vector<size_t> pivots = RowReduce(aug);
  if (!pivots.empty() && pivots.back() == span.size()) return std::nullopt;
  QVector coeffs(span.size());
  for (size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = aug(r, span.size());
  return coeffs;
}

std::vector<BigInt> EchelonBasis::Reduce(std::vector<BigInt> v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const size_t p = pivots_[k];
    if (v[p] == 0) continue;
    Eliminate(v, rows_[k], p, 0);
  }
  return v;
}

std::vector<BigInt> EchelonBasis::Reduce(const QVector& v) const {
  if (v.size() != dim_) throw InputError("echelon basis dimension mismatch");
  return Reduce(PrimitiveIntegerVector(v));
}

bool EchelonBasis::Contains(const QVector& v) const {
  const std::vector<BigInt> r = Reduce(v);
  return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

bool EchelonBasis::Insert(const QVector& v) {
  if (v.size() != dim_) throw InputError("echelon basis dimension mismatch");
  return InsertInteger(PrimitiveIntegerVector(v));
}

bool EchelonBasis::InsertInteger(std::vector<BigInt> v) {
  v = Reduce(std::move(v));
  size_t pivot = 0;
  while (pivot < v.size() && v[pivot] == 0) ++pivot;
  if (pivot == v.size()) return false;
  if (v[pivot] < 0) {
    for (BigInt& x : v) x = -x;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool ModularEchelon::Insert(std::vector<uint32_t> v) {
  if (v.size() != dim_) throw InputError("vector length does not match echelon dimension");
  const uint64_t p = prime_;
  for (size_t k = 0; k < rows_.size(); ++k) {
    const uint64_t factor = v[pivots_[k]];
    if (factor == 0) continue;
    const uint64_t neg = p - factor;
    const std::vector<uint32_t>& row = rows_[k];
    for (size_t c = pivots_[k]; c < dim_; ++c) {
      if (row[c] != 0) v[c] = static_cast<uint32_t>((v[c] + neg * row[c]) % p);
    }
  }
  size_t pivot = 0;
  while (pivot < dim_ && v[pivot] == 0) ++pivot;
  if (pivot == dim_) return false;
  const uint64_t inv = InvMod(v[pivot], prime_);
  for (size_t c = pivot; c < dim_; ++c) v[c] = static_cast<uint32_t>(v[c] * inv % p);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

std::optional<uint32_t> ResidueModPrime(const Rat& x, uint32_t prime) {
  return Residue(x, prime);
}

uint32_t DefaultPrime() { return kPrimes[0]; }

}  // namespace sarr
