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

#ifndef SARR_QMATRIX_H_
#define SARR_QMATRIX_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sarr/rational.h"

namespace sarr {

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  // `cols` is needed so that an empty row list still has a shape.
  static QMatrix FromRows(std::span<const QVector> rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rat& operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
  const Rat& operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

  QVector Row(size_t r) const;
  std::vector<QVector> RowList() const;
  void AppendRow(std::span<const Rat> row);
  QMatrix Transpose() const;
  QVector Apply(std::span<const Rat> v) const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<Rat> entries_;
};

// Row-oriented sparse matrix; only used where the dense form would be
// mostly zeros (graded strands of a complex).
class SparseQMatrix {
 public:
  using Row = std::vector<std::pair<size_t, Rat>>;

  SparseQMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows) {}

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  // Entries must have distinct, increasing column indices.
  void SetRow(size_t r, Row row) { rows_[r] = std::move(row); }
  const Row& row(size_t r) const { return rows_[r]; }
  QMatrix ToDense() const;

 private:
  size_t cols_;
  std::vector<Row> rows_;
};

// Exact rank over Q. Rows are scaled to primitive integer vectors and
// reduced by fraction-free elimination; a modular pass answers directly when
// it already proves full rank.
size_t Rank(const QMatrix& m);
size_t Rank(const SparseQMatrix& m);

// Rank of the matrix reduced modulo a 31-bit prime, or nullopt if the prime
// divides a denominator. For a matrix over Z_(p) this never exceeds the rank
// over Q, so it is a certified lower bound.
std::optional<size_t> RankModPrime(const QMatrix& m, uint32_t prime);
std::optional<size_t> RankModPrime(const SparseQMatrix& m, uint32_t prime);

// Certified lower bound on Rank(m), trying a few fixed primes in turn.
size_t RankLowerBound(const QMatrix& m);
size_t RankLowerBound(const SparseQMatrix& m);

// Basis of {v : m v = 0}; its size is cols - Rank(m).
std::vector<QVector> KernelBasis(const QMatrix& m);

// Dimension of the span of `vectors`. Throws InputError on ragged input.
size_t SpanDim(std::span<const QVector> vectors);

// Coefficients c with sum_j c_j span[j] == target, or nullopt. When the
// spanning list is dependent the free coefficients are set to zero.
std::optional<QVector> SolveMembership(std::span<const Rat> target,
                                       std::span<const QVector> span);

// Incrementally grown row echelon basis with primitive integer rows.
// Reducing a vector yields a nonzero multiple of (v - w) for some w in the
// span, with zeros in every pivot column.
class EchelonBasis {
 public:
  explicit EchelonBasis(size_t dim) : dim_(dim) {}

  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }

  std::vector<BigInt> Reduce(std::vector<BigInt> v) const;
  std::vector<BigInt> Reduce(const QVector& v) const;
  bool Contains(const QVector& v) const;

  // Returns true iff v was independent of the current rows.
  bool Insert(const QVector& v);
  bool InsertInteger(std::vector<BigInt> v);

 private:
  size_t dim_;
  std::vector<std::vector<BigInt>> rows_;
  std::vector<size_t> pivots_;
};

// Row echelon form over Z/p grown one vector at a time. Rows are scaled to a
// unit pivot. Ranks found here are lower bounds for the rank over Q of any
// integer matrix whose reduction was inserted.
class ModularEchelon {
 public:
  ModularEchelon(size_t dim, uint32_t prime) : dim_(dim), prime_(prime) {}
  size_t dim() const { return dim_; }
  size_t rank() const { return rows_.size(); }
  uint32_t prime() const { return prime_; }
  // Entries must already be reduced modulo the prime.
  bool Insert(std::vector<uint32_t> v);
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }

 private:
  size_t dim_;
  uint32_t prime_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<size_t> pivots_;
};

// x mod p, or nullopt if p divides the denominator.
std::optional<uint32_t> ResidueModPrime(const Rat& x, uint32_t prime);

// The largest of the fixed 31-bit primes used for modular ranks.
uint32_t DefaultPrime();

}  // namespace sarr

#endif  // SARR_QMATRIX_H_
