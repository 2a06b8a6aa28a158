#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hh/ring.hpp"

namespace hh {

// Sparse row-major matrix; each row sorted by column, no stored zeros.
class ExactMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Rat>;
  using Row = std::vector<Entry>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Ring ring = Ring::Z());

  static ExactMatrix identity(std::size_t n, Ring ring = Ring::Z());
  static ExactMatrix from_dense(const std::vector<std::vector<Rat>>& d, Ring ring = Ring::Z());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }
  const Row& row(std::size_t r) const { return data_[r]; }
  Rat at(std::size_t r, std::size_t c) const;
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  ExactMatrix transpose() const;
  std::vector<std::vector<Rat>> dense() const;
  Vec apply(const Vec& v) const;
  ExactMatrix with_ring(Ring r) const;

  // first nonzero entry in row-major order
  std::optional<std::pair<std::pair<std::size_t, std::size_t>, Rat>> first_nonzero() const;

  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  friend class MatrixBuilder;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Ring ring_;
  std::vector<Row> data_;
};

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

// Accumulates (row, col, value) triples; duplicates are summed.
class MatrixBuilder {
 public:
  MatrixBuilder(std::size_t rows, std::size_t cols, Ring ring = Ring::Z());
  void add(std::size_t r, std::size_t c, const Rat& v);
  ExactMatrix build();

 private:
  std::size_t rows_, cols_;
  Ring ring_;
  std::vector<ExactMatrix::Row> raw_;
};

}  // namespace hh
