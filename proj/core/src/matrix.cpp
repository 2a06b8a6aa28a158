#include "hh/matrix.hpp"

#include <algorithm>

#include "hh/error.hpp"

namespace hh {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), data_(rows) {}

ExactMatrix ExactMatrix::identity(std::size_t n, Ring ring) {
  ExactMatrix m(n, n, ring);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({std::uint32_t(i), Rat(1)});
  return m;
}

ExactMatrix ExactMatrix::from_dense(const std::vector<std::vector<Rat>>& d, Ring ring) {
  std::size_t r = d.size(), c = r ? d[0].size() : 0;
  MatrixBuilder b(r, c, ring);
  for (std::size_t i = 0; i < r; ++i) {
    if (d[i].size() != c) throw Error(ErrorKind::ShapeMismatch, "ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (d[i][j] != 0) b.add(i, j, d[i][j]);
  }
  return b.build();
}

Rat ExactMatrix::at(std::size_t r, std::size_t c) const {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t x) { return e.first < x; });
  if (it != row.end() && it->first == c) return it->second;
  return Rat(0);
}

std::size_t ExactMatrix::nnz() const {
  std::size_t n = 0;
  for (auto& r : data_) n += r.size();
  return n;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, ring_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [c, v] : data_[i]) t.data_[c].push_back({std::uint32_t(i), v});
  return t;
}

std::vector<std::vector<Rat>> ExactMatrix::dense() const {
  std::vector<std::vector<Rat>> d(rows_, std::vector<Rat>(cols_, Rat(0)));
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [c, v] : data_[i]) d[i][c] = v;
  return d;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "vector length does not match columns");
  Vec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat s = 0;
    for (auto& [c, x] : data_[i])
      if (v[c] != 0) s += x * v[c];
    out[i] = ring_.reduce(s);
  }
  return out;
}

ExactMatrix ExactMatrix::with_ring(Ring r) const {
  MatrixBuilder b(rows_, cols_, r);
  for (std::size_t i = 0; i < rows_; ++i)
    for (auto& [c, v] : data_[i]) b.add(i, c, v);
  return b.build();
}

std::optional<std::pair<std::pair<std::size_t, std::size_t>, Rat>> ExactMatrix::first_nonzero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!data_[i].empty()) return std::make_pair(std::make_pair(i, std::size_t(data_[i][0].first)), data_[i][0].second);
  return std::nullopt;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && data_ == o.data_;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "matrix product shapes");
  MatrixBuilder out(a.rows(), b.cols(), a.ring());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (auto& [k, x] : a.row(i))
      for (auto& [j, y] : b.row(k)) out.add(i, j, x * y);
  return out.build();
}

MatrixBuilder::MatrixBuilder(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), cols_(cols), ring_(ring), raw_(rows) {}

void MatrixBuilder::add(std::size_t r, std::size_t c, const Rat& v) {
  if (r >= rows_ || c >= cols_) throw Error(ErrorKind::ShapeMismatch, "entry outside matrix");
  if (v != 0) raw_[r].push_back({std::uint32_t(c), v});
}

ExactMatrix MatrixBuilder::build() {
  ExactMatrix m(rows_, cols_, ring_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto& row = raw_[i];
    std::sort(row.begin(), row.end(), [](auto& x, auto& y) { return x.first < y.first; });
    auto& dst = m.data_[i];
    for (std::size_t k = 0; k < row.size();) {
      std::size_t j = k;
      Rat s = 0;
      while (j < row.size() && row[j].first == row[k].first) s += row[j++].second;
      s = ring_.reduce(s);
      if (s != 0) dst.push_back({row[k].first, s});
      k = j;
    }
    row.clear();
    row.shrink_to_fit();
  }
  return m;
}

}  // namespace hh
