#include "hh/linalg.hpp"

#include <algorithm>
#include <set>

#include "hh/error.hpp"

namespace hh {
namespace {

int cmpabs(const Int& a, const Int& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }


using DMat = std::vector<std::vector<Int>>;

DMat to_dense_int(const ExactMatrix& m) {
  DMat d(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& [c, v] : m.row(i)) {
      if (v.get_den() != 1) throw Error(ErrorKind::InvalidRing, "integer algorithm on non-integral matrix");
      d[i][c] = v.get_num();
    }
  return d;
}

DMat ident(std::size_t n) {
  DMat d(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 1;
  return d;
}

ExactMatrix from_int(const DMat& d, std::size_t rows, std::size_t cols) {
  MatrixBuilder b(rows, cols, Ring::Z());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (d[i][j] != 0) b.add(i, j, Rat(d[i][j]));
  return b.build();
}

// U * A * V = D in place; Uinv tracks U^{-1}.
struct DenseSmith {
  DMat& D;
  DMat* U;
  DMat* Uinv;
  DMat* V;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(D[i], D[j]);
    if (U) std::swap((*U)[i], (*U)[j]);
    if (Uinv)
      for (auto& r : *Uinv) std::swap(r[i], r[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : D) std::swap(r[i], r[j]);
    if (V)
      for (auto& r : *V) std::swap(r[i], r[j]);
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Int& c) {
    for (std::size_t k = 0; k < n; ++k)
      if (D[j][k] != 0) D[i][k] += c * D[j][k];
    if (U)
      for (std::size_t k = 0; k < m; ++k)
        if ((*U)[j][k] != 0) (*U)[i][k] += c * (*U)[j][k];
    if (Uinv)
      for (auto& r : *Uinv)
        if (r[i] != 0) r[j] -= c * r[i];
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Int& c) {
    for (auto& r : D)
      if (r[j] != 0) r[i] += c * r[j];
    if (V)
      for (auto& r : *V)
        if (r[j] != 0) r[i] += c * r[j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : D[i]) x = -x;
    if (U)
      for (auto& x : (*U)[i]) x = -x;
    if (Uinv)
      for (auto& r : *Uinv) r[i] = -r[i];
  }

  std::size_t run() {
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi == m || cmpabs(D[i][j], D[pi][pj]) < 0)) pi = i, pj = j;
      if (pi == m) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0) {
            Int q = D[i][t] / D[t][t];
            if (q != 0) add_row(i, t, -q);
            if (D[i][t] != 0) dirty = true;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0) {
            Int q = D[t][j] / D[t][t];
            if (q != 0) add_col(j, t, -q);
            if (D[t][j] != 0) dirty = true;
          }
        if (dirty) {
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < m; ++i)
            if (D[i][t] != 0 && cmpabs(D[i][t], D[bi][bj]) < 0) bi = i, bj = t;
          for (std::size_t j = t + 1; j < n; ++j)
            if (D[t][j] != 0 && cmpabs(D[t][j], D[bi][bj]) < 0) bi = t, bj = j;
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        bool bad = false;
        for (std::size_t i = t + 1; i < m && !bad; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (D[i][j] != 0 && D[i][j] % D[t][t] != 0) {
              add_row(t, i, Int(1));
              bad = true;
              break;
            }
        if (!bad) break;
      }
      if (D[t][t] < 0) negate_row(t);
    }
    return t;
  }
};

// Sparse elimination skeleton; F supplies the scalar arithmetic.
template <class F>
struct SparseElim {
  using T = typename F::T;
  using Row = std::vector<std::pair<std::uint32_t, T>>;
  F f;
  std::vector<Row> rows;
  std::vector<std::vector<std::uint32_t>> colrows;
  std::vector<char> active;
  std::size_t rank = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;

  SparseElim(F f_, std::vector<Row> r, std::size_t ncols)
      : f(f_), rows(std::move(r)), colrows(ncols), active(rows.size(), 1) {}

  bool has_pivot(const Row& r) const {
    for (auto& e : r)
      if (f.pivotable(e.second)) return true;
    return false;
  }

  void run() {
    const std::size_t m = rows.size();
    std::set<std::pair<std::size_t, std::uint32_t>> queue;
    std::vector<std::size_t> key(m, SIZE_MAX);
    auto enqueue = [&](std::uint32_t i) {
      if (key[i] != SIZE_MAX) {
        queue.erase({key[i], i});
        key[i] = SIZE_MAX;
      }
      if (active[i] && !rows[i].empty() && has_pivot(rows[i])) {
        key[i] = rows[i].size();
        queue.insert({key[i], i});
      }
    };
    for (std::uint32_t i = 0; i < m; ++i) {
      for (auto& e : rows[i]) colrows[e.first].push_back(i);
      enqueue(i);
    }
    Row tmp;
    while (!queue.empty()) {
      std::uint32_t r = queue.begin()->second;
      queue.erase(queue.begin());
      key[r] = SIZE_MAX;
      std::size_t best = SIZE_MAX;
      std::uint32_t bc = 0;
      T bv{};
      for (auto& [c, v] : rows[r])
        if (f.pivotable(v) && colrows[c].size() < best) best = colrows[c].size(), bc = c, bv = v;
      active[r] = 0;
      ++rank;
      pivots.push_back({r, bc});
      std::vector<std::uint32_t> hits;
      hits.swap(colrows[bc]);
      const Row& pr = rows[r];
      for (std::uint32_t i : hits) {
        if (i == r || !active[i]) continue;
        Row& ri = rows[i];
        auto it = std::lower_bound(ri.begin(), ri.end(), bc, [](auto& e, std::uint32_t x) { return e.first < x; });
        if (it == ri.end() || it->first != bc) continue;
        T coef = f.neg_quot(it->second, bv);
        tmp.clear();
        std::size_t a = 0, b = 0;
        while (a < ri.size() || b < pr.size()) {
          if (b == pr.size() || (a < ri.size() && ri[a].first < pr[b].first)) {
            tmp.push_back(std::move(ri[a++]));
          } else if (a == ri.size() || pr[b].first < ri[a].first) {
            T v = f.mul(coef, pr[b].second);
            if (f.nz(v)) {
              colrows[pr[b].first].push_back(i);
              tmp.push_back({pr[b].first, std::move(v)});
            }
            ++b;
          } else {
            T v = f.addmul(ri[a].second, coef, pr[b].second);
            if (f.nz(v)) tmp.push_back({ri[a].first, std::move(v)});
            ++a, ++b;
          }
        }
        ri.swap(tmp);
        enqueue(i);
      }
    }
  }

  std::vector<Row> residual() const {
    std::vector<Row> out;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (active[i] && !rows[i].empty()) out.push_back(rows[i]);
    return out;
  }
};

struct ZF {
  using T = Int;
  bool pivotable(const T& v) const { return cmpabs(v, 1) == 0; }
  bool nz(const T& v) const { return v != 0; }
  T neg_quot(const T& a, const T& p) const { return -a * p; }
  T mul(const T& a, const T& b) const { return a * b; }
  T addmul(const T& x, const T& c, const T& y) const { return x + c * y; }
};

struct RF {
  using T = Rat;
  Ring r;
  bool pivotable(const T& v) const { return r.is_unit(v); }
  bool nz(const T& v) const { return v != 0; }
  T neg_quot(const T& a, const T& p) const { return r.reduce(-a * r.inv(p)); }
  T mul(const T& a, const T& b) const { return r.reduce(a * b); }
  T addmul(const T& x, const T& c, const T& y) const { return r.reduce(x + c * y); }
};

struct QF {
  using T = Rat;
  bool pivotable(const T& v) const { return v != 0; }
  bool nz(const T& v) const { return v != 0; }
  T neg_quot(const T& a, const T& p) const { return -a / p; }
  T mul(const T& a, const T& b) const { return a * b; }
  T addmul(const T& x, const T& c, const T& y) const { return x + c * y; }
};

struct PF {
  using T = std::uint64_t;
  std::uint64_t p;
  bool pivotable(T v) const { return v != 0; }
  bool nz(T v) const { return v != 0; }
  T mul(T a, T b) const { return T((unsigned __int128)a * b % p); }
  T inv(T a) const {
    T r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  T neg_quot(T a, T pv) const { return (p - mul(a, inv(pv))) % p; }
  T addmul(T x, T c, T y) const { return (x + mul(c, y)) % p; }
};

template <class F>
std::vector<typename SparseElim<F>::Row> rows_of(const ExactMatrix& m, F, auto conv) {
  std::vector<typename SparseElim<F>::Row> r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (auto& [c, v] : m.row(i)) r[i].push_back({c, conv(v)});
  return r;
}

Int as_int(const Rat& v) {
  if (v.get_den() != 1) throw Error(ErrorKind::InvalidRing, "integer algorithm on non-integral matrix");
  return v.get_num();
}

std::size_t rank_q_rows(std::vector<SparseElim<QF>::Row> rows, std::size_t cols) {
  SparseElim<QF> e(QF{}, std::move(rows), cols);
  e.run();
  return e.rank;
}

// dense field RREF for kernel computations
std::vector<Vec> field_kernel(const ExactMatrix& m) {
  const Ring& R = m.ring();
  auto A = m.dense();
  std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    Rat iv = R.inv(A[r][c]);
    for (std::size_t k = c; k < cols; ++k) A[r][k] = R.reduce(A[r][k] * iv);
    for (std::size_t i = 0; i < rows; ++i)
      if (i != r && A[i][c] != 0) {
        Rat f = A[i][c];
        for (std::size_t k = c; k < cols; ++k)
          if (A[r][k] != 0) A[i][k] = R.reduce(A[i][k] - f * A[r][k]);
      }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<char> is_piv(cols, 0);
  for (auto c : pivcol) is_piv[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t fc = 0; fc < cols; ++fc) {
    if (is_piv[fc]) continue;
    Vec v(cols, Rat(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = R.reduce(-A[i][fc]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

SmithDecomposition smith_normal_form(const ExactMatrix& m) {
  DMat D = to_dense_int(m);
  DMat U = ident(m.rows()), V = ident(m.cols());
  DenseSmith s{D, &U, nullptr, &V, m.rows(), m.cols()};
  std::size_t r = s.run();
  SmithDecomposition out;
  out.rank = r;
  for (std::size_t i = 0; i < r; ++i) out.divisors.push_back(D[i][i]);
  out.U = from_int(U, m.rows(), m.rows());
  out.V = from_int(V, m.cols(), m.cols());
  out.D = from_int(D, m.rows(), m.cols());
  return out;
}

std::vector<Int> elementary_divisors(const ExactMatrix& m) {
  SparseElim<ZF> e(ZF{}, rows_of(m, ZF{}, as_int), m.cols());
  e.run();
  std::vector<Int> out(e.rank, Int(1));
  auto res = e.residual();
  if (res.empty()) return out;
  std::vector<std::uint32_t> cols;
  for (auto& r : res)
    for (auto& [c, v] : r) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  DMat D(res.size(), std::vector<Int>(cols.size(), Int(0)));
  for (std::size_t i = 0; i < res.size(); ++i)
    for (auto& [c, v] : res[i]) D[i][std::lower_bound(cols.begin(), cols.end(), c) - cols.begin()] = v;
  DenseSmith s{D, nullptr, nullptr, nullptr, D.size(), cols.size()};
  std::size_t r = s.run();
  for (std::size_t i = 0; i < r; ++i) out.push_back(D[i][i]);
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  switch (m.ring().kind()) {
    case Ring::Kind::PrimeField: {
      PF f{m.ring().p()};
      SparseElim<PF> e(f, rows_of(m, f, [](const Rat& v) { return std::uint64_t(v.get_num().get_ui()); }), m.cols());
      e.run();
      return e.rank;
    }
    case Ring::Kind::Rationals:
      return rank_q_rows(rows_of(m, QF{}, [](const Rat& v) { return v; }), m.cols());
    case Ring::Kind::Integers: {
      SparseElim<ZF> e(ZF{}, rows_of(m, ZF{}, as_int), m.cols());
      e.run();
      auto res = e.residual();
      std::vector<SparseElim<QF>::Row> q;
      for (auto& r : res) {
        SparseElim<QF>::Row row;
        for (auto& [c, v] : r) row.push_back({c, Rat(v)});
        q.push_back(std::move(row));
      }
      return e.rank + (q.empty() ? 0 : rank_q_rows(std::move(q), m.cols()));
    }
  }
  return 0;
}

std::vector<Vec> kernel_basis(const ExactMatrix& m) {
  if (m.ring().is_field()) return field_kernel(m);
  auto s = smith_normal_form(m);
  std::vector<Vec> out;
  for (std::size_t j = s.rank; j < m.cols(); ++j) {
    Vec v(m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.cols(); ++i) v[i] = s.V.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

Int determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::ShapeMismatch, "determinant of non-square matrix");
  DMat A = to_dense_int(m);
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && A[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(A[p], A[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

ClassReducer::ClassReducer(const ExactMatrix* d_in, const ExactMatrix* d_out, std::size_t dim, Ring ring)
    : ring_(ring), full_dim_(dim) {
  if (d_in && d_in->rows() != dim) throw Error(ErrorKind::ShapeMismatch, "incoming differential rows");
  if (d_out && d_out->cols() != dim) throw Error(ErrorKind::ShapeMismatch, "outgoing differential cols");
  using Elim = SparseElim<RF>;
  auto take = [](const Elim::Row& row, std::uint32_t i, Op& op) {
    for (auto& [c, v] : row)
      if (c == i) op.pivot = v;
      else op.rest.push_back({c, v});
  };
  std::vector<char> gone(dim, 0);
  std::optional<ExactMatrix> out_red, in_red;
  std::vector<Elim::Row> out_rows, in_rows;
  if (d_out) {
    d_out_ = d_out->with_ring(ring);
    has_out_ = true;
    std::vector<Elim::Row> rows(d_out_.rows());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r] = d_out_.row(r);
    Elim e{RF{ring}, std::move(rows), dim};
    e.run();
    for (auto [r, c] : e.pivots) {
      Op op{c, Rat(0), {}};
      take(e.rows[r], c, op);
      out_ops_.push_back(std::move(op));
      gone[c] = 1;
    }
    out_rows = e.residual();
  }
  if (d_in) {
    auto T = d_in->with_ring(ring).transpose();
    std::vector<Elim::Row> rows(T.rows());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto& [c, v] : T.row(r))
        if (!gone[c]) rows[r].push_back({c, v});
    Elim e{RF{ring}, std::move(rows), dim};
    e.run();
    for (auto [r, c] : e.pivots) {
      Op op{c, Rat(0), {}};
      take(e.rows[r], c, op);
      in_ops_.push_back(std::move(op));
      gone[c] = 1;
    }
    in_rows = e.residual();
  }
  std::vector<long> pos(dim, -1);
  for (std::uint32_t i = 0; i < dim; ++i)
    if (!gone[i]) {
      pos[i] = long(keep_.size());
      keep_.push_back(i);
    }
  dim_ = keep_.size();
  if (d_out) {
    MatrixBuilder b(out_rows.size(), dim_, ring);
    for (std::size_t r = 0; r < out_rows.size(); ++r)
      for (auto& [c, v] : out_rows[r])
        if (pos[c] >= 0) b.add(r, std::size_t(pos[c]), v);
    out_red = b.build();
  }
  if (d_in) {
    MatrixBuilder b(dim_, in_rows.size(), ring);
    for (std::size_t r = 0; r < in_rows.size(); ++r)
      for (auto& [c, v] : in_rows[r])
        if (pos[c] >= 0) b.add(std::size_t(pos[c]), r, v);
    in_red = b.build();
  }
  build(in_red ? &*in_red : nullptr, out_red ? &*out_red : nullptr);
  for (auto& g : gens_) g = from_reduced(g);
}

Vec ClassReducer::to_reduced(const Vec& z) const {
  Vec x = z;
  for (auto& op : in_ops_) {
    if (x[op.i] == 0) continue;
    Rat f = ring_.reduce(x[op.i] * ring_.inv(op.pivot));
    for (auto& [c, v] : op.rest) x[c] = ring_.reduce(x[c] - v * f);
  }
  Vec out(dim_);
  for (std::size_t t = 0; t < dim_; ++t) out[t] = x[keep_[t]];
  return out;
}

Vec ClassReducer::from_reduced(const Vec& y) const {
  Vec x(full_dim_, Rat(0));
  for (std::size_t t = 0; t < dim_; ++t) x[keep_[t]] = y[t];
  for (auto it = out_ops_.rbegin(); it != out_ops_.rend(); ++it) {
    Rat s = 0;
    for (auto& [c, v] : it->rest)
      if (x[c] != 0) s += v * x[c];
    x[it->i] = ring_.reduce(-s * ring_.inv(it->pivot));
  }
  return x;
}

void ClassReducer::build(const ExactMatrix* d_in, const ExactMatrix* d_out) {
  const Ring ring = ring_;
  const std::size_t dim = dim_;
  std::vector<Vec> K;
  if (d_out) {
    K = kernel_basis(*d_out);
  } else {
    for (std::size_t j = 0; j < dim; ++j) {
      Vec v(dim, Rat(0));
      v[j] = 1;
      K.push_back(std::move(v));
    }
  }

  if (ring.is_field()) {
    auto insert = [&](Vec v, Vec tag) -> bool {
      for (auto& row : ech_) {
        if (v[row.pivot] == 0) continue;
        Rat f = v[row.pivot];
        for (std::size_t k = 0; k < dim_; ++k)
          if (row.v[k] != 0) v[k] = ring_.reduce(v[k] - f * row.v[k]);
        if (tag.size() < row.tag.size()) tag.resize(row.tag.size(), Rat(0));
        for (std::size_t k = 0; k < row.tag.size(); ++k)
          if (row.tag[k] != 0) tag[k] = ring_.reduce(tag[k] - f * row.tag[k]);
      }
      std::size_t p = 0;
      while (p < dim_ && v[p] == 0) ++p;
      if (p == dim_) return false;
      Rat iv = ring_.inv(v[p]);
      for (auto& x : v) x = ring_.reduce(x * iv);
      for (auto& x : tag) x = ring_.reduce(x * iv);
      ech_.push_back({p, std::move(v), std::move(tag)});
      return true;
    };
    if (d_in) {
      auto T = d_in->with_ring(ring).transpose();
      for (std::size_t j = 0; j < T.rows(); ++j) {
        Vec v(dim_, Rat(0));
        for (auto& [c, x] : T.row(j)) v[c] = x;
        insert(std::move(v), Vec{});
      }
    }
    for (auto& k : K) {
      Vec tag(free_ + 1, Rat(0));
      tag[free_] = 1;
      if (insert(k, tag)) {
        gens_.push_back(k);
        orders_.push_back(0);
        ++free_;
      }
    }
    return;
  }

  // integers
  DMat Uinv;
  if (d_in) {
    DMat D = to_dense_int(*d_in);
    U_ = ident(dim_);
    Uinv = ident(dim_);
    DenseSmith s{D, &U_, &Uinv, nullptr, dim_, d_in->cols()};
    r_in_ = s.run();
    for (std::size_t i = 0; i < r_in_; ++i) div_in_.push_back(D[i][i]);
  } else {
    U_ = ident(dim_);
    Uinv = ident(dim_);
  }
  for (std::size_t i = 0; i < r_in_; ++i)
    if (div_in_[i] > 1) {
      Vec g(dim_, Rat(0));
      for (std::size_t k = 0; k < dim_; ++k) g[k] = Rat(Uinv[k][i]);
      gens_.push_back(std::move(g));
      orders_.push_back(div_in_[i]);
    }
  std::size_t pr = dim_ - r_in_;
  DMat P(pr, std::vector<Int>(K.size(), Int(0)));
  for (std::size_t j = 0; j < K.size(); ++j)
    for (std::size_t i = 0; i < pr; ++i) {
      Int s = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        if (K[j][k] != 0) s += U_[r_in_ + i][k] * K[j][k].get_num();
      P[i][j] = s;
    }
  U2_ = ident(pr);
  DMat V2 = ident(K.size());
  DenseSmith s2{P, &U2_, nullptr, &V2, pr, K.size()};
  free_ = s2.run();
  for (std::size_t j = 0; j < free_; ++j) {
    Vec g(dim_, Rat(0));
    for (std::size_t l = 0; l < K.size(); ++l)
      if (V2[l][j] != 0)
        for (std::size_t k = 0; k < dim_; ++k) g[k] += Rat(V2[l][j]) * K[l][k];
    gens_.push_back(std::move(g));
    orders_.push_back(0);
  }
}

std::vector<Int> ClassReducer::torsion() const {
  std::vector<Int> t;
  for (auto& o : orders_)
    if (o > 1) t.push_back(o);
  return t;
}

bool ClassReducer::is_cocycle(const Vec& z) const {
  if (z.size() != full_dim_) throw Error(ErrorKind::ShapeMismatch, "cocycle length");
  if (!has_out_) return true;
  return is_zero(d_out_.apply(z));
}

std::vector<Rat> ClassReducer::coordinates(const Vec& z) const {
  if (!is_cocycle(z)) throw Error(ErrorKind::NotAComplex, "coordinates requested for a non-cocycle");
  return reduced_coordinates(to_reduced(z));
}

std::vector<Rat> ClassReducer::reduced_coordinates(const Vec& z) const {
  if (ring_.is_field()) {
    Vec v = z;
    Vec tag(free_, Rat(0));
    for (auto& row : ech_) {
      if (v[row.pivot] == 0) continue;
      Rat f = v[row.pivot];
      for (std::size_t k = 0; k < dim_; ++k)
        if (row.v[k] != 0) v[k] = ring_.reduce(v[k] - f * row.v[k]);
      for (std::size_t k = 0; k < row.tag.size(); ++k)
        if (row.tag[k] != 0) tag[k] = ring_.reduce(tag[k] + f * row.tag[k]);
    }
    return tag;
  }
  std::vector<Rat> y(dim_, Rat(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    Rat s = 0;
    for (std::size_t k = 0; k < dim_; ++k)
      if (z[k] != 0 && U_[i][k] != 0) s += Rat(U_[i][k]) * z[k];
    y[i] = s;
  }
  std::vector<Rat> out;
  for (std::size_t i = 0; i < r_in_; ++i)
    if (div_in_[i] > 1) {
      Int q = y[i].get_num();
      Int r = q % div_in_[i];
      if (r < 0) r += div_in_[i];
      out.push_back(Rat(r));
    }
  std::size_t pr = dim_ - r_in_;
  for (std::size_t j = 0; j < free_; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < pr; ++i)
      if (U2_[j][i] != 0) s += Rat(U2_[j][i]) * y[r_in_ + i];
    out.push_back(s);
  }
  return out;
}

bool ClassReducer::is_coboundary(const Vec& z) const {
  for (auto& c : coordinates(z))
    if (c != 0) return false;
  return true;
}

}  // namespace hh
