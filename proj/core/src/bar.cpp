#include "hh/bar.hpp"

#include <algorithm>
#include <set>

#include "hh/error.hpp"

namespace hh {

long eps(const std::vector<int>& letter_degree, const std::uint16_t* w, int j) {
  long e = 0;
  for (int i = 0; i < j; ++i) e += letter_degree[w[i]] - 1;
  return e;
}

// ---- words ---------------------------------------------------------------

WordTable::WordTable(std::vector<int> letter_degree, int max_len, long emin, long emax, std::size_t cap)
    : ldeg_(std::move(letter_degree)), N_(max_len) {
  const std::size_t m = ldeg_.size();
  base_ = m + 1;
  unsigned __int128 span = 1;
  for (int i = 0; i < N_; ++i) {
    span *= base_;
    if (span >> 63) throw Error(ErrorKind::CapExceeded, "word length " + std::to_string(N_) + " too large to index");
  }
  long smin = 0, smax = 0;
  for (std::size_t i = 0; i < m; ++i) {
    long s = ldeg_[i] - 1;
    if (i == 0 || s < smin) smin = s;
    if (i == 0 || s > smax) smax = s;
  }
  auto reachable = [&](int len, long e) {
    if (e >= emin && e <= emax) return true;
    if (m == 0) return false;
    for (int r = 1; len + r <= N_; ++r)
      if (e + r * smin <= emax && e + r * smax >= emin) return true;
    return false;
  };
  std::vector<std::uint16_t> cur;
  auto rec = [&](auto&& self, long e) -> void {
    int len = int(cur.size());
    if (e >= emin && e <= emax) {
      if (len_.size() >= cap)
        throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " bar words; lower the truncation");
      std::uint32_t id = std::uint32_t(len_.size());
      off_.push_back(std::uint32_t(flat_.size()));
      flat_.insert(flat_.end(), cur.begin(), cur.end());
      len_.push_back(std::uint8_t(len));
      deg_.push_back(e);
      index_.emplace(code(cur.data(), len), id);
    }
    if (len == N_) return;
    for (std::size_t a = 0; a < m; ++a) {
      long e2 = e + ldeg_[a] - 1;
      if (!reachable(len + 1, e2)) continue;
      cur.push_back(std::uint16_t(a));
      self(self, e2);
      cur.pop_back();
    }
  };
  if (reachable(0, 0)) rec(rec, 0);
}

std::uint64_t WordTable::code(const std::uint16_t* l, int len) const {
  std::uint64_t c = 0;
  for (int i = len - 1; i >= 0; --i) c = c * base_ + (l[i] + 1);
  return c;
}

long WordTable::find(const std::uint16_t* l, int len) const {
  if (len > N_) return -1;
  auto it = index_.find(code(l, len));
  return it == index_.end() ? -1 : long(it->second);
}

std::vector<Word> all_words(std::size_t letters, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t start = 0;
  for (int L = 1; L <= max_len; ++L) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (std::size_t a = 0; a < letters; ++a) {
        Word w = out[i];
        w.push_back(std::uint16_t(a));
        out.push_back(std::move(w));
      }
    start = end;
  }
  return out;
}

// ---- the truncated complexes --------------------------------------------

HochschildSpace::HochschildSpace(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi, Kind kind)
    : A_(A), M_(M), abar_(reduced_part(A)), kind_(kind), N_(N), lo_(lo), hi_(hi) {
  if (A.ring != M.ring) throw Error(ErrorKind::ShapeMismatch, "algebra and module over different rings");
  if (N < 0) throw Error(ErrorKind::WindowTooWide, "negative bar truncation");
  if (hi < lo) throw Error(ErrorKind::WindowTooWide, "empty degree window");
  ldeg_ = abar_.degree;
  const std::size_t m = abar_.dim();
  if (m > 65535) throw Error(ErrorKind::CapExceeded, "algebra too large");
  long tmin = M.dim() ? M.min_degree() : 0, tmax = M.dim() ? M.max_degree() : 0;
  long emin, emax;
  if (kind == Kind::Cochains) {
    emin = tmin - hi;
    emax = tmax - lo;
  } else {
    emin = lo - tmax;
    emax = hi - tmin;
  }
  words_ = WordTable(ldeg_, N, emin, emax);
  basis_.assign(hi - lo + 1, {});
  index_.assign(hi - lo + 1, {});
  for (std::uint32_t w = 0; w < words_.size(); ++w)
    for (std::uint32_t t = 0; t < M.dim(); ++t) {
      int n = degree_of(w, t);
      if (n < lo || n > hi) continue;
      auto& b = basis_[n - lo];
      index_[n - lo].emplace(std::uint64_t(w) * M.dim() + t, std::uint32_t(b.size()));
      b.push_back({w, t});
    }
  dbar_ = abar_.diff;
  dbarT_.assign(m, {});
  for (std::uint32_t b = 0; b < m; ++b)
    for (auto& [c, x] : dbar_[b]) dbarT_[c].push_back({b, x});
  mubar_.assign(m, std::vector<LinComb>(m));
  mubarT_.assign(m, {});
  for (std::uint32_t b = 0; b < m; ++b)
    for (std::uint32_t c = 0; c < m; ++c) {
      LinComb p;
      for (auto& [k, x] : A.mult[abar_.index[b]][abar_.index[c]])
        if (k != A.unit) p.push_back({std::uint32_t(abar_.pos[k]), x});
      for (auto& [k, x] : p) mubarT_[k].push_back({b, c, x});
      mubar_[b][c] = std::move(p);
    }
}

int HochschildSpace::degree_of(std::uint32_t w, std::uint32_t t) const {
  long e = words_.degree(w);
  return kind_ == Kind::Cochains ? int(M_.deg(t) - e) : int(M_.deg(t) + e);
}

std::size_t HochschildSpace::dim(int n) const { return (n < lo_ || n > hi_) ? 0 : basis_[n - lo_].size(); }

long HochschildSpace::index(int n, std::uint32_t w, std::uint32_t t) const {
  if (n < lo_ || n > hi_) return -1;
  auto& ix = index_[n - lo_];
  auto it = ix.find(std::uint64_t(w) * M_.dim() + t);
  return it == ix.end() ? -1 : long(it->second);
}

long HochschildSpace::index_word(int n, const Word& w, std::uint32_t t) const {
  long id = words_.find(w);
  return id < 0 ? -1 : index(n, std::uint32_t(id), t);
}

namespace {

// Push every term of the transported differential of the cochain (w -> v),
// |f| = n, to out(word, len, target, coefficient).
template <class Out>
void push_cochain(const FiniteDgAlgebra& A, const DgBimodule& M, const ReducedPart& ab,
                  const std::vector<LinComb>& dT,
                  const std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Rat>>>& muT, int maxlen,
                  int n, const std::uint16_t* w, int k, const LinComb& v, Out&& out) {
  const auto& ld = ab.degree;
  std::vector<std::uint16_t> buf(k + 1);
  std::vector<long> pre(k + 1, 0);
  for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] + ld[w[i]] - 1;
  std::copy(w, w + k, buf.begin());
  for (auto& [t, x] : v)
    for (auto& [s, y] : M.diff[t]) out(buf.data(), k, s, x * y);
  for (int i = 0; i < k; ++i) {
    std::uint16_t c = w[i];
    for (auto& [b, coef] : dT[c]) {
      buf[i] = std::uint16_t(b);
      Rat f = sgn(n + pre[i]) * coef;
      for (auto& [t, x] : v) out(buf.data(), k, t, f * x);
    }
    buf[i] = c;
  }
  if (k + 1 > maxlen) return;
  for (int i = 0; i < k; ++i) {
    std::copy(w, w + i, buf.begin());
    std::copy(w + i + 1, w + k, buf.begin() + i + 2);
    for (auto& [b, b2, coef] : muT[w[i]]) {
      buf[i] = std::uint16_t(b);
      buf[i + 1] = std::uint16_t(b2);
      Rat f = -sgn(n + pre[i] + ld[b]) * coef;
      for (auto& [t, x] : v) out(buf.data(), k + 1, t, f * x);
    }
  }
  const long ew = pre[k];
  std::copy(w, w + k, buf.begin() + 1);
  for (std::uint16_t a = 0; a < ab.dim(); ++a) {
    buf[0] = a;
    int f = sgn(long(n) * (ld[a] - 1));
    for (auto& [t, x] : v)
      for (auto& [s, y] : M.left[ab.index[a]][t]) out(buf.data(), k + 1, s, f * x * y);
  }
  std::copy(w, w + k, buf.begin());
  for (std::uint16_t a = 0; a < ab.dim(); ++a) {
    buf[k] = a;
    int f = -sgn(n + ew);
    for (auto& [t, x] : v)
      for (auto& [s, y] : M.right[ab.index[a]][t]) out(buf.data(), k + 1, s, f * x * y);
  }
}

}  // namespace

void HochschildSpace::column_cochain(int n, std::size_t col, MatrixBuilder& b) const {
  auto [w, t] = basis_[n - lo_][col];
  LinComb v{{t, Rat(1)}};
  push_cochain(A_, M_, abar_, dbarT_, mubarT_, N_, n, words_.letters(w), words_.length(w), v,
               [&](const std::uint16_t* l, int len, std::uint32_t s, const Rat& c) {
                 long id = words_.find(l, len);
                 long row = id < 0 ? -1 : index(n + 1, std::uint32_t(id), s);
                 if (row < 0) throw std::logic_error("cochain term outside the truncated basis");
                 b.add(std::size_t(row), col, c);
               });
}

void HochschildSpace::column_chain(int n, std::size_t col, MatrixBuilder& b) const {
  auto [wid, t] = basis_[n - lo_][col];
  const std::uint16_t* w = words_.letters(wid);
  const int k = words_.length(wid);
  const auto& ld = ldeg_;
  const int dm = M_.deg(t);
  std::vector<std::uint16_t> buf(w, w + k);
  auto emit = [&](const std::uint16_t* l, int len, std::uint32_t s, const Rat& c) {
    long id = words_.find(l, len);
    long row = id < 0 ? -1 : index(n + 1, std::uint32_t(id), s);
    if (row < 0) throw std::logic_error("chain term outside the truncated basis");
    b.add(std::size_t(row), col, c);
  };
  std::vector<long> pre(k + 1, 0);
  for (int i = 0; i < k; ++i) pre[i + 1] = pre[i] + ld[w[i]] - 1;
  for (auto& [s, y] : M_.diff[t]) emit(buf.data(), k, s, y);
  for (int i = 0; i < k; ++i) {
    for (auto& [c, x] : dbar_[w[i]]) {
      buf[i] = std::uint16_t(c);
      emit(buf.data(), k, t, -sgn(dm + pre[i]) * x);
    }
    buf[i] = w[i];
  }
  std::vector<std::uint16_t> sh;
  for (int i = 0; i + 1 < k; ++i) {
    for (auto& [c, x] : mubar_[w[i]][w[i + 1]]) {
      sh.assign(w, w + i);
      sh.push_back(std::uint16_t(c));
      sh.insert(sh.end(), w + i + 2, w + k);
      emit(sh.data(), k - 1, t, sgn(dm + pre[i] + ld[w[i]]) * x);
    }
  }
  if (k >= 1) {
    for (auto& [s, y] : M_.right[abar_.index[w[0]]][t]) emit(w + 1, k - 1, s, -sgn(dm) * y);
    long e = pre[k - 1];
    int f = sgn(dm + e + long(ld[w[k - 1]]) * (dm + e));
    for (auto& [s, y] : M_.left[abar_.index[w[k - 1]]][t]) emit(w, k - 1, s, f * y);
  }
}

ExactMatrix HochschildSpace::differential(int n) const {
  if (n < lo_ || n >= hi_) throw Error(ErrorKind::WindowTooWide, "differential outside the window");
  MatrixBuilder b(dim(n + 1), dim(n), A_.ring);
  for (std::size_t c = 0; c < dim(n); ++c) {
    if (kind_ == Kind::Cochains)
      column_cochain(n, c, b);
    else
      column_chain(n, c, b);
  }
  return b.build();
}

CochainComplex HochschildSpace::complex() const {
  CochainComplex c;
  c.ring = A_.ring;
  c.lo = lo_;
  for (int n = lo_; n <= hi_; ++n) c.dims.push_back(dim(n));
  for (int n = lo_; n < hi_; ++n) c.d.push_back(differential(n));
  return c;
}

namespace {

// Is shifted degree e a sum of exactly k letters for some k > N?
bool long_word_exists(const std::vector<int>& ldeg, int N, long e) {
  if (ldeg.empty()) return false;
  std::set<long> shifts;
  for (int d : ldeg) shifts.insert(d - 1);
  long smin = *shifts.begin(), smax = *shifts.rbegin();
  if (smin <= 0 && smax >= 0) return true;  // unbounded lengths: be conservative
  if (smax < 0) {
    std::set<long> neg;
    for (long s : shifts) neg.insert(-s);
    shifts = neg;
    e = -e;
    smin = *shifts.begin();
  }
  if (e <= 0) return false;
  long kmax = e / smin;
  if (kmax <= N) return false;
  std::vector<char> reach(e + 1, 0), next(e + 1);
  reach[0] = 1;
  for (long k = 1; k <= kmax; ++k) {
    std::fill(next.begin(), next.end(), 0);
    for (long x = 0; x <= e; ++x)
      if (reach[x])
        for (long s : shifts)
          if (x + s <= e) next[x + s] = 1;
    reach.swap(next);
    if (k > N && reach[e]) return true;
  }
  return false;
}

}  // namespace

bool degree_complete(const HochschildSpace& s, int m) {
  std::set<int> tdeg;
  for (std::size_t t = 0; t < s.module().dim(); ++t) tdeg.insert(s.module().deg(t));
  for (int d : tdeg) {
    long e = s.kind() == HochschildSpace::Kind::Cochains ? long(d) - m : long(m) - d;
    if (long_word_exists(s.letter_degree(), s.N(), e)) return false;
  }
  return true;
}

const DegreeCohomology* HHResult::at(int n) const {
  for (auto& d : degrees)
    if (d.degree == n) return &d;
  return nullptr;
}

namespace {

std::vector<DegreeCohomology> window_cohomology(const HochschildSpace& s, bool reps) {
  auto all = complex_cohomology(s.complex(), reps, false);
  return std::vector<DegreeCohomology>(all.begin() + 1, all.end() - 1);
}

HHResult certified(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi, bool reps,
                   HochschildSpace::Kind kind) {
  HochschildSpace s(A, M, N, lo - 1, hi + 1, kind);
  HHResult r;
  r.N = N;
  r.kind = kind;
  r.degrees = window_cohomology(s, reps);
  std::vector<DegreeCohomology> prev;
  for (auto& d : r.degrees) {
    int n = d.degree;
    bool complete = kind == HochschildSpace::Kind::Cochains ? degree_complete(s, n) && degree_complete(s, n + 1)
                                                            : degree_complete(s, n - 1) && degree_complete(s, n);
    if (complete) {
      d.status = Status::Proved;
      continue;
    }
    if (N == 0) {
      d.status = Status::Unstable;
      continue;
    }
    if (prev.empty()) prev = window_cohomology(HochschildSpace(A, M, N - 1, lo - 1, hi + 1, kind), false);
    d.status = prev[n - lo].same_group(d) ? Status::Certified : Status::Unstable;
  }
  return r;
}

}  // namespace

HHResult hochschild_cohomology(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi,
                               bool representatives) {
  return certified(A, M, N, lo, hi, representatives, HochschildSpace::Kind::Cochains);
}

HHResult hochschild_homology(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi) {
  return certified(A, M, N, lo, hi, false, HochschildSpace::Kind::Chains);
}

// ---- explicit cochains -------------------------------------------------

void HochschildCochain::add(const Word& w, const Vec& v, const Ring& r) {
  auto it = values.find(w);
  if (it == values.end()) it = values.emplace(w, zero_vec(v.size())).first;
  for (std::size_t i = 0; i < v.size(); ++i) it->second[i] = r.reduce(it->second[i] + v[i]);
  if (is_zero(it->second)) values.erase(it);
}

bool HochschildCochain::operator==(const HochschildCochain& o) const {
  return values == o.values && (values.empty() || degree == o.degree);
}

int HochschildCochain::max_length() const {
  int L = 0;
  for (auto& [w, v] : values) L = std::max(L, int(w.size()));
  return L;
}

HochschildCochain cochain_from_vector(const HochschildSpace& s, int n, const Vec& v) {
  HochschildCochain f;
  f.degree = n;
  const std::size_t dm = s.module().dim();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    auto [w, t] = s.elem(n, i);
    Vec x = zero_vec(dm);
    x[t] = v[i];
    f.add(s.words().word(w), x, s.algebra().ring);
  }
  return f;
}

Vec cochain_to_vector(const HochschildSpace& s, int n, const HochschildCochain& f) {
  Vec v = zero_vec(s.dim(n));
  for (auto& [w, x] : f.values)
    for (std::uint32_t t = 0; t < x.size(); ++t) {
      if (x[t] == 0) continue;
      long i = s.index_word(n, w, t);
      if (i < 0) {
        if (int(w.size()) > s.N()) continue;
        throw Error(ErrorKind::ShapeMismatch, "cochain has a component outside degree " + std::to_string(n));
      }
      v[i] = x[t];
    }
  return v;
}

HochschildCochain cochain_differential(const FiniteDgAlgebra& A, const DgBimodule& M, const HochschildCochain& f) {
  ReducedPart ab = reduced_part(A);
  const std::size_t m = ab.dim();
  std::vector<LinComb> dT(m);
  for (std::uint32_t b = 0; b < m; ++b)
    for (auto& [c, x] : ab.diff[b]) dT[c].push_back({b, x});
  std::vector<std::vector<std::tuple<std::uint32_t, std::uint32_t, Rat>>> muT(m);
  for (std::uint32_t b = 0; b < m; ++b)
    for (std::uint32_t c = 0; c < m; ++c)
      for (auto& [k, x] : A.mult[ab.index[b]][ab.index[c]])
        if (k != A.unit) muT[ab.pos[k]].push_back({b, c, x});
  HochschildCochain out;
  out.degree = f.degree + 1;
  std::map<Word, Vec> acc;
  for (auto& [w, v] : f.values) {
    push_cochain(A, M, ab, dT, muT, int(w.size()) + 1, f.degree, w.data(), int(w.size()), to_sparse(v),
                 [&](const std::uint16_t* l, int len, std::uint32_t s, const Rat& c) {
                   auto& x = acc.try_emplace(Word(l, l + len), zero_vec(M.dim())).first->second;
                   x[s] += c;
                 });
  }
  for (auto& [w, x] : acc) out.add(w, x, A.ring);
  return out;
}

HochschildCochain cup_product(const FiniteDgAlgebra& A, const HochschildCochain& phi, const HochschildCochain& psi) {
  return cup_product(A, A, phi, psi);
}

HochschildCochain cup_product(const FiniteDgAlgebra& A, const FiniteDgAlgebra& R, const HochschildCochain& phi,
                              const HochschildCochain& psi) {
  ReducedPart ab = reduced_part(A);
  HochschildCochain out;
  out.degree = phi.degree + psi.degree;
  for (auto& [w1, v1] : phi.values) {
    long e = eps(ab.degree, w1.data(), int(w1.size()));
    int f = sgn(long(psi.degree) * e);
    for (auto& [w2, v2] : psi.values) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      Vec p = R.mul(v1, v2);
      if (f < 0)
        for (auto& x : p) x = -x;
      out.add(w, p, R.ring);
    }
  }
  return out;
}

HochschildCochain unit_cochain(const FiniteDgAlgebra& A) {
  HochschildCochain u;
  u.degree = 0;
  u.values[Word{}] = A.unit_vec();
  return u;
}

// ---- the bar resolution --------------------------------------------------

namespace {

void add_term(BarElem& x, const BarTerm& t, const Rat& c, const Ring& r) {
  if (c == 0) return;
  auto it = x.find(t);
  if (it == x.end()) {
    Rat v = r.reduce(c);
    if (v != 0) x.emplace(t, v);
    return;
  }
  it->second = r.reduce(it->second + c);
  if (it->second == 0) x.erase(it);
}

// a0 . y . a1 for basis elements a0, a1 of A
BarElem act(const FiniteDgAlgebra& A, std::uint32_t a0, const BarElem& y, std::uint32_t a1) {
  BarElem out;
  for (auto& [t, c] : y)
    for (auto& [l, x] : A.mult[a0][t.a0])
      for (auto& [r, z] : A.mult[t.a1][a1]) add_term(out, {l, t.w, r}, c * x * z, A.ring);
  return out;
}

// D(1|w|1)
BarElem bar_d_generator(const FiniteDgAlgebra& A, const ReducedPart& ab, const Word& w) {
  BarElem out;
  const auto& ld = ab.degree;
  const int k = int(w.size());
  const std::uint32_t u = std::uint32_t(A.unit);
  long pre = 0;
  for (int i = 0; i < k; ++i) {
    for (auto& [c, x] : ab.diff[w[i]]) {
      Word w2 = w;
      w2[i] = std::uint16_t(c);
      add_term(out, {u, w2, u}, -sgn(pre) * x, A.ring);
    }
    if (i + 1 < k)
      for (auto& [c, x] : A.mult[ab.index[w[i]]][ab.index[w[i + 1]]]) {
        if (c == A.unit) continue;
        Word w2(w.begin(), w.begin() + i);
        w2.push_back(std::uint16_t(ab.pos[c]));
        w2.insert(w2.end(), w.begin() + i + 2, w.end());
        add_term(out, {u, w2, u}, sgn(pre + ld[w[i]]) * x, A.ring);
      }
    pre += ld[w[i]] - 1;
  }
  if (k >= 1) {
    add_term(out, {std::uint32_t(ab.index[w[0]]), Word(w.begin() + 1, w.end()), u}, Rat(-1), A.ring);
    long e = eps(ld, w.data(), k - 1);
    add_term(out, {u, Word(w.begin(), w.end() - 1), std::uint32_t(ab.index[w[k - 1]])}, Rat(sgn(e)), A.ring);
  }
  return out;
}

// apply the A^e-linear map F to x
BarElem apply_endo(const FiniteDgAlgebra& A, const EndoCochain& F, const BarElem& x) {
  BarElem out;
  for (auto& [t, c] : x) {
    auto it = F.values.find(t.w);
    if (it == F.values.end()) continue;
    int f = sgn(long(F.degree) * A.deg(t.a0));
    for (auto& [t2, c2] : act(A, t.a0, it->second, t.a1)) add_term(out, t2, f * c * c2, A.ring);
  }
  return out;
}

}  // namespace

BarElem bar_differential(const FiniteDgAlgebra& A, const BarElem& x) {
  ReducedPart ab = reduced_part(A);
  BarElem out;
  for (auto& [t, c] : x) {
    long e = eps(ab.degree, t.w.data(), int(t.w.size()));
    for (auto& [a, y] : A.diff[t.a0]) add_term(out, {a, t.w, t.a1}, c * y, A.ring);
    BarElem g = bar_d_generator(A, ab, t.w);
    for (auto& [t2, c2] : act(A, t.a0, g, t.a1)) add_term(out, t2, sgn(A.deg(t.a0)) * c * c2, A.ring);
    for (auto& [a, y] : A.diff[t.a1]) add_term(out, {t.a0, t.w, a}, sgn(A.deg(t.a0) + e) * c * y, A.ring);
  }
  return out;
}

EndoCochain lift_tilde(const FiniteDgAlgebra& A, const HochschildCochain& phi, int max_len) {
  ReducedPart ab = reduced_part(A);
  EndoCochain F;
  F.degree = phi.degree;
  const std::uint32_t u = std::uint32_t(A.unit);
  for (auto& w : all_words(ab.dim(), max_len)) {
    BarElem val;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      auto it = phi.values.find(Word(w.begin(), w.begin() + k));
      if (it == phi.values.end()) continue;
      Word rest(w.begin() + k, w.end());
      for (std::uint32_t j = 0; j < it->second.size(); ++j) add_term(val, {j, rest, u}, it->second[j], A.ring);
    }
    if (!val.empty()) F.values[w] = std::move(val);
  }
  return F;
}

EndoCochain lift_hat(const FiniteDgAlgebra& A, const HochschildCochain& phi, int max_len) {
  ReducedPart ab = reduced_part(A);
  EndoCochain F;
  F.degree = phi.degree;
  const std::uint32_t u = std::uint32_t(A.unit);
  for (auto& w : all_words(ab.dim(), max_len)) {
    BarElem val;
    for (std::size_t k = 0; k <= w.size(); ++k) {
      auto it = phi.values.find(Word(w.begin() + k, w.end()));
      if (it == phi.values.end()) continue;
      Word front(w.begin(), w.begin() + k);
      int f = sgn(long(phi.degree) * eps(ab.degree, front.data(), int(k)));
      for (std::uint32_t j = 0; j < it->second.size(); ++j) add_term(val, {u, front, j}, f * it->second[j], A.ring);
    }
    if (!val.empty()) F.values[w] = std::move(val);
  }
  return F;
}

HochschildCochain eps_star(const FiniteDgAlgebra& A, const EndoCochain& F) {
  HochschildCochain f;
  f.degree = F.degree;
  for (auto& [w, x] : F.values) {
    Vec v = zero_vec(A.dim());
    for (auto& [t, c] : x)
      if (t.w.empty())
        for (auto& [k, y] : A.mult[t.a0][t.a1]) v[k] += c * y;
    f.add(w, v, A.ring);
  }
  return f;
}

EndoCochain truncate(const EndoCochain& F, int max_len) {
  EndoCochain G;
  G.degree = F.degree;
  for (auto& [w, x] : F.values)
    if (int(w.size()) <= max_len) G.values[w] = x;
  return G;
}

EndoCochain compose(const FiniteDgAlgebra& A, const EndoCochain& F, const EndoCochain& G, int max_len) {
  EndoCochain H;
  H.degree = F.degree + G.degree;
  for (auto& [w, x] : G.values) {
    if (int(w.size()) > max_len) continue;
    BarElem y = apply_endo(A, F, x);
    if (!y.empty()) H.values[w] = std::move(y);
  }
  return H;
}

EndoCochain endo_differential(const FiniteDgAlgebra& A, const EndoCochain& F, int max_len) {
  ReducedPart ab = reduced_part(A);
  EndoCochain out;
  out.degree = F.degree + 1;
  for (auto& w : all_words(ab.dim(), max_len)) {
    BarElem val;
    auto it = F.values.find(w);
    if (it != F.values.end()) val = bar_differential(A, it->second);
    int f = -sgn(F.degree);
    for (auto& [t, c] : apply_endo(A, F, bar_d_generator(A, ab, w))) add_term(val, t, f * c, A.ring);
    if (!val.empty()) out.values[w] = std::move(val);
  }
  return out;
}

}  // namespace hh
