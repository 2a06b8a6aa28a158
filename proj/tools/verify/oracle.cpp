#include "oracle.hpp"

#include <sstream>

namespace hh::verify {

std::size_t DenseCochainComplex::total_dim() const {
  std::size_t t = 0;
  for (auto& b : basis) t += b.size();
  return t;
}

namespace {

using Letters = std::vector<std::size_t>;

void words_up_to(const std::vector<std::size_t>& letters, int N, Letters& cur, std::vector<Letters>& out) {
  out.push_back(cur);
  if (int(cur.size()) == N) return;
  for (auto a : letters) {
    cur.push_back(a);
    words_up_to(letters, N, cur, out);
    cur.pop_back();
  }
}

}  // namespace

DenseCochainComplex naive_cochain_complex(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi) {
  const std::size_t n_a = A.dim(), n_m = M.dim();
  std::vector<std::size_t> letters;
  for (std::size_t i = 0; i < n_a; ++i)
    if (i != A.unit) letters.push_back(i);
  // dense structure constants; unit components dropped for the reduced bar
  auto dense = [&](const LinComb& c, std::size_t n) {
    std::vector<Rat> v(n, Rat(0));
    for (auto& [k, x] : c) v[k] += x;
    return v;
  };
  std::vector<std::vector<std::vector<Rat>>> mu(n_a, std::vector<std::vector<Rat>>(n_a));
  std::vector<std::vector<Rat>> dA(n_a);
  for (std::size_t i = 0; i < n_a; ++i) {
    dA[i] = dense(A.diff[i], n_a);
    dA[i][A.unit] = 0;
    for (std::size_t j = 0; j < n_a; ++j) {
      mu[i][j] = dense(A.mult[i][j], n_a);
      mu[i][j][A.unit] = 0;
    }
  }
  std::vector<std::vector<std::vector<Rat>>> left(n_a, std::vector<std::vector<Rat>>(n_m)), right = left;
  std::vector<std::vector<Rat>> dM(n_m);
  for (std::size_t t = 0; t < n_m; ++t) {
    dM[t] = dense(M.diff[t], n_m);
    for (std::size_t a = 0; a < n_a; ++a) {
      left[a][t] = dense(M.left[a][t], n_m);
      right[a][t] = dense(M.right[a][t], n_m);
    }
  }

  std::vector<Letters> words;
  Letters cur;
  words_up_to(letters, N, cur, words);
  auto shifted = [&](const Letters& w, std::size_t upto) {
    long e = 0;
    for (std::size_t i = 0; i < upto; ++i) e += A.deg(w[i]) - 1;
    return e;
  };

  DenseCochainComplex out;
  out.lo = lo;
  out.hi = hi;
  out.basis.assign(hi - lo + 1, {});
  for (auto& w : words)
    for (std::size_t t = 0; t < n_m; ++t) {
      long n = M.deg(t) - shifted(w, w.size());
      if (n >= lo && n <= hi) out.basis[n - lo].push_back({w, t});
    }

  for (int n = lo; n < hi; ++n) {
    const auto& cols = out.basis[n - lo];
    const auto& rows = out.basis[n + 1 - lo];
    std::vector<std::vector<Rat>> D(rows.size(), std::vector<Rat>(cols.size(), Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& [fw, ft] = cols[c];
      // f sends the word fw to e_ft and every other word to 0
      auto F = [&](const Letters& w) {
        std::vector<Rat> v(n_m, Rat(0));
        if (w == fw) v[ft] = 1;
        return v;
      };
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& [u, s] = rows[r];
        const std::size_t m = u.size();
        std::vector<Rat> val(n_m, Rat(0));
        // d_M f(u)
        auto fu = F(u);
        for (std::size_t t = 0; t < n_m; ++t)
          for (std::size_t k = 0; k < n_m; ++k) val[k] += dM[t][k] * fu[t];
        // f applied to d of one letter
        for (std::size_t i = 0; i < m; ++i) {
          int sign = ((n + shifted(u, i)) % 2 == 0) ? 1 : -1;
          for (std::size_t b = 0; b < n_a; ++b) {
            if (dA[u[i]][b] == 0) continue;
            Letters v = u;
            v[i] = b;
            auto fv = F(v);
            for (std::size_t k = 0; k < n_m; ++k) val[k] += sign * dA[u[i]][b] * fv[k];
          }
        }
        // f applied to the product of two neighbours
        for (std::size_t i = 0; i + 1 < m; ++i) {
          long e = n + shifted(u, i) + A.deg(u[i]);
          int sign = (e % 2 == 0) ? -1 : 1;
          for (std::size_t b = 0; b < n_a; ++b) {
            if (mu[u[i]][u[i + 1]][b] == 0) continue;
            Letters v(u.begin(), u.begin() + i);
            v.push_back(b);
            v.insert(v.end(), u.begin() + i + 2, u.end());
            auto fv = F(v);
            for (std::size_t k = 0; k < n_m; ++k) val[k] += sign * mu[u[i]][u[i + 1]][b] * fv[k];
          }
        }
        if (m >= 1) {
          // u_1 . f(u_2 ... u_m)
          Letters tail(u.begin() + 1, u.end());
          auto ft_ = F(tail);
          long e = long(n) * (A.deg(u[0]) - 1);
          int sign = (e % 2 == 0) ? 1 : -1;
          for (std::size_t t = 0; t < n_m; ++t)
            for (std::size_t k = 0; k < n_m; ++k) val[k] += sign * left[u[0]][t][k] * ft_[t];
          // f(u_1 ... u_{m-1}) . u_m
          Letters head(u.begin(), u.end() - 1);
          auto fh = F(head);
          long e2 = n + shifted(u, m - 1);
          int sign2 = (e2 % 2 == 0) ? -1 : 1;
          for (std::size_t t = 0; t < n_m; ++t)
            for (std::size_t k = 0; k < n_m; ++k) val[k] += sign2 * right[u[m - 1]][t][k] * fh[t];
        }
        D[r][c] = A.ring.reduce(val[s]);
      }
    }
    out.d.push_back(std::move(D));
  }
  return out;
}

std::string compare(const HochschildSpace& s, const DenseCochainComplex& o, std::size_t* entries) {
  std::ostringstream err;
  std::size_t count = 0;
  const auto& pos = s.abar().pos;
  std::vector<std::vector<std::size_t>> to_engine(o.hi - o.lo + 1);
  for (int n = o.lo; n <= o.hi; ++n) {
    const auto& b = o.basis[n - o.lo];
    if (s.dim(n) != b.size()) {
      err << "degree " << n << ": dimension " << s.dim(n) << " vs " << b.size();
      return err.str();
    }
    for (auto& [w, t] : b) {
      hh::Word ew;
      for (auto a : w) ew.push_back(std::uint16_t(pos[a]));
      long i = s.index_word(n, ew, std::uint32_t(t));
      if (i < 0) {
        err << "degree " << n << ": basis element missing from the engine";
        return err.str();
      }
      to_engine[n - o.lo].push_back(std::size_t(i));
    }
  }
  for (int n = o.lo; n < o.hi; ++n) {
    auto D = s.differential(n).dense();
    const auto& od = o.d[n - o.lo];
    const auto& rc = to_engine[n + 1 - o.lo];
    const auto& cc = to_engine[n - o.lo];
    for (std::size_t r = 0; r < od.size(); ++r)
      for (std::size_t c = 0; c < od[r].size(); ++c) {
        ++count;
        if (D[rc[r]][cc[c]] != od[r][c]) {
          err << "degree " << n << ": entry (" << r << ", " << c << ") is " << D[rc[r]][cc[c]].get_str()
              << " in the engine and " << od[r][c].get_str() << " in the oracle";
          return err.str();
        }
      }
  }
  if (entries) *entries += count;
  return {};
}

}  // namespace hh::verify
