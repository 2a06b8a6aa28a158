#include "hh/complex.hpp"

#include <sstream>

#include "hh/error.hpp"

namespace hh {

const char* status_name(Status s) {
  switch (s) {
    case Status::Proved: return "proved";
    case Status::Certified: return "certified";
    case Status::Unstable: return "unstable";
    case Status::Edge: return "edge";
  }
  return "?";
}

std::string DegreeCohomology::group_string(const Ring& r) const {
  std::ostringstream os;
  bool any = false;
  if (rank) {
    if (r.kind() == Ring::Kind::Integers)
      os << "Z";
    else if (r.kind() == Ring::Kind::Rationals)
      os << "Q";
    else
      os << "F_" << r.p();
    if (rank > 1) os << "^" << rank;
    any = true;
  }
  for (auto& t : torsion) {
    if (any) os << " + ";
    os << "Z/" << t.get_str();
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void check_complex(const CochainComplex& c) {
  if (c.dims.empty()) return;
  if (c.d.size() + 1 != c.dims.size()) throw Error(ErrorKind::ShapeMismatch, "need one differential between consecutive degrees");
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    if (c.d[i].cols() != c.dims[i] || c.d[i].rows() != c.dims[i + 1])
      throw Error(ErrorKind::ShapeMismatch, "differential out of degree " + std::to_string(c.lo + int(i)) + " has shape " +
                                                std::to_string(c.d[i].rows()) + "x" + std::to_string(c.d[i].cols()));
  }
  for (std::size_t i = 0; i + 1 < c.d.size(); ++i) {
    auto p = c.d[i + 1] * c.d[i];
    if (auto w = p.first_nonzero())
      throw Error(ErrorKind::NotAComplex, "d∘d != 0 starting in degree " + std::to_string(c.lo + int(i)) + ": entry (" +
                                              std::to_string(w->first.first) + "," + std::to_string(w->first.second) +
                                              ") = " + w->second.get_str());
  }
}

std::vector<DegreeCohomology> complex_cohomology(const CochainComplex& c, bool reps, bool check) {
  if (check) check_complex(c);
  std::vector<DegreeCohomology> out;
  const std::size_t L = c.dims.size();
  std::vector<std::size_t> rk(c.d.size());
  std::vector<std::vector<Int>> divs(c.d.size());
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    if (c.ring.kind() == Ring::Kind::Integers) {
      divs[i] = elementary_divisors(c.d[i]);
      rk[i] = divs[i].size();
    } else {
      rk[i] = rank(c.d[i]);
    }
  }
  for (std::size_t i = 0; i < L; ++i) {
    DegreeCohomology h;
    h.degree = c.lo + int(i);
    h.dim = c.dims[i];
    std::size_t in = i > 0 ? rk[i - 1] : 0, outr = i + 1 < L ? rk[i] : 0;
    h.rank = h.dim - in - outr;
    if (i > 0 && c.ring.kind() == Ring::Kind::Integers)
      for (auto& x : divs[i - 1])
        if (x > 1) h.torsion.push_back(x);
    h.status = (i == 0 || i + 1 == L) ? Status::Edge : Status::Proved;
    if (reps) {
      ClassReducer cr(i > 0 ? &c.d[i - 1] : nullptr, i + 1 < L ? &c.d[i] : nullptr, h.dim, c.ring);
      h.representatives = cr.generators();
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace hh
