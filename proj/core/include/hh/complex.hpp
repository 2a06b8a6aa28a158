#pragma once
#include <string>
#include <vector>

#include "hh/linalg.hpp"

namespace hh {

enum class Status { Proved, Certified, Unstable, Edge };
const char* status_name(Status s);

// C^lo -> C^{lo+1} -> ... -> C^hi ; d[i] : C^{lo+i} -> C^{lo+i+1}
struct CochainComplex {
  Ring ring;
  int lo = 0;
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> d;

  int hi() const { return lo + int(dims.size()) - 1; }
  std::size_t dim(int n) const { return (n < lo || n > hi()) ? 0 : dims[n - lo]; }
  const ExactMatrix* diff(int n) const {  // C^n -> C^{n+1}
    return (n < lo || n >= hi()) ? nullptr : &d[n - lo];
  }
};

struct DegreeCohomology {
  int degree = 0;
  std::size_t dim = 0;        // dimension of the cochain space
  std::size_t rank = 0;       // free rank (dimension over a field)
  std::vector<Int> torsion;   // invariant factors > 1
  Status status = Status::Proved;
  std::vector<Vec> representatives;  // torsion generators first, then free

  bool same_group(const DegreeCohomology& o) const { return rank == o.rank && torsion == o.torsion; }
  std::string group_string(const Ring& r = Ring::Z()) const;  // "Z^2 + Z/2", "Q^3", "F_2^1"
};

// Throws ShapeMismatch or NotAComplex (with degree and witness entry).
void check_complex(const CochainComplex& c);

// Cohomology in every degree of the window. The two boundary degrees are
// flagged Edge; interior degrees are exact for the given complex.
std::vector<DegreeCohomology> complex_cohomology(const CochainComplex& c, bool representatives = false,
                                                 bool check = true);

}  // namespace hh
