#pragma once
#include <string>
#include <vector>

#include "hh/bar.hpp"

namespace hh::verify {

// Hochschild cochains built by enumerating every word and evaluating the
// differential on it, with dense matrices. Shares no code with HochschildSpace.
struct DenseCochainComplex {
  int lo = 0, hi = 0;
  // basis[n - lo] = (word as indices into A, module basis index)
  std::vector<std::vector<std::pair<std::vector<std::size_t>, std::size_t>>> basis;
  std::vector<std::vector<std::vector<Rat>>> d;  // d[n - lo] : degree n -> n + 1, row-major

  std::size_t total_dim() const;
};

DenseCochainComplex naive_cochain_complex(const FiniteDgAlgebra& A, const DgBimodule& M, int N, int lo, int hi);

// Empty when the matrices agree entrywise under the (word, target) bijection,
// otherwise the first disagreement. `entries` counts the compared entries.
std::string compare(const HochschildSpace& s, const DenseCochainComplex& o, std::size_t* entries = nullptr);

}  // namespace hh::verify
