#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace hh {

using Int = mpz_class;
using Rat = mpq_class;

// Base ring of every computation. Elements are carried as Rat; over Z they
// are integral, over F_p they are integers in [0, p).
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  Ring() = default;
  static Ring Z() { return Ring(Kind::Integers, 0); }
  static Ring Q() { return Ring(Kind::Rationals, 0); }
  static Ring Fp(unsigned long p);
  // "z", "q", "fp:<p>"
  static Ring parse(const std::string& s);

  Kind kind() const { return kind_; }
  unsigned long p() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  Rat reduce(const Rat& x) const;
  bool is_unit(const Rat& x) const;
  Rat inv(const Rat& x) const;

  bool operator==(const Ring& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}
  Kind kind_ = Kind::Integers;
  unsigned long p_ = 0;
};

bool is_prime(unsigned long n);

using Vec = std::vector<Rat>;

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }
bool is_zero(const Vec& v);

// (-1)^e
inline int sgn(long e) { return (e & 1) ? -1 : 1; }

}  // namespace hh
