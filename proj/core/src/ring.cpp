#include "hh/ring.hpp"

#include "hh/error.hpp"

namespace hh {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::UnitNotSplit: return "UnitNotSplit";
    case ErrorKind::WindowTooWide: return "WindowTooWide";
    case ErrorKind::InvalidAction: return "InvalidAction";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::OrbitCollision: return "OrbitCollision";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Error";
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Ring Ring::Fp(unsigned long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidRing, "fp:" + std::to_string(p) + " is not prime");
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& s) {
  if (s == "z" || s == "Z") return Z();
  if (s == "q" || s == "Q") return Q();
  if (s.rfind("fp:", 0) == 0) {
    std::size_t pos = 0;
    unsigned long p = 0;
    try {
      p = std::stoul(s.substr(3), &pos);
    } catch (...) {
      throw Error(ErrorKind::InvalidRing, "bad prime in '" + s + "'");
    }
    if (pos + 3 != s.size()) throw Error(ErrorKind::InvalidRing, "bad prime in '" + s + "'");
    return Fp(p);
  }
  throw Error(ErrorKind::InvalidRing, "unknown ring '" + s + "' (expected z, q or fp:<p>)");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers: return "z";
    case Kind::Rationals: return "q";
    case Kind::PrimeField: return "fp:" + std::to_string(p_);
  }
  return "?";
}

Rat Ring::reduce(const Rat& x) const {
  switch (kind_) {
    case Kind::Integers:
      if (x.get_den() != 1) throw Error(ErrorKind::InvalidRing, "non-integral value " + x.get_str() + " over z");
      return x;
    case Kind::Rationals: return x;
    case Kind::PrimeField: {
      Int P(p_);
      Int den = x.get_den();
      Int dm = den % P;
      if (dm == 0) throw Error(ErrorKind::InvalidRing, "denominator divisible by p in " + x.get_str());
      Int inv;
      mpz_invert(inv.get_mpz_t(), dm.get_mpz_t(), P.get_mpz_t());
      Int num = x.get_num() % P;
      Int r = (num * inv) % P;
      if (r < 0) r += P;
      return Rat(r);
    }
  }
  return x;
}

bool Ring::is_unit(const Rat& x) const {
  if (kind_ == Kind::Integers) return x == 1 || x == -1;
  return x != 0;
}

Rat Ring::inv(const Rat& x) const {
  if (kind_ == Kind::Integers) return x;  // only called on units
  if (kind_ == Kind::Rationals) return 1 / x;
  return reduce(Rat(1) / x);
}

bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace hh
