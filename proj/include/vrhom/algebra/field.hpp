#pragma once

#include <cstdint>
#include <string>

#include "vrhom/algebra/matrix.hpp"

namespace vrhom {

/// ℚ with exact rationals.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const { return Element(v); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element div(const Element& a, const Element& b) const { return a / b; }
  Element neg(const Element& a) const { return -a; }
  bool is_zero(const Element& a) const { return a == 0; }
  Rational to_rational(const Element& a) const { return a; }
  Element from_rational(const Rational& r) const { return r; }
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// 𝔽_p for a prime p < 2^31; elements are canonical residues.
struct PrimeField {
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (!is_prime(p) || p >= (1ull << 31)) {
      throw Error(ErrorKind::unsupported_coefficients, std::to_string(p) + " is not a supported prime");
    }
  }

  std::uint64_t p;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    const long long m = static_cast<long long>(p);
    return static_cast<Element>(((v % m) + m) % m);
  }
  Element add(Element a, Element b) const { return (a + b) % p; }
  Element sub(Element a, Element b) const { return (a + p - b) % p; }
  Element mul(Element a, Element b) const { return (a * b) % p; }
  Element neg(Element a) const { return a == 0 ? 0 : p - a; }
  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::invalid_argument, "division by zero in prime field");
    Element result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  Rational to_rational(Element a) const { return Rational(a); }
  Element from_rational(const Rational& r) const {
    const BigInt m(p);
    BigInt num = numerator(r) % m;
    BigInt den = denominator(r) % m;
    if (num < 0) num += m;
    return div(static_cast<Element>(num), static_cast<Element>(den));
  }
};

/// Coefficient choice for (co)homology: ℤ, ℚ, or 𝔽_p.
class Coefficients {
 public:
  enum class Kind { integers, rationals, prime };

  static Coefficients integers() { return Coefficients(Kind::integers, 0); }
  static Coefficients rationals() { return Coefficients(Kind::rationals, 0); }
  static Coefficients prime_field(std::uint64_t p) {
    (void)PrimeField(p);
    return Coefficients(Kind::prime, p);
  }

  /// "z", "q", or "zp:P".
  static Coefficients parse(const std::string& text) {
    if (text == "z" || text == "Z") return integers();
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("zp:", 0) == 0) {
      try {
        std::size_t used = 0;
        const auto p = std::stoull(text.substr(3), &used);
        if (used == text.size() - 3) return prime_field(p);
      } catch (const std::logic_error&) {
      }
    }
    throw Error(ErrorKind::unsupported_coefficients, "unknown coefficients '" + text + "' (use z, q, zp:P)");
  }

  Kind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return prime_; }
  bool is_field() const noexcept { return kind_ != Kind::integers; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::integers: return "z";
      case Kind::rationals: return "q";
      case Kind::prime: return "zp:" + std::to_string(prime_);
    }
    return "?";
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  Coefficients(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}
  Kind kind_;
  std::uint64_t prime_;
};

/// Calls `fn(field)` with the concrete field of a field coefficient choice.
template <class Fn>
decltype(auto) visit_field(const Coefficients& coeffs, Fn&& fn) {
  switch (coeffs.kind()) {
    case Coefficients::Kind::rationals: return fn(RationalField{});
    case Coefficients::Kind::prime: return fn(PrimeField(coeffs.prime()));
    case Coefficients::Kind::integers: break;
  }
  throw Error(ErrorKind::unsupported_coefficients, "operation requires field coefficients (q or zp:P)");
}

}  // namespace vrhom
