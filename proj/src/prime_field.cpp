#include "epistrict/prime_field.hpp"

#include <stdexcept>
#include <string>

#include "epistrict/errors.hpp"

namespace epistrict {

bool is_prime(Elem n) {
  if (n < 2) return false;
  for (Elem k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(Elem d) : d_(d), inv2_(0) {
  if (d % 2 == 0 && d > 0) {
    if (d == 2) throw CharacteristicTwoError();
    throw std::invalid_argument("field order " + std::to_string(d) + " is even, hence not an odd prime");
  }
  if (!is_prime(d)) {
    throw std::invalid_argument("field order " + std::to_string(d) + " is not prime");
  }
  // d odd, so (d + 1) / 2 is the inverse of two.
  inv2_ = (d + 1) / 2;
}

Elem PrimeField::pow(Elem base, std::uint64_t exp) const {
  Elem result = 1;
  Elem b = reduce(base);
  while (exp > 0) {
    if (exp & 1U) result = mul(result, b);
    b = mul(b, b);
    exp >>= 1U;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  Elem r = reduce(a);
  if (r == 0) throw std::domain_error("zero has no inverse in Z_" + std::to_string(d_));
  return pow(r, static_cast<std::uint64_t>(d_ - 2));
}

}  // namespace epistrict
