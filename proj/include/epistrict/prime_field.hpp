#pragma once

#include <cstdint>
#include <compare>

namespace epistrict {

using Elem = std::int64_t;

/// The prime field Z_d for an odd prime d.
///
/// Elements are plain integers in [0, d). Construction rejects d = 2 with
/// CharacteristicTwoError and any other non-prime with std::invalid_argument,
/// so a live PrimeField always carries a valid inverse of two.
class PrimeField {
 public:
  explicit PrimeField(Elem d);

  Elem order() const { return d_; }
  Elem inv2() const { return inv2_; }

  Elem reduce(Elem x) const {
    Elem r = x % d_;
    return r < 0 ? r + d_ : r;
  }
  Elem add(Elem a, Elem b) const { return reduce(a + b); }
  Elem sub(Elem a, Elem b) const { return reduce(a - b); }
  Elem mul(Elem a, Elem b) const { return reduce(a * b); }
  Elem neg(Elem a) const { return reduce(-a); }
  Elem pow(Elem base, std::uint64_t exp) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;

  bool operator==(const PrimeField& o) const { return d_ == o.d_; }

 private:
  Elem d_;
  Elem inv2_;
};

bool is_prime(Elem n);

}  // namespace epistrict
