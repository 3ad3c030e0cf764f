#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "epistrict/fp_linalg.hpp"
#include "epistrict/relation.hpp"

namespace epistrict {

/// Candidate algebra (X, m, e) in the category of finite relations:
/// multiplication m: X x X -> X and counit e: X -> 1. The unit state is e^dagger.
class DaggerFrobenius {
 public:
  /// Throws DimensionMismatch on badly shaped m or e.
  DaggerFrobenius(FinSet carrier, Relation m, Relation e);

  const FinSet& carrier() const { return x_; }
  const Relation& multiplication() const { return m_; }
  const Relation& counit() const { return e_; }
  Relation unit_state() const { return dagger(e_); }
  /// eta = m^dagger o e^dagger : 1 -> X x X.
  Relation eta() const;

  bool operator==(const DaggerFrobenius& o) const { return x_ == o.x_ && m_ == o.m_ && e_ == o.e_; }

 private:
  FinSet x_;
  Relation m_;
  Relation e_;
};

struct FrobeniusReport {
  bool frobenius = false;    // (F)
  bool special = false;      // (M)
  bool associative = false;  // (A)
  bool unital = false;       // (U)
  /// The elements u with m(u,x), m(x,u) contained in {x} for every x, as a
  /// counit X -> 1, when they form a two-sided unit.
  std::optional<Relation> unit;

  bool all() const { return frobenius && special && associative && unital; }
  /// Names of the failing axioms, e.g. {"A", "U"}.
  std::vector<std::string> failures() const;
};

FrobeniusReport verify_frobenius(const DaggerFrobenius& alg);
/// Snake equations for eta = m^dagger o e^dagger.
bool verify_compact(const DaggerFrobenius& alg);
/// Snake equations for an explicitly supplied cup 1 -> X x X.
bool verify_compact(const DaggerFrobenius& alg, const Relation& eta);

/// Both Frobenius-morphism conditions for r: X -> Y, with the name
/// [r] = (1 x r) o eta_X : 1 -> X x Y.
bool verify_frobenius_morphism(const Relation& r, const DaggerFrobenius& a, const DaggerFrobenius& b);

/// Z_d x Z_d labelled 1..d^2, label k <-> (block, offset) = ((k-1) div d, (k-1) mod d).
FinSet spek_carrier(const PrimeField& field);
/// Disjoint union of d copies of Z_d: (i,a)(i,b) = (i,a+b); counit on the (i,0).
DaggerFrobenius build_spek_algebra(const PrimeField& field);
/// Transport of an algebra along the carrier bijection x -> perm[x].
DaggerFrobenius relabel(const DaggerFrobenius& alg, const std::vector<std::size_t>& perm);
/// The Spek algebra whose copyable states are the level sets of the n = 1
/// functional f, obtained by relabelling along a symplectic point map.
DaggerFrobenius observable_algebra(const PrimeField& field, const FpVector& f);

/// y ~ (x, xy), i.e. (1 x m) o (cup x 1) : X -> X x X. For Spek at d = 3
/// this is the 9 x 9 Spek relation table.
Relation table_relation(const DaggerFrobenius& alg);

bool is_copyable(const DaggerFrobenius& alg, const Relation& state);
/// Copyable states c: 1 -> X with m^dagger o c = c x c and e o c nonempty,
/// ordered by least member.
std::vector<Relation> copyable_states(const DaggerFrobenius& alg);

/// `ALG carrier=<n>` followed by a REL block for m (dom = n*n) and one for e (cod = 1).
void write_algebra(std::ostream& out, const DaggerFrobenius& alg);
/// Throws ParseError on malformed text and DimensionMismatch on bad shapes.
DaggerFrobenius read_algebra(std::istream& in);

}  // namespace epistrict
