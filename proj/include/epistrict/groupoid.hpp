#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "epistrict/fp_linalg.hpp"
#include "epistrict/frobenius.hpp"
#include "epistrict/relation.hpp"

namespace epistrict {

/// A finite groupoid. comp(g, h) = g o h is defined iff source(g) == target(h).
/// Construction checks every axiom family and throws AxiomFailure.
class Groupoid {
 public:
  static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

  /// `comp` is row-major over arrows x arrows, `undefined` where not composable.
  Groupoid(FinSet objects, FinSet arrows, std::vector<std::size_t> source, std::vector<std::size_t> target,
           std::vector<std::size_t> unit, std::vector<std::size_t> inverse, std::vector<std::size_t> comp);

  const FinSet& objects() const { return objects_; }
  const FinSet& arrows() const { return arrows_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  std::size_t source(std::size_t g) const { return source_.at(g); }
  std::size_t target(std::size_t g) const { return target_.at(g); }
  std::size_t unit(std::size_t obj) const { return unit_.at(obj); }
  std::size_t inverse(std::size_t g) const { return inverse_.at(g); }
  std::optional<std::size_t> comp(std::size_t g, std::size_t h) const;

  /// Arrows from `obj` to itself, ascending.
  std::vector<std::size_t> isotropy(std::size_t obj) const;

  /// Same sizes and identical structure maps; labels and product shape ignored.
  bool operator==(const Groupoid& o) const;

 private:
  FinSet objects_;
  FinSet arrows_;
  std::vector<std::size_t> source_, target_, unit_, inverse_, comp_;
};

/// Arrows are the carrier, objects the elements related by e, sources and
/// targets the units fixing an arrow on the right and left.
Groupoid groupoid_from_frobenius(const DaggerFrobenius& alg);
/// Multiplication = partial composition, counit on the units.
DaggerFrobenius algebra_from_groupoid(const Groupoid& g);

/// Arrows M x M with (x,y): y -> x and (x,y)(y,z) = (x,z); arrow (x,y) has index x|M| + y.
Groupoid pair_groupoid(const FinSet& m);

/// The algebra on X x X with multiplication 1 x cup^dagger x 1 and unit `cup`.
DaggerFrobenius endomorphism_monoid(const FinSet& x, const Relation& cup);
/// As above with the diagonal cup, whose unit is the diagonal {(a,a)}.
DaggerFrobenius endomorphism_monoid(const DaggerFrobenius& alg);

/// h o m_A == m_B o (h x h) and h o unit_A == unit_B.
bool is_monoid_homomorphism(const Relation& h, const DaggerFrobenius& a, const DaggerFrobenius& b);
/// h = y ~ (x, xy) into endomorphism_monoid(alg). Throws AxiomFailure if h is
/// not a monoid homomorphism.
Relation embed_h(const DaggerFrobenius& alg);

/// Structure-preserving bijections given explicitly; no search.
bool is_isomorphism(const Groupoid& g, const Groupoid& h, const std::vector<std::size_t>& object_map,
                    const std::vector<std::size_t>& arrow_map);
/// Whether the maps embed `sub` into `g` as a subgroupoid. Throws
/// std::invalid_argument if a map is not injective.
bool is_subgroupoid(const Groupoid& sub, const Groupoid& g, const std::vector<std::size_t>& object_map,
                    const std::vector<std::size_t>& arrow_map);
/// Whether a set of arrows is closed under composition, inverses and the
/// units of the objects it touches.
bool is_subgroupoid(const Groupoid& g, const std::vector<std::size_t>& arrows);

/// Arrows identified with vectors of Z_d^{2k}, carrying the symplectic form.
struct SymplecticGroupoid {
  Groupoid base;
  std::vector<FpVector> arrow_coords;
  /// Throws on a non-bijective or mis-sized coordinate assignment.
  SymplecticGroupoid(Groupoid g, std::vector<FpVector> coords);
};

/// The groupoid of the Spek algebra with label k <-> (block, offset) as (q, p).
SymplecticGroupoid spek_symplectic_groupoid(const PrimeField& field);

/// {(gh, g, h)} inside the triple sum of the arrow space. Throws AxiomFailure
/// if that set is not a linear subspace.
FpSubspace multiplication_graph(const SymplecticGroupoid& g);
/// sum over legs of +-omega, with + on `product_leg` and - on the others.
Elem twisted_form(const FpVector& u, const FpVector& v, std::size_t legs, std::size_t product_leg);
/// Half-dimensional and isotropic for the twisted form.
bool is_lagrangian_twisted(const FpSubspace& w, std::size_t legs, std::size_t product_leg);
/// Reorders the equal-sized legs of every vector: leg i of the result is leg order[i].
FpSubspace permute_legs(const FpSubspace& w, const std::vector<std::size_t>& order);

/// Edge list: `OBJ k`, `ARR g s t ginv`, `CMP g h gh`. Units are the arrows
/// g with s = t and CMP g g g.
void write_groupoid(std::ostream& out, const Groupoid& g);
/// Throws ParseError on malformed text, AxiomFailure on a non-groupoid.
Groupoid read_groupoid(std::istream& in);

}  // namespace epistrict
