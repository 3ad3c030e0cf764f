#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace epistrict {

/// A finite set, possibly a cartesian product of atomic factors. Products are
/// flattened and one-element factors dropped, so (A x B) x C == A x (B x C)
/// and A x 1 == A. Elements of a product are indexed row-major.
class FinSet {
 public:
  /// The one-element set.
  FinSet() = default;
  /// Atomic set labelled "0".."size-1".
  explicit FinSet(std::size_t size);
  explicit FinSet(std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  /// Sizes of the atomic factors (empty for the one-element set).
  const std::vector<std::size_t>& factors() const { return sizes_; }
  std::string label(std::size_t i) const;

  /// Cartesian product.
  FinSet operator*(const FinSet& o) const;
  /// Equality of shape; labels are cosmetic.
  bool operator==(const FinSet& o) const { return sizes_ == o.sizes_; }

 private:
  std::size_t size_ = 1;
  std::vector<std::size_t> sizes_;
  std::vector<std::shared_ptr<const std::vector<std::string>>> labels_;
};

/// A relation dom -> cod, stored as sorted adjacency lists.
class Relation {
 public:
  using Index = std::uint32_t;

  /// The empty relation.
  Relation(FinSet dom, FinSet cod);
  static Relation from_pairs(FinSet dom, FinSet cod, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  /// Graph of a function given as image indices.
  static Relation from_map(FinSet dom, FinSet cod, const std::vector<std::size_t>& images);
  static Relation identity(const FinSet& x);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }

  bool contains(std::size_t x, std::size_t y) const;
  const std::vector<Index>& image(std::size_t x) const { return rows_.at(x); }
  void add(std::size_t x, std::size_t y);
  /// Returns whether the pair was present.
  bool remove(std::size_t x, std::size_t y);

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  std::size_t pair_count() const;
  bool empty() const { return pair_count() == 0; }
  /// Every element of the domain is related to something.
  bool is_total() const;
  /// Every element of the domain is related to at most one element.
  bool is_partial_function() const;

  bool operator==(const Relation& o) const { return dom_ == o.dom_ && cod_ == o.cod_ && rows_ == o.rows_; }

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<std::vector<Index>> rows_;
};

/// `first` then `second`, i.e. second o first. Throws DimensionMismatch
/// when cod(first) != dom(second).
Relation compose(const Relation& first, const Relation& second);
/// Converse relation.
Relation dagger(const Relation& r);
/// Cartesian (tensor) product of relations.
Relation product(const Relation& r, const Relation& s);
/// Symmetry a x b -> b x a.
Relation swap(const FinSet& a, const FinSet& b);
/// 1 -> x x x, relating the point to every (a, a).
Relation diagonal_cup(const FinSet& x);
/// The state 1 -> x relating the point to `members`.
Relation subset_state(const FinSet& x, const std::vector<std::size_t>& members);
/// Members of a state 1 -> x.
std::vector<std::size_t> state_members(const Relation& state);

/// Text form: `REL dom=<n> cod=<m>` then one `x y` line per pair (0-based).
/// Blank lines and `#` comments are ignored on input.
void write_relation(std::ostream& out, const Relation& r);
/// Reads one relation block with atomic dom/cod. Throws ParseError.
Relation read_relation(std::istream& in);

}  // namespace epistrict
