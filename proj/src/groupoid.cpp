#include "epistrict/groupoid.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "epistrict/errors.hpp"
#include "text_io.hpp"

namespace epistrict {

namespace {

constexpr std::size_t none = Groupoid::undefined;

[[noreturn]] void axiom(const std::string& what) { throw AxiomFailure("groupoid axiom violated: " + what); }

std::string arrow_name(std::size_t g) { return "arrow " + std::to_string(g); }

bool injective(const std::vector<std::size_t>& map, std::size_t range) {
  std::vector<char> seen(range, 0);
  for (auto x : map) {
    if (x >= range || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

/// Checks that the maps commute with every structure map of `sub`.
bool preserves_structure(const Groupoid& sub, const Groupoid& g, const std::vector<std::size_t>& om,
                         const std::vector<std::size_t>& am) {
  for (std::size_t o = 0; o < sub.object_count(); ++o) {
    if (am[sub.unit(o)] != g.unit(om[o])) return false;
  }
  for (std::size_t a = 0; a < sub.arrow_count(); ++a) {
    if (om[sub.source(a)] != g.source(am[a]) || om[sub.target(a)] != g.target(am[a])) return false;
    if (am[sub.inverse(a)] != g.inverse(am[a])) return false;
    for (std::size_t b = 0; b < sub.arrow_count(); ++b) {
      const auto ab = sub.comp(a, b);
      if (ab && g.comp(am[a], am[b]) != am[*ab]) return false;
    }
  }
  return true;
}

FpVector concat(const std::vector<const FpVector*>& parts) {
  std::vector<Elem> c;
  for (const auto* p : parts) c.insert(c.end(), p->coords().begin(), p->coords().end());
  return FpVector(parts.front()->field(), std::move(c));
}

FpVector leg(const FpVector& v, std::size_t legs, std::size_t i) {
  const std::size_t w = v.size() / legs;
  return FpVector(v.field(), std::vector<Elem>(v.coords().begin() + static_cast<std::ptrdiff_t>(i * w),
                                               v.coords().begin() + static_cast<std::ptrdiff_t>((i + 1) * w)));
}

}  // namespace

Groupoid::Groupoid(FinSet objects, FinSet arrows, std::vector<std::size_t> source, std::vector<std::size_t> target,
                   std::vector<std::size_t> unit, std::vector<std::size_t> inverse, std::vector<std::size_t> comp)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      source_(std::move(source)),
      target_(std::move(target)),
      unit_(std::move(unit)),
      inverse_(std::move(inverse)),
      comp_(std::move(comp)) {
  const std::size_t no = objects_.size();
  const std::size_t na = arrows_.size();
  if (source_.size() != na || target_.size() != na || inverse_.size() != na || unit_.size() != no ||
      comp_.size() != na * na) {
    throw DimensionMismatch("groupoid structure maps have the wrong sizes");
  }
  for (std::size_t g = 0; g < na; ++g) {
    if (source_[g] >= no || target_[g] >= no || inverse_[g] >= na) axiom(arrow_name(g) + " has an out-of-range structure map");
  }
  for (std::size_t o = 0; o < no; ++o) {
    if (unit_[o] >= na) axiom("unit of object " + std::to_string(o) + " out of range");
    if (source_[unit_[o]] != o || target_[unit_[o]] != o) axiom("unit of object " + std::to_string(o) + " is not a loop");
  }
  // Composability and typing.
  for (std::size_t g = 0; g < na; ++g) {
    for (std::size_t h = 0; h < na; ++h) {
      const std::size_t c = comp_[g * na + h];
      if ((c != none) != (source_[g] == target_[h])) axiom("composability of " + arrow_name(g) + " and " + arrow_name(h));
      if (c == none) continue;
      if (c >= na) axiom("composite out of range");
      if (source_[c] != source_[h] || target_[c] != target_[g]) axiom("composite of " + arrow_name(g) + " and " + arrow_name(h) + " is mistyped");
    }
  }
  // Units and inverses.
  for (std::size_t g = 0; g < na; ++g) {
    if (comp_[g * na + unit_[source_[g]]] != g || comp_[unit_[target_[g]] * na + g] != g) axiom("unit law at " + arrow_name(g));
    const std::size_t gi = inverse_[g];
    if (comp_[g * na + gi] != unit_[target_[g]] || comp_[gi * na + g] != unit_[source_[g]]) axiom("inverse law at " + arrow_name(g));
  }
  // Associativity on composable triples.
  std::vector<std::vector<std::size_t>> by_target(no);
  for (std::size_t g = 0; g < na; ++g) by_target[target_[g]].push_back(g);
  for (std::size_t g = 0; g < na; ++g) {
    for (auto h : by_target[source_[g]]) {
      const std::size_t gh = comp_[g * na + h];
      for (auto k : by_target[source_[h]]) {
        if (comp_[gh * na + k] != comp_[g * na + comp_[h * na + k]]) axiom("associativity");
      }
    }
  }
}

std::optional<std::size_t> Groupoid::comp(std::size_t g, std::size_t h) const {
  const std::size_t c = comp_.at(g * arrows_.size() + h);
  if (c == none) return std::nullopt;
  return c;
}

std::vector<std::size_t> Groupoid::isotropy(std::size_t obj) const {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < arrow_count(); ++g) {
    if (source_[g] == obj && target_[g] == obj) out.push_back(g);
  }
  return out;
}

bool Groupoid::operator==(const Groupoid& o) const {
  return objects_.size() == o.objects_.size() && arrows_.size() == o.arrows_.size() && source_ == o.source_ && target_ == o.target_ &&
         unit_ == o.unit_ && inverse_ == o.inverse_ && comp_ == o.comp_;
}

Groupoid groupoid_from_frobenius(const DaggerFrobenius& alg) {
  const auto& m = alg.multiplication();
  if (!m.is_partial_function()) throw AxiomFailure("multiplication is not a partial function");
  const std::size_t n = alg.carrier().size();
  std::vector<std::size_t> units;
  for (std::size_t x = 0; x < n; ++x) {
    if (!alg.counit().image(x).empty()) units.push_back(x);
  }
  if (units.empty()) throw AxiomFailure("counit relates no element");
  std::vector<std::size_t> object_of(n, none);
  std::vector<std::string> labels;
  for (std::size_t o = 0; o < units.size(); ++o) {
    object_of[units[o]] = o;
    labels.push_back(alg.carrier().label(units[o]));
  }
  auto mult = [&](std::size_t a, std::size_t b) -> std::size_t {
    const auto& img = m.image(a * n + b);
    return img.empty() ? none : img[0];
  };

  std::vector<std::size_t> source(n), target(n), inverse(n), comp(n * n);
  for (std::size_t f = 0; f < n; ++f) {
    std::vector<std::size_t> s, t, inv;
    for (auto u : units) {
      if (mult(f, u) != none) s.push_back(object_of[u]);
      if (mult(u, f) != none) t.push_back(object_of[u]);
    }
    for (std::size_t g = 0; g < n; ++g) {
      const auto fg = mult(f, g);
      const auto gf = mult(g, f);
      if (fg != none && gf != none && object_of[fg] != none && object_of[gf] != none) inv.push_back(g);
    }
    if (s.size() != 1 || t.size() != 1) throw AxiomFailure("element " + alg.carrier().label(f) + " has no unique source/target");
    if (inv.size() != 1) throw AxiomFailure("element " + alg.carrier().label(f) + " has no unique inverse");
    source[f] = s[0];
    target[f] = t[0];
    inverse[f] = inv[0];
    for (std::size_t g = 0; g < n; ++g) comp[f * n + g] = mult(f, g);
  }
  FinSet objects = labels.size() == 1 ? FinSet() : FinSet(labels);
  return Groupoid(std::move(objects), alg.carrier(), std::move(source), std::move(target), units, std::move(inverse),
                  std::move(comp));
}

DaggerFrobenius algebra_from_groupoid(const Groupoid& g) {
  const std::size_t n = g.arrow_count();
  Relation m(g.arrows() * g.arrows(), g.arrows());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (auto c = g.comp(a, b)) m.add(a * n + b, *c);
    }
  }
  Relation e(g.arrows(), FinSet());
  for (std::size_t o = 0; o < g.object_count(); ++o) e.add(g.unit(o), 0);
  return DaggerFrobenius(g.arrows(), std::move(m), std::move(e));
}

Groupoid pair_groupoid(const FinSet& m) {
  const std::size_t k = m.size();
  const std::size_t n = k * k;
  std::vector<std::size_t> source(n), target(n), unit(k), inverse(n), comp(n * n, none);
  for (std::size_t x = 0; x < k; ++x) {
    unit[x] = x * k + x;
    for (std::size_t y = 0; y < k; ++y) {
      source[x * k + y] = y;
      target[x * k + y] = x;
      inverse[x * k + y] = y * k + x;
      for (std::size_t z = 0; z < k; ++z) comp[(x * k + y) * n + (y * k + z)] = x * k + z;
    }
  }
  return Groupoid(m, m * m, std::move(source), std::move(target), std::move(unit), std::move(inverse), std::move(comp));
}

DaggerFrobenius endomorphism_monoid(const FinSet& x, const Relation& cup) {
  if (!(cup.dom() == FinSet()) || !(cup.cod() == x * x)) throw DimensionMismatch("cup must be 1 -> X x X");
  const Relation id = Relation::identity(x);
  Relation m = product(id, product(dagger(cup), id));
  return DaggerFrobenius(x * x, std::move(m), dagger(cup));
}

DaggerFrobenius endomorphism_monoid(const DaggerFrobenius& alg) {
  return endomorphism_monoid(alg.carrier(), diagonal_cup(alg.carrier()));
}

bool is_monoid_homomorphism(const Relation& h, const DaggerFrobenius& a, const DaggerFrobenius& b) {
  if (!(h.dom() == a.carrier()) || !(h.cod() == b.carrier())) throw DimensionMismatch("homomorphism carriers do not match");
  const bool mult = compose(a.multiplication(), h) == compose(product(h, h), b.multiplication());
  const bool unit = compose(a.unit_state(), h) == b.unit_state();
  return mult && unit;
}

Relation embed_h(const DaggerFrobenius& alg) {
  Relation h = table_relation(alg);
  if (!is_monoid_homomorphism(h, alg, endomorphism_monoid(alg))) {
    throw AxiomFailure("h does not preserve multiplication and unit");
  }
  return h;
}

bool is_isomorphism(const Groupoid& g, const Groupoid& h, const std::vector<std::size_t>& object_map,
                    const std::vector<std::size_t>& arrow_map) {
  if (g.object_count() != h.object_count() || g.arrow_count() != h.arrow_count()) return false;
  if (object_map.size() != g.object_count() || arrow_map.size() != g.arrow_count()) return false;
  if (!injective(object_map, h.object_count()) || !injective(arrow_map, h.arrow_count())) return false;
  return preserves_structure(g, h, object_map, arrow_map);
}

bool is_subgroupoid(const Groupoid& sub, const Groupoid& g, const std::vector<std::size_t>& object_map,
                    const std::vector<std::size_t>& arrow_map) {
  if (object_map.size() != sub.object_count() || arrow_map.size() != sub.arrow_count()) {
    throw DimensionMismatch("inclusion maps must cover the subgroupoid");
  }
  if (!injective(object_map, g.object_count()) || !injective(arrow_map, g.arrow_count())) {
    throw std::invalid_argument("inclusion is not injective");
  }
  return preserves_structure(sub, g, object_map, arrow_map);
}

bool is_subgroupoid(const Groupoid& g, const std::vector<std::size_t>& arrows) {
  std::vector<char> in(g.arrow_count(), 0);
  for (auto a : arrows) in.at(a) = 1;
  for (auto a : arrows) {
    if (!in[g.inverse(a)] || !in[g.unit(g.source(a))] || !in[g.unit(g.target(a))]) return false;
    for (auto b : arrows) {
      if (auto c = g.comp(a, b); c && !in[*c]) return false;
    }
  }
  return true;
}

SymplecticGroupoid::SymplecticGroupoid(Groupoid g, std::vector<FpVector> coords)
    : base(std::move(g)), arrow_coords(std::move(coords)) {
  if (arrow_coords.size() != base.arrow_count() || arrow_coords.empty()) throw DimensionMismatch("one coordinate vector per arrow");
  const auto& f = arrow_coords[0].field();
  const std::size_t dim = arrow_coords[0].size();
  if (dim % 2 != 0) throw DimensionMismatch("arrow space must be even-dimensional");
  std::set<std::uint64_t> seen;
  for (const auto& c : arrow_coords) {
    if (!(c.field() == f) || c.size() != dim) throw DimensionMismatch("arrow coordinates disagree on the space");
    seen.insert(c.point_index());
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= static_cast<std::uint64_t>(f.order());
  if (seen.size() != arrow_coords.size() || total != arrow_coords.size()) {
    throw std::invalid_argument("arrow coordinates are not a bijection onto the arrow space");
  }
}

SymplecticGroupoid spek_symplectic_groupoid(const PrimeField& field) {
  Groupoid g = groupoid_from_frobenius(build_spek_algebra(field));
  std::vector<FpVector> coords;
  for (std::size_t k = 0; k < g.arrow_count(); ++k) coords.push_back(FpVector::from_index(field, 2, k));
  return SymplecticGroupoid(std::move(g), std::move(coords));
}

FpSubspace multiplication_graph(const SymplecticGroupoid& sg) {
  const auto& g = sg.base;
  const auto& c = sg.arrow_coords;
  std::vector<FpVector> points;
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    for (std::size_t b = 0; b < g.arrow_count(); ++b) {
      if (auto ab = g.comp(a, b)) points.push_back(concat({&c[*ab], &c[a], &c[b]}));
    }
  }
  const std::size_t ambient = 3 * c[0].size();
  FpSubspace w = rref(c[0].field(), ambient, points);
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < w.dim(); ++i) size *= static_cast<std::uint64_t>(c[0].field().order());
  if (size != points.size()) throw AxiomFailure("multiplication graph is not a linear subspace");
  return w;
}

Elem twisted_form(const FpVector& u, const FpVector& v, std::size_t legs, std::size_t product_leg) {
  if (u.size() != v.size() || legs == 0 || u.size() % legs != 0 || (u.size() / legs) % 2 != 0 || product_leg >= legs) {
    throw DimensionMismatch("twisted form needs equal even-dimensional legs");
  }
  const auto& f = u.field();
  Elem acc = 0;
  for (std::size_t i = 0; i < legs; ++i) {
    const Elem w = symplectic_form(leg(u, legs, i), leg(v, legs, i));
    acc = i == product_leg ? f.add(acc, w) : f.sub(acc, w);
  }
  return acc;
}

bool is_lagrangian_twisted(const FpSubspace& w, std::size_t legs, std::size_t product_leg) {
  if (2 * w.dim() != w.ambient_dim()) return false;
  const auto& b = w.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (twisted_form(b[i], b[j], legs, product_leg) != 0) return false;
    }
  }
  return true;
}

FpSubspace permute_legs(const FpSubspace& w, const std::vector<std::size_t>& order) {
  const std::size_t legs = order.size();
  if (legs == 0 || w.ambient_dim() % legs != 0) throw DimensionMismatch("legs do not divide the ambient space");
  std::vector<FpVector> out;
  for (const auto& v : w.basis()) {
    std::vector<FpVector> parts;
    for (auto o : order) parts.push_back(leg(v, legs, o));
    std::vector<const FpVector*> ptrs;
    for (const auto& p : parts) ptrs.push_back(&p);
    out.push_back(concat(ptrs));
  }
  return rref(w.field(), w.ambient_dim(), out);
}

void write_groupoid(std::ostream& out, const Groupoid& g) {
  for (std::size_t o = 0; o < g.object_count(); ++o) out << "OBJ " << o << '\n';
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    out << "ARR " << a << ' ' << g.source(a) << ' ' << g.target(a) << ' ' << g.inverse(a) << '\n';
  }
  for (std::size_t a = 0; a < g.arrow_count(); ++a) {
    for (std::size_t b = 0; b < g.arrow_count(); ++b) {
      if (auto c = g.comp(a, b)) out << "CMP " << a << ' ' << b << ' ' << *c << '\n';
    }
  }
}

Groupoid read_groupoid(std::istream& in) {
  detail::LineReader r(in);
  std::set<std::size_t> objects;
  std::map<std::size_t, std::array<std::size_t, 3>> arrows;
  std::vector<std::array<std::size_t, 3>> comps;
  while (!r.done()) {
    std::istringstream ss(r.next());
    std::string kw, rest;
    ss >> kw;
    std::getline(ss, rest);
    const auto nums = detail::parse_numbers(r, rest);
    if (kw == "OBJ") {
      if (nums.size() != 1) r.fail("OBJ takes one index");
      if (!objects.insert(nums[0]).second) r.fail("duplicate object");
    } else if (kw == "ARR") {
      if (nums.size() != 4) r.fail("ARR takes g s t ginv");
      if (!arrows.emplace(nums[0], std::array<std::size_t, 3>{nums[1], nums[2], nums[3]}).second) r.fail("duplicate arrow");
    } else if (kw == "CMP") {
      if (nums.size() != 3) r.fail("CMP takes g h gh");
      comps.push_back({nums[0], nums[1], nums[2]});
    } else {
      r.fail("unknown record '" + kw + "'");
    }
  }
  const std::size_t no = objects.size();
  const std::size_t na = arrows.size();
  if (no == 0 || na == 0) throw ParseError("groupoid needs objects and arrows");
  if (*objects.rbegin() != no - 1 || arrows.rbegin()->first != na - 1) throw ParseError("indices must be contiguous from 0");
  std::vector<std::size_t> source(na), target(na), inverse(na), comp(na * na, none);
  for (const auto& [a, sti] : arrows) {
    if (sti[0] >= no || sti[1] >= no || sti[2] >= na) throw ParseError("ARR " + std::to_string(a) + " refers outside the groupoid");
    source[a] = sti[0];
    target[a] = sti[1];
    inverse[a] = sti[2];
  }
  for (const auto& [a, b, c] : comps) {
    if (a >= na || b >= na || c >= na) throw ParseError("CMP refers to an unknown arrow");
    if (comp[a * na + b] != none) throw ParseError("duplicate CMP record");
    comp[a * na + b] = c;
  }
  std::vector<std::size_t> unit(no, none);
  for (std::size_t a = 0; a < na; ++a) {
    if (source[a] == target[a] && comp[a * na + a] == a) unit[source[a]] = a;
  }
  for (std::size_t o = 0; o < no; ++o) {
    if (unit[o] == none) throw AxiomFailure("object " + std::to_string(o) + " has no unit arrow");
  }
  return Groupoid(FinSet(no), FinSet(na), std::move(source), std::move(target), std::move(unit), std::move(inverse),
                  std::move(comp));
}

}  // namespace epistrict
