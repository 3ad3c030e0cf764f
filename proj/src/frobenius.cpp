#include "epistrict/frobenius.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "epistrict/errors.hpp"
#include "text_io.hpp"

namespace epistrict {

namespace {

FinSet one_based(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return FinSet(std::move(labels));
}

bool snakes(const Relation& eta, const FinSet& x) {
  const Relation id = Relation::identity(x);
  const Relation cap = dagger(eta);
  const bool left = compose(product(id, eta), product(cap, id)) == id;
  const bool right = compose(product(eta, id), product(id, cap)) == id;
  return left && right;
}

/// Elements reachable from x by taking products and factorizations.
std::vector<std::size_t> closure(const DaggerFrobenius& alg, std::size_t x) {
  const auto& m = alg.multiplication();
  const Relation comult = dagger(m);
  const std::size_t n = alg.carrier().size();
  std::vector<char> in(n, 0);
  std::vector<std::size_t> members{x};
  in[x] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    auto take = [&](std::size_t y) {
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
        grew = true;
      }
    };
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto pair : comult.image(members[i])) {
        take(pair / n);
        take(pair % n);
      }
    }
    const auto snapshot = members;
    for (auto a : snapshot) {
      for (auto b : snapshot) {
        for (auto c : m.image(a * n + b)) take(c);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

DaggerFrobenius::DaggerFrobenius(FinSet carrier, Relation m, Relation e)
    : x_(std::move(carrier)), m_(std::move(m)), e_(std::move(e)) {
  if (!(m_.dom() == x_ * x_) || !(m_.cod() == x_)) throw DimensionMismatch("multiplication must be X x X -> X");
  if (!(e_.dom() == x_) || !(e_.cod() == FinSet())) throw DimensionMismatch("counit must be X -> 1");
}

Relation DaggerFrobenius::eta() const { return compose(dagger(e_), dagger(m_)); }

std::vector<std::string> FrobeniusReport::failures() const {
  std::vector<std::string> out;
  if (!frobenius) out.emplace_back("F");
  if (!special) out.emplace_back("M");
  if (!associative) out.emplace_back("A");
  if (!unital) out.emplace_back("U");
  return out;
}

FrobeniusReport verify_frobenius(const DaggerFrobenius& alg) {
  const FinSet& x = alg.carrier();
  const Relation& m = alg.multiplication();
  const Relation comult = dagger(m);
  const Relation id = Relation::identity(x);
  FrobeniusReport rep;

  const Relation middle = compose(m, comult);
  const Relation left = compose(product(comult, id), product(id, m));
  const Relation right = compose(product(id, comult), product(m, id));
  rep.frobenius = left == middle && middle == right;
  rep.special = compose(comult, m) == id;
  rep.associative = compose(product(m, id), m) == compose(product(id, m), m);

  auto is_unit = [&](const Relation& counit) {
    const Relation u = dagger(counit);
    return compose(product(u, id), m) == id && compose(product(id, u), m) == id;
  };
  rep.unital = is_unit(alg.counit());

  const std::size_t n = x.size();
  Relation candidate(x, FinSet());
  for (std::size_t u = 0; u < n; ++u) {
    bool neutral = true;
    for (std::size_t y = 0; y < n && neutral; ++y) {
      for (auto z : m.image(u * n + y)) neutral = neutral && z == y;
      for (auto z : m.image(y * n + u)) neutral = neutral && z == y;
    }
    if (neutral) candidate.add(u, 0);
  }
  if (is_unit(candidate)) rep.unit = candidate;
  return rep;
}

bool verify_compact(const DaggerFrobenius& alg) { return snakes(alg.eta(), alg.carrier()); }

bool verify_compact(const DaggerFrobenius& alg, const Relation& eta) {
  if (!(eta.dom() == FinSet()) || !(eta.cod() == alg.carrier() * alg.carrier())) {
    throw DimensionMismatch("cup must be 1 -> X x X");
  }
  return snakes(eta, alg.carrier());
}

bool verify_frobenius_morphism(const Relation& r, const DaggerFrobenius& a, const DaggerFrobenius& b) {
  const FinSet& x = a.carrier();
  const FinSet& y = b.carrier();
  if (!(r.dom() == x) || !(r.cod() == y)) throw DimensionMismatch("morphism carriers do not match the algebras");
  const Relation id_x = Relation::identity(x);
  const Relation id_y = Relation::identity(y);
  const Relation eta_x = a.eta();
  const Relation eta_y = b.eta();

  const Relation name = compose(eta_x, product(id_x, r));
  const Relation shuffle = product(id_x, product(swap(y, x), id_y));
  const bool multiplicative =
      compose(compose(product(name, name), shuffle), product(a.multiplication(), b.multiplication())) == name;

  const Relation lhs = compose(compose(product(a.unit_state(), id_x), product(dagger(a.multiplication()), id_x)),
                               product(r, dagger(eta_x)));
  const Relation rhs =
      compose(compose(product(r, eta_y), product(b.multiplication(), id_y)), product(b.counit(), id_y));
  return multiplicative && lhs == rhs;
}

FinSet spek_carrier(const PrimeField& field) {
  const auto d = static_cast<std::size_t>(field.order());
  return one_based(d * d);
}

DaggerFrobenius build_spek_algebra(const PrimeField& field) {
  const auto d = static_cast<std::size_t>(field.order());
  const FinSet x = spek_carrier(field);
  const std::size_t n = d * d;
  Relation m(x * x, x);
  Relation e(x, FinSet());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) m.add((i * d + a) * n + (i * d + b), i * d + (a + b) % d);
    }
    e.add(i * d, 0);
  }
  return DaggerFrobenius(x, std::move(m), std::move(e));
}

DaggerFrobenius relabel(const DaggerFrobenius& alg, const std::vector<std::size_t>& perm) {
  const std::size_t n = alg.carrier().size();
  if (perm.size() != n) throw DimensionMismatch("relabelling must cover the carrier");
  std::vector<char> seen(n, 0);
  for (auto p : perm) {
    if (p >= n || seen[p]) throw std::invalid_argument("relabelling is not a bijection");
    seen[p] = 1;
  }
  Relation m(alg.carrier() * alg.carrier(), alg.carrier());
  for (auto [ab, c] : alg.multiplication().pairs()) m.add(perm[ab / n] * n + perm[ab % n], perm[c]);
  Relation e(alg.carrier(), FinSet());
  for (auto [u, pt] : alg.counit().pairs()) e.add(perm[u], pt);
  return DaggerFrobenius(alg.carrier(), std::move(m), std::move(e));
}

DaggerFrobenius observable_algebra(const PrimeField& field, const FpVector& f) {
  if (f.size() != 2 || !(f.field() == field)) throw DimensionMismatch("observable algebras are single-mode");
  if (f.is_zero()) throw std::invalid_argument("observable functional must be nonzero");
  // T has first row f and determinant 1; relabelling by T^{-1} carries the
  // level sets of q onto those of f.
  const Elem a = f[0];
  const Elem b = f[1];
  const FpMatrix t = a != 0 ? FpMatrix(field, 2, 2, {a, b, 0, field.inv(a)})
                            : FpMatrix(field, 2, 2, {a, b, field.neg(field.inv(b)), 0});
  const FpMatrix inv = t.inverse();
  const std::size_t n = static_cast<std::size_t>(field.order() * field.order());
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = (inv * FpVector::from_index(field, 2, k)).point_index();
  return relabel(build_spek_algebra(field), perm);
}

Relation table_relation(const DaggerFrobenius& alg) {
  const FinSet& x = alg.carrier();
  const Relation id = Relation::identity(x);
  return compose(product(diagonal_cup(x), id), product(id, alg.multiplication()));
}

bool is_copyable(const DaggerFrobenius& alg, const Relation& state) {
  if (!(state.dom() == FinSet()) || !(state.cod() == alg.carrier())) throw DimensionMismatch("state must be 1 -> X");
  return compose(state, dagger(alg.multiplication())) == product(state, state) &&
         !compose(state, alg.counit()).empty();
}

std::vector<Relation> copyable_states(const DaggerFrobenius& alg) {
  std::set<std::vector<std::size_t>> found;
  for (std::size_t x = 0; x < alg.carrier().size(); ++x) {
    auto members = closure(alg, x);
    if (found.count(members)) continue;
    if (is_copyable(alg, subset_state(alg.carrier(), members))) found.insert(std::move(members));
  }
  std::vector<Relation> out;
  for (const auto& s : found) out.push_back(subset_state(alg.carrier(), s));
  return out;
}

void write_algebra(std::ostream& out, const DaggerFrobenius& alg) {
  out << "ALG carrier=" << alg.carrier().size() << '\n';
  write_relation(out, alg.multiplication());
  write_relation(out, alg.counit());
}

DaggerFrobenius read_algebra(std::istream& in) {
  detail::LineReader r(in);
  if (r.done()) throw ParseError("empty algebra file");
  std::istringstream head(r.next());
  std::string kw, tok, extra;
  head >> kw >> tok;
  if (kw != "ALG") r.fail("expected ALG header");
  if (head >> extra) r.fail("trailing text after ALG header");
  const std::size_t n = detail::parse_key(r, tok, "carrier");
  if (n == 0) r.fail("carrier must be non-empty");
  if (!r.next_starts_with("REL")) r.fail("expected the multiplication REL block");
  const Relation m_raw = detail::read_relation_block(r);
  if (!r.next_starts_with("REL")) r.fail("expected the counit REL block");
  const Relation e_raw = detail::read_relation_block(r);
  if (!r.done()) r.fail("unexpected content after algebra");
  if (m_raw.dom().size() != n * n || m_raw.cod().size() != n) {
    throw ParseError("multiplication block must have dom=" + std::to_string(n * n) + " cod=" + std::to_string(n));
  }
  if (e_raw.dom().size() != n || e_raw.cod().size() != 1) {
    throw ParseError("counit block must have dom=" + std::to_string(n) + " cod=1");
  }
  const FinSet x = one_based(n);
  return DaggerFrobenius(x, Relation::from_pairs(x * x, x, m_raw.pairs()), Relation::from_pairs(x, FinSet(), e_raw.pairs()));
}

}  // namespace epistrict
