#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "epistrict/errors.hpp"
#include "epistrict/frobenius.hpp"

using namespace epistrict;

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const Relation& r) {
  Matrix m(r.dom().size(), std::vector<bool>(r.cod().size(), false));
  for (auto [x, y] : r.pairs()) m[x][y] = true;
  return m;
}

Matrix mat_compose(const Matrix& a, const Matrix& b) {
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Matrix out(a.size(), std::vector<bool>(cols, false));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!a[i][k]) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] || b[k][j];
    }
  }
  return out;
}

Matrix mat_kron(const Matrix& a, const Matrix& b) {
  const std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Matrix out(ar * br, std::vector<bool>(ac * bc, false));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j)
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l) out[i * br + k][j * bc + l] = a[i][j] && b[k][l];
  return out;
}

Relation random_relation(std::size_t n, std::size_t m, std::mt19937& rng, double density = 0.3) {
  std::bernoulli_distribution coin(density);
  Relation r{FinSet(n), FinSet(m)};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (coin(rng)) r.add(x, y);
  return r;
}

/// Z_d from its addition table.
DaggerFrobenius cyclic_group_algebra(std::size_t d) {
  FinSet x(d);
  std::vector<std::pair<std::size_t, std::size_t>> mult;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) mult.emplace_back(a * d + b, (a + b) % d);
  return DaggerFrobenius(x, Relation::from_pairs(x * x, x, mult), Relation::from_pairs(x, FinSet(), {{0, 0}}));
}

/// Copyability straight from the definition: {(a,b) : ab in S} == S x S and S meets the units.
bool brute_copyable(const DaggerFrobenius& alg, const std::vector<std::size_t>& s) {
  const std::size_t n = alg.carrier().size();
  std::vector<bool> in(n, false);
  for (auto x : s) in[x] = true;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool hits = false;
      for (auto c : alg.multiplication().image(a * n + b)) hits = hits || in[c];
      if (hits != (in[a] && in[b])) return false;
    }
  }
  return std::any_of(s.begin(), s.end(), [&](std::size_t u) { return !alg.counit().image(u).empty(); });
}

std::vector<std::vector<std::size_t>> brute_copyable_states(const DaggerFrobenius& alg) {
  const std::size_t n = alg.carrier().size();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i);
    if (brute_copyable(alg, s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Permutations preserving the partial multiplication and the units.
bool brute_automorphism(const DaggerFrobenius& alg, const std::vector<std::size_t>& p) {
  const std::size_t n = alg.carrier().size();
  const auto& m = alg.multiplication();
  for (std::size_t a = 0; a < n; ++a) {
    if (alg.counit().image(a).empty() != alg.counit().image(p[a]).empty()) return false;
    for (std::size_t b = 0; b < n; ++b) {
      const auto& lhs = m.image(a * n + b);
      const auto& rhs = m.image(p[a] * n + p[b]);
      if (lhs.size() != rhs.size()) return false;
      if (!lhs.empty() && p[lhs[0]] != rhs[0]) return false;
    }
  }
  return true;
}

std::vector<std::size_t> labels_to_indices(std::initializer_list<std::size_t> labels) {
  std::vector<std::size_t> out;
  for (auto l : labels) out.push_back(l - 1);
  return out;
}

}  // namespace

TEST_CASE("finite sets") {
  FinSet a(3), b(4);
  CHECK((a * b).size() == 12);
  CHECK((a * FinSet()) == a);
  CHECK(((a * b) * a) == (a * (b * a)));
  CHECK(FinSet(1) == FinSet());
  CHECK((a * b).label(5) == "(1,1)");
  CHECK(FinSet({"x", "y"}).label(1) == "y");
  CHECK_THROWS(FinSet({"x", "x"}));
  CHECK_THROWS(FinSet(0));
}

TEST_CASE("relation composition, dagger and product") {
  FinSet x(3), y(2), z(8);
  auto r = Relation::from_pairs(x, y, {{1, 0}});
  auto s = Relation::from_pairs(y, z, {{0, 7}});
  CHECK(compose(r, s) == Relation::from_pairs(x, z, {{1, 7}}));
  CHECK(compose(r, Relation::identity(y)) == r);
  CHECK(compose(Relation::identity(x), r) == r);
  CHECK(dagger(Relation::identity(x)) == Relation::identity(x));
  CHECK(product(Relation::identity(x), Relation::identity(y)) == Relation::identity(x * y));
  CHECK_THROWS_AS(compose(r, r), DimensionMismatch);

  auto single = product(Relation::from_pairs(x, y, {{2, 1}}), Relation::from_pairs(y, x, {{0, 2}}));
  CHECK(single.pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{2 * 2 + 0, 1 * 3 + 2}});

  SUBCASE("laws on random relations against boolean matrices") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::size_t> size(1, 6);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t a = size(rng), b = size(rng), c = size(rng), e = size(rng);
      const auto r1 = random_relation(a, b, rng);
      const auto r2 = random_relation(b, c, rng);
      const auto r3 = random_relation(c, e, rng);
      REQUIRE(to_matrix(compose(r1, r2)) == mat_compose(to_matrix(r1), to_matrix(r2)));
      REQUIRE(compose(compose(r1, r2), r3) == compose(r1, compose(r2, r3)));
      REQUIRE(dagger(dagger(r1)) == r1);
      REQUIRE(dagger(compose(r1, r2)) == compose(dagger(r2), dagger(r1)));
      REQUIRE(to_matrix(product(r1, r2)) == mat_kron(to_matrix(r1), to_matrix(r2)));
      // Interchange law.
      const auto s1 = random_relation(e, a, rng);
      const auto s2 = random_relation(a, c, rng);
      REQUIRE(compose(product(r1, s1), product(r2, s2)) == product(compose(r1, r2), compose(s1, s2)));
      // A total relation followed by its converse contains the diagonal.
      if (r1.is_total()) {
        const auto rr = compose(r1, dagger(r1));
        for (std::size_t i = 0; i < a; ++i) REQUIRE(rr.contains(i, i));
      }
    }
  }
}

TEST_CASE("swap and cup") {
  FinSet a(2), b(3);
  auto s = swap(a, b);
  CHECK(compose(s, swap(b, a)) == Relation::identity(a * b));
  CHECK(s.contains(1 * 3 + 2, 2 * 2 + 1));
  auto cup = diagonal_cup(b);
  CHECK(state_members(cup) == std::vector<std::size_t>{0, 4, 8});
}

TEST_CASE("relation text format") {
  FinSet x(3), y(2);
  auto r = Relation::from_pairs(x, y, {{0, 1}, {2, 0}});
  std::stringstream ss;
  write_relation(ss, r);
  CHECK(ss.str() == "REL dom=3 cod=2\n0 1\n2 0\n");
  CHECK(read_relation(ss) == r);

  std::istringstream commented("# a comment\nREL dom=3 cod=2\n\n0 1  # trailing\n2 0\n");
  CHECK(read_relation(commented) == r);
  for (const char* bad : {"", "REL dom=3\n", "REL dom=3 cod=2\n0 5\n", "REL dom=3 cod=2\n0\n", "RELATION dom=1 cod=1\n",
                          "REL dom=3 cod=2\n0 x\n", "REL dom=0 cod=2\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_relation(in), ParseError);
  }
}

TEST_CASE("Spek algebra") {
  PrimeField f3(3);
  const auto spek = build_spek_algebra(f3);
  CHECK(spek.carrier().size() == 9);
  CHECK(spek.carrier().label(0) == "1");
  CHECK(state_members(spek.unit_state()) == labels_to_indices({1, 4, 7}));

  const auto rep = verify_frobenius(spek);
  CHECK(rep.all());
  REQUIRE(rep.unit);
  CHECK(*rep.unit == spek.counit());
  CHECK(verify_compact(spek));
  CHECK_FALSE(verify_compact(spek, Relation(FinSet(), spek.carrier() * spek.carrier())));

  SUBCASE("the 9x9 Spek table") {
    // Row r, column c holds e exactly when r e = c.
    const int table[9][9] = {{1, 2, 3, 0, 0, 0, 0, 0, 0}, {3, 1, 2, 0, 0, 0, 0, 0, 0}, {2, 3, 1, 0, 0, 0, 0, 0, 0},
                             {0, 0, 0, 4, 5, 6, 0, 0, 0}, {0, 0, 0, 6, 4, 5, 0, 0, 0}, {0, 0, 0, 5, 6, 4, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 7, 8, 9}, {0, 0, 0, 0, 0, 0, 9, 7, 8}, {0, 0, 0, 0, 0, 0, 8, 9, 7}};
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t r = 0; r < 9; ++r)
      for (std::size_t c = 0; c < 9; ++c)
        if (table[r][c]) pairs.emplace_back(table[r][c] - 1, r * 9 + c);
    const auto h = table_relation(spek);
    CHECK(h == Relation::from_pairs(spek.carrier(), spek.carrier() * spek.carrier(), pairs));
    CHECK(h.image(0) == std::vector<Relation::Index>{0 * 9 + 0, 1 * 9 + 1, 2 * 9 + 2});
    CHECK(h.image(1) == std::vector<Relation::Index>{0 * 9 + 1, 1 * 9 + 2, 2 * 9 + 0});
  }

  SUBCASE("d = 5, 7") {
    for (Elem d : {5, 7}) {
      const auto alg = build_spek_algebra(PrimeField(d));
      CHECK(verify_frobenius(alg).all());
      CHECK(verify_compact(alg));
    }
  }
  CHECK_THROWS_AS(build_spek_algebra(PrimeField(2)), CharacteristicTwoError);
}

TEST_CASE("group algebras of Z_d") {
  for (std::size_t d : {2u, 3u, 5u}) {
    const auto alg = cyclic_group_algebra(d);
    CHECK(verify_frobenius(alg).all());
    CHECK(verify_compact(alg));
    const auto states = copyable_states(alg);
    REQUIRE(states.size() == 1);
    CHECK(state_members(states[0]).size() == d);
  }
}

TEST_CASE("mutation robustness") {
  const auto spek = build_spek_algebra(PrimeField(3));
  const auto pairs = spek.multiplication().pairs();
  CHECK(pairs.size() == 27);
  for (auto [ab, c] : pairs) {
    Relation m = spek.multiplication();
    m.remove(ab, c);
    const auto rep = verify_frobenius(DaggerFrobenius(spek.carrier(), m, spek.counit()));
    CHECK_FALSE(rep.all());
    CHECK_FALSE(rep.failures().empty());
  }
  // An extra pair breaks it too.
  Relation m = spek.multiplication();
  m.add(0 * 9 + 4, 4);
  CHECK_FALSE(verify_frobenius(DaggerFrobenius(spek.carrier(), m, spek.counit())).all());
  // A wrong counit fails only (U); the witness still finds the real unit.
  const auto bad_unit = verify_frobenius(DaggerFrobenius(spek.carrier(), spek.multiplication(),
                                                         Relation::from_pairs(spek.carrier(), FinSet(), {{0, 0}})));
  CHECK(bad_unit.failures() == std::vector<std::string>{"U"});
  REQUIRE(bad_unit.unit);
  CHECK(*bad_unit.unit == spek.counit());
}

TEST_CASE("copyable states") {
  PrimeField f3(3);
  const auto spek = build_spek_algebra(f3);
  std::vector<std::vector<std::size_t>> got;
  for (const auto& s : copyable_states(spek)) got.push_back(state_members(s));
  CHECK(got == std::vector<std::vector<std::size_t>>{labels_to_indices({1, 2, 3}), labels_to_indices({4, 5, 6}),
                                                     labels_to_indices({7, 8, 9})});
  CHECK(got == brute_copyable_states(spek));

  SUBCASE("the twelve states and the four observables") {
    const std::vector<std::vector<std::size_t>> states{
        labels_to_indices({1, 2, 3}), labels_to_indices({4, 5, 6}), labels_to_indices({7, 8, 9}),
        labels_to_indices({1, 4, 7}), labels_to_indices({2, 5, 8}), labels_to_indices({3, 6, 9}),
        labels_to_indices({1, 6, 8}), labels_to_indices({2, 4, 9}), labels_to_indices({3, 5, 7}),
        labels_to_indices({1, 5, 9}), labels_to_indices({2, 6, 7}), labels_to_indices({3, 4, 8})};
    const std::vector<FpVector> observables{FpVector(f3, {1, 0}), FpVector(f3, {0, 1}), FpVector(f3, {1, 1}),
                                            FpVector(f3, {2, 1})};
    std::vector<DaggerFrobenius> algs;
    for (const auto& f : observables) algs.push_back(observable_algebra(f3, f));
    for (std::size_t k = 0; k < algs.size(); ++k) {
      REQUIRE(verify_frobenius(algs[k]).all());
      std::vector<std::vector<std::size_t>> expected(states.begin() + 3 * k, states.begin() + 3 * k + 3);
      std::sort(expected.begin(), expected.end());
      std::vector<std::vector<std::size_t>> got_k;
      for (const auto& s : copyable_states(algs[k])) got_k.push_back(state_members(s));
      CHECK(got_k == expected);
      CHECK(got_k == brute_copyable_states(algs[k]));
    }
    for (const auto& s : states) {
      int hits = 0;
      for (const auto& a : algs) hits += is_copyable(a, subset_state(a.carrier(), s)) ? 1 : 0;
      CHECK(hits == 1);
    }
    // The listed {3,4,6} is copyable for none of them.
    for (const auto& a : algs) CHECK_FALSE(is_copyable(a, subset_state(a.carrier(), labels_to_indices({3, 4, 6}))));
  }
}

TEST_CASE("Frobenius morphisms") {
  PrimeField f3(3);
  const auto spek = build_spek_algebra(f3);
  const FinSet& x = spek.carrier();
  CHECK(verify_frobenius_morphism(Relation::identity(x), spek, spek));

  auto point_map = [&](const FpMatrix& s, const FpVector& a) {
    std::vector<std::size_t> img(9);
    for (std::size_t k = 0; k < 9; ++k) img[k] = (s * FpVector::from_index(f3, 2, k) + a).point_index();
    return img;
  };
  const auto shift_q = point_map(FpMatrix::identity(f3, 2), FpVector(f3, {1, 0}));
  const auto scale = point_map(FpMatrix(f3, 2, 2, {2, 0, 0, 2}), FpVector(f3, {0, 0}));
  CHECK(verify_frobenius_morphism(Relation::from_map(x, x, shift_q), spek, spek));
  CHECK(verify_frobenius_morphism(Relation::from_map(x, x, scale), spek, spek));
  // A shear mixes blocks and is not a morphism of this algebra.
  const auto shear = point_map(FpMatrix(f3, 2, 2, {1, 1, 0, 1}), FpVector(f3, {0, 0}));
  CHECK_FALSE(verify_frobenius_morphism(Relation::from_map(x, x, shear), spek, spek));

  SUBCASE("agrees with the automorphism oracle") {
    std::vector<std::size_t> p(9);
    std::iota(p.begin(), p.end(), 0);
    std::size_t automorphisms = 0;
    std::vector<std::vector<std::size_t>> autos;
    do {
      if (brute_automorphism(spek, p)) {
        ++automorphisms;
        autos.push_back(p);
      }
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(automorphisms == 48);  // 3! block orders times Aut(Z_3)^3
    for (const auto& a : autos) REQUIRE(verify_frobenius_morphism(Relation::from_map(x, x, a), spek, spek));
    std::mt19937 rng(9);
    std::size_t rejected = 0;
    for (int k = 0; k < 500; ++k) {
      std::shuffle(p.begin(), p.end(), rng);
      const bool expected = brute_automorphism(spek, p);
      REQUIRE(verify_frobenius_morphism(Relation::from_map(x, x, p), spek, spek) == expected);
      rejected += expected ? 0 : 1;
    }
    CHECK(rejected > 400);
  }
  CHECK_THROWS_AS(verify_frobenius_morphism(Relation::identity(FinSet(4)), spek, spek), DimensionMismatch);
}

TEST_CASE("algebra text format") {
  const auto spek = build_spek_algebra(PrimeField(3));
  std::stringstream ss;
  write_algebra(ss, spek);
  CHECK(ss.str().rfind("ALG carrier=9\nREL dom=81 cod=9\n", 0) == 0);
  CHECK(read_algebra(ss) == spek);
  for (const char* bad : {"", "ALG carrier=2\n", "ALG carrier=2\nREL dom=4 cod=2\n0 0\n",
                          "ALG carrier=2\nREL dom=3 cod=2\nREL dom=2 cod=1\n", "ALG carrier=2\nREL dom=4 cod=2\nREL dom=2 cod=1\n0 0\nextra\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_algebra(in), ParseError);
  }
}
