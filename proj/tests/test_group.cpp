#include <catch2/catch_amalgamated.hpp>

#include "giso/group.hpp"
#include "oracles.hpp"

using namespace giso;

namespace {
PermGroup dihedral8() {
  return PermGroup(4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{1, 3}})});
}
}  // namespace

TEST_CASE("stabilizer chain orders against closure enumeration") {
  CHECK(dihedral8().order() == 8);
  CHECK(PermGroup(5).order() == 1);
  PermGroup s4(4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{0, 1}})});
  CHECK(s4.order() == 24);

  auto& eng = oracle::rng();
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(eng() % 7);
    int k = 1 + static_cast<int>(eng() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) gens.push_back(oracle::random_perm(n, eng));
    PermGroup g(n, gens);
    auto all = oracle::closure(n, gens);
    CHECK(g.order() == static_cast<long>(all.size()));
  }
}

TEST_CASE("membership agrees with closure") {
  PermGroup d8 = dihedral8();
  CHECK(d8.contains(Perm::identity(4)));
  CHECK(d8.contains(perm_from_cycles(4, {{0, 2}})));
  CHECK_FALSE(d8.contains(perm_from_cycles(4, {{0, 1}})));
  CHECK_THROWS_AS(d8.contains(Perm::identity(5)), usage_error);

  auto& eng = oracle::rng();
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(eng() % 6);
    std::vector<Perm> gens{oracle::random_perm(n, eng), oracle::random_perm(n, eng)};
    PermGroup g(n, gens);
    auto all = oracle::closure(n, gens);
    std::set<Perm> inside(all.begin(), all.end());
    for (int probe = 0; probe < 40; ++probe) {
      Perm x = oracle::random_perm(n, eng);
      CHECK(g.contains(x) == (inside.count(x) > 0));
    }
  }
}

TEST_CASE("transversal reps map the base point to distinct images") {
  PermGroup s5(5, {perm_from_cycles(5, {{0, 1, 2, 3, 4}}), perm_from_cycles(5, {{0, 1}})});
  const StabilizerChain& c = s5.chain();
  for (const auto& lev : c.levels()) {
    std::set<Point> images;
    for (const auto& [pt, rep] : lev.transversal) {
      CHECK(rep[lev.base_point] == pt);
      CHECK(images.insert(pt).second);
    }
  }
}

TEST_CASE("chain representatives fix earlier base points") {
  PermGroup d8 = dihedral8();
  const StabilizerChain& c = d8.chain();
  for (std::size_t i = 0; i < c.levels().size(); ++i)
    for (const auto& [pt, rep] : c.levels()[i].transversal)
      for (std::size_t j = 0; j < i; ++j)
        CHECK(rep[c.levels()[j].base_point] == c.levels()[j].base_point);
}

TEST_CASE("enumeration matches closure as a set") {
  auto& eng = oracle::rng();
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(eng() % 5);
    std::vector<Perm> gens{oracle::random_perm(n, eng)};
    if (trial % 2) gens.push_back(oracle::random_perm(n, eng));
    PermGroup g(n, gens);
    auto a = g.enumerate(BigInt(100000));
    auto b = oracle::closure(n, gens);
    std::set<Perm> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    CHECK(sa == sb);
  }
}

TEST_CASE("pointwise stabilizers") {
  PermGroup s4(4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{0, 1}})});
  CHECK(pointwise_stabilizer(s4, {0}).order() == 6);
  CHECK(pointwise_stabilizer(s4, {0, 1, 2, 3}).order() == 1);

  PermGroup d8 = dihedral8();
  PermGroup st = pointwise_stabilizer(d8, {0});
  CHECK(st.order() == 2);
  CHECK(st.contains(perm_from_cycles(4, {{1, 3}})));

  // stabilizer equals the filtered closure
  auto& eng = oracle::rng();
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(eng() % 5);
    std::vector<Perm> gens{oracle::random_perm(n, eng), oracle::random_perm(n, eng)};
    PermGroup g(n, gens);
    std::vector<Point> pts{0, static_cast<Point>(1 + eng() % (n - 1))};
    PermGroup st2 = pointwise_stabilizer(g, pts);
    std::size_t expected = 0;
    for (const Perm& x : oracle::closure(n, gens)) {
      bool fixes = true;
      for (Point p : pts) fixes = fixes && x[p] == p;
      if (fixes) {
        ++expected;
        CHECK(st2.contains(x));
      }
    }
    CHECK(st2.order() == static_cast<long>(expected));
  }
}

TEST_CASE("subgroup with cosets") {
  PermGroup s4(4, {perm_from_cycles(4, {{0, 1, 2, 3}}), perm_from_cycles(4, {{0, 1}})});

  SECTION("trivially true predicate returns the whole group") {
    auto [h, reps] = subgroup_with_cosets(s4, [](const Perm&) { return true; }, BigInt(10));
    CHECK(reps.size() == 1);
    CHECK(reps[0].is_identity());
    CHECK(h.order() == 24);
  }

  SECTION("even permutations in Sym_4 have index 2") {
    auto [h, reps] = subgroup_with_cosets(s4, [](const Perm& g) { return g.is_even(); }, BigInt(4));
    CHECK(reps.size() == 2);
    CHECK(h.order() == 12);
    for (const Perm& g : h.generators()) CHECK(g.is_even());
  }

  SECTION("D8 stabilizing {0,2} setwise: enumeration decides the index") {
    PermGroup d8 = dihedral8();
    auto pred = [](const Perm& g) {
      std::set<Point> img{g[0], g[2]};
      return img == std::set<Point>{0, 2};
    };
    // by enumeration, exactly 4 of the 8 elements fix {0,2}, so index 2
    std::size_t fixing = 0;
    for (const Perm& g : oracle::closure(4, d8.generators()))
      if (pred(g)) ++fixing;
    CHECK(fixing == 4);
    auto [h, reps] = subgroup_with_cosets(d8, pred, BigInt(8));
    CHECK(h.order() == 4);
    CHECK(reps.size() == 2);
    // coset representatives cover the group: H * reps = G
    std::set<Perm> covered;
    for (const Perm& x : h.enumerate(BigInt(100)))
      for (const Perm& r : reps) covered.insert(x * r);
    CHECK(covered.size() == 8);
  }

  SECTION("index bound is enforced") {
    CHECK_THROWS_AS(subgroup_with_cosets(
                        s4, [](const Perm& g) { return g.is_identity(); }, BigInt(5)),
                    index_bound_exceeded);
  }
}

TEST_CASE("giant test") {
  for (int n : {2, 3, 5, 8}) {
    CHECK(giant_type(symmetric_group(n)) == GiantType::symmetric);
  }
  // spec example: <(2 3 4 5 6),(0 1 2)> on 7 points is Alt_7
  PermGroup a7(7, {perm_from_cycles(7, {{2, 3, 4, 5, 6}}), perm_from_cycles(7, {{0, 1, 2}})});
  CHECK(giant_type(a7) == GiantType::alternating);
  CHECK(a7.order() == 2520);
  for (int n : {4, 5, 6, 9}) {
    CHECK(giant_type(alternating_group(n)) == GiantType::alternating);
    CHECK(alternating_group(n).order() == factorial(n) / 2);
  }
  CHECK(giant_type(dihedral8()) == GiantType::neither);
}

TEST_CASE("derived subgroup of Sym_n is Alt_n") {
  for (int n : {4, 5, 6}) {
    PermGroup d = derived_subgroup(symmetric_group(n));
    CHECK(d.order() == factorial(n) / 2);
    for (const Perm& g : d.generators()) CHECK(g.is_even());
  }
}

TEST_CASE("generator normalization keeps sets small") {
  // feed every element of Sym_6 as a generator: 719 > 2*36 triggers refinement
  std::vector<Perm> all = symmetric_group(6).enumerate(BigInt(1000));
  PermGroup fat(6, all);
  CHECK(fat.generators().size() <= 36);
  CHECK(fat.order() == 720);
}

TEST_CASE("transporter rep") {
  PermGroup d8 = dihedral8();
  auto t = transporter_rep(d8, 0, 2);
  REQUIRE(t.has_value());
  CHECK((*t)[0] == 2);
  PermGroup fix(4, {perm_from_cycles(4, {{1, 3}})});
  CHECK_FALSE(transporter_rep(fix, 0, 2).has_value());
}
