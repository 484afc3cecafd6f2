#include "doctest.h"

#include "finloc/corpus.hpp"
#include "finloc/poset.hpp"

using namespace finloc;

namespace {

std::vector<uint8_t> identity_rel(int n) {
  std::vector<uint8_t> rel(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i) rel[size_t(i) * n + i] = 1;
  return rel;
}

}  // namespace

TEST_CASE("validate_poset accepts the discrete order") {
  FinPoset p = validate_poset(3, identity_rel(3));
  CHECK(p.n == 3);
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(0, 1));
}

TEST_CASE("validate_poset rejects the full relation on two elements") {
  std::vector<uint8_t> rel = {1, 1, 1, 1};
  try {
    validate_poset(2, rel);
    FAIL("expected NotAntisymmetric");
  } catch (const ValidationError& e) {
    CHECK(e.law() == "NotAntisymmetric");
    CHECK(e.witness() == std::vector<int>{0, 1});
  }
}

TEST_CASE("validate_poset names a transitivity witness") {
  // 0 <= a and a <= 1 without 0 <= 1
  std::vector<uint8_t> rel = identity_rel(3);
  rel[0 * 3 + 1] = 1;
  rel[1 * 3 + 2] = 1;
  try {
    validate_poset(3, rel);
    FAIL("expected NotTransitive");
  } catch (const ValidationError& e) {
    CHECK(e.law() == "NotTransitive");
    CHECK(e.witness() == std::vector<int>{0, 1, 2});
  }
}

TEST_CASE("hasse_cover of the named examples") {
  auto c3 = corpus::chain_poset(3);
  auto cover = hasse_cover(c3);
  CHECK(cover == std::vector<uint8_t>{0, 1, 0, 0, 0, 1, 0, 0, 0});

  auto a2 = corpus::antichain_poset(2);
  CHECK(hasse_cover(a2) == std::vector<uint8_t>{0, 0, 0, 0});

  auto m2 = corpus::m2_poset();
  auto mcover = hasse_cover(m2);
  int edges = 0;
  for (auto b : mcover) edges += b;
  CHECK(edges == 4);
  CHECK(mcover[0 * 4 + 1]);
  CHECK(mcover[0 * 4 + 2]);
  CHECK(mcover[1 * 4 + 3]);
  CHECK(mcover[2 * 4 + 3]);
}

TEST_CASE("hasse_cover round-trips through the closure") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : corpus::all_posets(n)) {
      auto closed = reflexive_transitive_closure(p.n, hasse_cover(p));
      CHECK(closed == p.rel);
    }
  auto n5 = corpus::n5_poset();
  CHECK(reflexive_transitive_closure(n5.n, hasse_cover(n5)) == n5.rel);
  auto cube = corpus::cube_poset();
  CHECK(reflexive_transitive_closure(cube.n, hasse_cover(cube)) == cube.rel);
}

TEST_CASE("enumerate_monotone_maps matches the frozen counts") {
  auto c2 = corpus::chain_poset(2);
  auto maps = enumerate_monotone_maps(c2, c2);
  REQUIRE(maps.size() == 3);  // brute force over the 4 tables: 00, 01, 11
  CHECK(maps[0].table == std::vector<int>{0, 0});
  CHECK(maps[1].table == std::vector<int>{0, 1});
  CHECK(maps[2].table == std::vector<int>{1, 1});

  CHECK(enumerate_monotone_maps(corpus::antichain_poset(2), c2).size() == 4);

  auto one = corpus::chain_poset(1);
  CHECK(enumerate_monotone_maps(one, corpus::chain_poset(3)).size() == 3);
}

TEST_CASE("enumeration agrees with a direct filter over all tables") {
  for (int np = 1; np <= 3; ++np)
    for (int nq = 1; nq <= 3; ++nq)
      for (const auto& p : corpus::all_posets(np))
        for (const auto& q : corpus::all_posets(nq)) {
          auto maps = enumerate_monotone_maps(p, q);
          // odometer over all |Q|^|P| tables
          long long count = 0;
          std::vector<int> table(p.n, 0);
          for (;;) {
            if (is_monotone(p, q, table)) ++count;
            int pos = p.n - 1;
            while (pos >= 0 && table[pos] == q.n - 1) table[pos--] = 0;
            if (pos < 0) break;
            ++table[pos];
          }
          CHECK(static_cast<long long>(maps.size()) == count);
          for (const auto& m : maps) CHECK(is_monotone(p, q, m.table));
        }
}

TEST_CASE("enumerate_monotone_maps honors the cap") {
  auto c3 = corpus::chain_poset(3);
  CHECK_THROWS_AS(enumerate_monotone_maps(c3, c3, 5), CapExceeded);
}

TEST_CASE("directed subsets are detected literally") {
  auto m2 = corpus::m2_poset();
  CHECK_FALSE(is_directed_subset(m2, {}));           // must be inhabited
  CHECK(is_directed_subset(m2, {0}));
  CHECK_FALSE(is_directed_subset(m2, {1, 2}));       // no bound inside
  CHECK(is_directed_subset(m2, {1, 2, 3}));
}
