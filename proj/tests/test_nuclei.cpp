#include <algorithm>

#include "doctest.h"

#include "finloc/corpus.hpp"
#include "finloc/nucleus.hpp"

using namespace finloc;

namespace {

// oracle: all tables by full n^n scan, no pruning
std::vector<std::vector<int>> brute_force_tables(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> table(n, 0);
  for (;;) {
    out.push_back(table);
    int pos = n - 1;
    while (pos >= 0 && table[pos] == n - 1) table[pos--] = 0;
    if (pos < 0) break;
    ++table[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("nucleus validation examples") {
  auto c3 = corpus::chain(3);
  CHECK(check_nucleus(c3, {0, 1, 2}).ok());  // identity
  CHECK(check_nucleus(c3, {2, 2, 2}).ok());  // constant top

  // 0 |-> a, a |-> 1, 1 |-> 1: j(j(0)) = 1 != a = j(0)
  Report r = check_nucleus(c3, {1, 2, 2});
  CHECK_FALSE(r.ok());
  bool idem = false;
  for (const auto& v : r.violations)
    if (v.law == "NotIdempotent" && v.witness == std::vector<int>{0}) idem = true;
  CHECK(idem);
  CHECK_THROWS_AS(validate_nucleus(c3, {1, 2, 2}), ValidationError);
}

TEST_CASE("closed and open nuclei") {
  auto c3 = corpus::chain(3);
  CHECK(closed_nucleus(c3, c3.bot()) == identity_nucleus(c3));
  CHECK(open_nucleus(c3, c3.top()) == identity_nucleus(c3));
  CHECK(closed_nucleus(c3, 1).table == std::vector<int>{1, 1, 2});
  CHECK(open_nucleus(c3, 1).table == std::vector<int>{0, 2, 2});
  for (const auto& nf : corpus::frames_up_to(5)) {
    for (int u = 0; u < nf.frame.n(); ++u) {
      CHECK(check_nucleus(nf.frame, closed_nucleus(nf.frame, u).table).ok());
      CHECK(check_nucleus(nf.frame, open_nucleus(nf.frame, u).table).ok());
    }
  }
}

TEST_CASE("nucleus meet examples") {
  auto c3 = corpus::chain(3);
  auto nucs = enumerate_nuclei(c3);
  for (const auto& j : nucs) {
    CHECK(nucleus_meet(j, top_nucleus(c3)) == j);
    CHECK(nucleus_meet(j, j) == j);
  }
  CHECK(nucleus_meet(closed_nucleus(c3, 1), open_nucleus(c3, 1)) ==
        identity_nucleus(c3));
}

TEST_CASE("nucleus join by fixpoint iteration") {
  auto c3 = corpus::chain(3);
  CHECK(nucleus_join(c3, {identity_nucleus(c3)}) == identity_nucleus(c3));
  CHECK(nucleus_join(c3, {}) == identity_nucleus(c3));
  // closed(a) and open(a) join to the top nucleus: 0 -> a -> 1 under iteration
  CHECK(nucleus_join(c3, {closed_nucleus(c3, 1), open_nucleus(c3, 1)}) ==
        top_nucleus(c3));
}

TEST_CASE("join of a singleton equals the nucleus, via the brute-force lub") {
  for (const auto& nf : corpus::frames_up_to(4)) {
    auto nucs = enumerate_nuclei(nf.frame);
    for (const auto& j : nucs) CHECK(nucleus_join(nf.frame, {j}) == j);
  }
}

TEST_CASE("enumerate_nuclei equals an unpruned scan on small frames") {
  for (const auto& nf : corpus::frames_up_to(5)) {
    auto pruned = enumerate_nuclei(nf.frame);
    std::vector<std::vector<int>> oracle;
    for (const auto& t : brute_force_tables(nf.frame.n()))
      if (check_nucleus(nf.frame, t).ok()) oracle.push_back(t);
    REQUIRE(pruned.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i)
      CHECK(pruned[i].table == oracle[i]);
  }
}

TEST_CASE("nucleus counts on the named frames") {
  CHECK(enumerate_nuclei(corpus::chain(2)).size() == 2);
  auto c3nucs = enumerate_nuclei(corpus::chain(3));
  REQUIRE(c3nucs.size() == 4);
  auto c3 = corpus::chain(3);
  std::vector<Nucleus> expected = {identity_nucleus(c3), open_nucleus(c3, 1),
                                   closed_nucleus(c3, 1), top_nucleus(c3)};
  for (const auto& e : expected)
    CHECK(std::count(c3nucs.begin(), c3nucs.end(), e) == 1);

  // matches the 2^|points| count for the diamond
  CHECK(enumerate_nuclei(corpus::m2()).size() == 4);
}

TEST_CASE("sublocale frames of the 3-chain") {
  auto c3 = corpus::chain(3);
  auto whole = sublocale_frame(identity_nucleus(c3));
  CHECK(whole.carrier == std::vector<int>{0, 1, 2});
  CHECK(isomorphic(whole.frame.lat, c3.lat));

  auto point = sublocale_frame(top_nucleus(c3));
  CHECK(point.carrier == std::vector<int>{2});
  CHECK(point.frame.n() == 1);

  auto closed_a = sublocale_frame(closed_nucleus(c3, 1));
  CHECK(closed_a.carrier == std::vector<int>{1, 2});
  CHECK(closed_a.frame.n() == 2);
}

TEST_CASE("sublocale meets are inherited and joins pass through the nucleus") {
  for (const auto& nf : corpus::frames_up_to(4))
    for (const auto& j : enumerate_nuclei(nf.frame)) {
      auto sub = sublocale_frame(j);
      const int m = int(sub.carrier.size());
      for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
          int meet_in_base = nf.frame.meet(sub.carrier[s], sub.carrier[t]);
          CHECK(sub.carrier[sub.frame.meet(s, t)] == meet_in_base);
          int join_in_base = nf.frame.join(sub.carrier[s], sub.carrier[t]);
          CHECK(sub.carrier[sub.frame.join(s, t)] == j.table[join_in_base]);
        }
    }
}

TEST_CASE("the sublocale surjection is left adjoint to inclusion") {
  for (const auto& nf : corpus::frames_up_to(4))
    for (const auto& j : enumerate_nuclei(nf.frame)) {
      auto sub = sublocale_frame(j);
      for (int u = 0; u < nf.frame.n(); ++u)
        for (size_t t = 0; t < sub.carrier.size(); ++t) {
          bool left = sub.frame.leq(sub.surjection[u], int(t));
          bool right = nf.frame.leq(u, sub.carrier[t]);
          CHECK(left == right);
        }
    }
}

TEST_CASE("johnstone decomposition re-joins every nucleus") {
  auto c3 = corpus::chain(3);
  auto closed_a = closed_nucleus(c3, 1);
  CHECK(nucleus_join(c3, johnstone_decompose(identity_nucleus(c3))) ==
        identity_nucleus(c3));
  CHECK(nucleus_join(c3, johnstone_decompose(top_nucleus(c3))) ==
        top_nucleus(c3));
  CHECK(nucleus_join(c3, johnstone_decompose(closed_a)) == closed_a);
  for (const auto& nf : corpus::frames_up_to(4))
    for (const auto& j : enumerate_nuclei(nf.frame))
      CHECK(nucleus_join(nf.frame, johnstone_decompose(j)) == j);
}

TEST_CASE("prenuclei are monotone") {
  for (const auto& nf : corpus::frames_up_to(4)) {
    for (const auto& t : brute_force_tables(nf.frame.n()))
      if (check_prenucleus(nf.frame, t).ok())
        CHECK(is_monotone(nf.frame.lat.poset, nf.frame.lat.poset, t));
  }
}

TEST_CASE("finite compositions are prenuclei and form a directed family") {
  auto c3 = corpus::chain(3);
  std::vector<Nucleus> family = {closed_nucleus(c3, 1), open_nucleus(c3, 1)};
  std::vector<std::vector<int>> words = {{},     {0},    {1},    {0, 0},
                                         {0, 1}, {1, 0}, {1, 1}, {0, 1, 0}};
  for (const auto& s : words)
    CHECK(check_prenucleus(c3, finite_composition(c3, family, s).table).ok());
  // concatenation dominates both factors (the directedness witness)
  for (const auto& s : words)
    for (const auto& t : words) {
      std::vector<int> st = s;
      st.insert(st.end(), t.begin(), t.end());
      auto ks = finite_composition(c3, family, s);
      auto kt = finite_composition(c3, family, t);
      auto kst = finite_composition(c3, family, st);
      for (int u = 0; u < c3.n(); ++u) {
        CHECK(c3.leq(ks.table[u], kst.table[u]));
        CHECK(c3.leq(kt.table[u], kst.table[u]));
      }
    }
}

TEST_CASE("join distributivity and the directed pointwise shortcut") {
  for (const auto& nf : corpus::frames_up_to(4)) {
    const auto& f = nf.frame;
    auto nucs = enumerate_nuclei(f);
    const int m = int(nucs.size());
    for (long long mask = 0; mask < (1LL << m); ++mask) {
      std::vector<Nucleus> fam;
      for (int i = 0; i < m; ++i)
        if (mask & (1LL << i)) fam.push_back(nucs[i]);
      Nucleus join = nucleus_join(f, fam);
      for (const auto& j : nucs) {
        std::vector<Nucleus> met;
        for (const auto& k : fam) met.push_back(nucleus_meet(j, k));
        CHECK(nucleus_meet(j, join) == nucleus_join(f, met));
      }
      // directed families: the pointwise join needs no iteration
      if (fam.empty()) continue;
      bool directed = true;
      for (const auto& a : fam)
        for (const auto& b : fam) {
          bool bounded = false;
          for (const auto& c : fam)
            if (nucleus_leq(a, c) && nucleus_leq(b, c)) bounded = true;
          if (!bounded) directed = false;
        }
      if (directed) {
        std::vector<int> pointwise(f.n());
        for (int u = 0; u < f.n(); ++u) {
          int acc = f.bot();
          for (const auto& k : fam) acc = f.join(acc, k.table[u]);
          pointwise[u] = acc;
        }
        CHECK(join.table == pointwise);
      }
    }
  }
}

TEST_CASE("closed and open nuclei complement each other in the patch order") {
  for (const auto& nf : corpus::frames_up_to(4)) {
    const auto& f = nf.frame;
    for (int u = 0; u < f.n(); ++u) {
      auto c = closed_nucleus(f, u);
      auto o = open_nucleus(f, u);
      CHECK(nucleus_meet(c, o) == identity_nucleus(f));
      CHECK(nucleus_join(f, {c, o}) == top_nucleus(f));
    }
  }
}

TEST_CASE("every enumerated nucleus preserves directed joins") {
  for (const auto& nf : corpus::frames_up_to(4))
    for (const auto& j : enumerate_nuclei(nf.frame))
      CHECK(preserves_directed_joins(j));
}
