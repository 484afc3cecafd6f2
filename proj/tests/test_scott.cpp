#include <algorithm>

#include "doctest.h"

#include "finloc/corpus.hpp"
#include "finloc/scott.hpp"

using namespace finloc;

namespace {

// two maximal elements above a pair with two distinct minimal upper bounds
FinPoset not_bounded_complete_poset() {
  // bot < m < a, b ; a, b < c, d
  int n = 6;
  std::vector<uint8_t> rel(size_t(n) * n, 0);
  auto set = [&](int i, int j) { rel[size_t(i) * n + j] = 1; };
  set(0, 1);
  set(1, 2);
  set(1, 3);
  set(2, 4);
  set(2, 5);
  set(3, 4);
  set(3, 5);
  return validate_poset(
      6, reflexive_transitive_closure(6, rel),
      {"bot", "m", "a", "b", "c", "d"});
}

}  // namespace

TEST_CASE("scott domain validation") {
  CHECK_NOTHROW(corpus::flat_domain(2));
  CHECK_NOTHROW(corpus::domain_m2());  // lattices are bounded-complete

  auto p = corpus::m2_poset();
  CHECK_THROWS_WITH_AS(validate_scott_domain(p, 1),
                       doctest::Contains("NotPointed"), ValidationError);

  try {
    validate_scott_domain(not_bounded_complete_poset(), 0);
    FAIL("expected NotBoundedComplete");
  } catch (const ValidationError& e) {
    CHECK(e.law() == "NotBoundedComplete");
    // the witness subset has upper bounds but no least one
    auto p6 = not_bounded_complete_poset();
    CHECK_FALSE(upper_bounds(p6, e.witness()).empty());
    CHECK_FALSE(least_upper_bound(p6, e.witness()).has_value());
  }
}

TEST_CASE("bounded_above") {
  auto flat = corpus::flat_domain(2);
  CHECK(bounded_above(flat, 0, 1));  // bottom is below everything
  CHECK(bounded_above(flat, 0, 2));
  CHECK_FALSE(bounded_above(flat, 1, 2));
  // consequence: the principal filters are disjoint
  std::vector<int> inter;
  auto u1 = upset(flat, 1), u2 = upset(flat, 2);
  std::set_intersection(u1.begin(), u1.end(), u2.begin(), u2.end(),
                        std::back_inserter(inter));
  CHECK(inter.empty());
}

TEST_CASE("scott frames of the named domains") {
  auto sig2 = scott_frame(corpus::domain_chain2());
  CHECK(sig2.frame.n() == 3);
  CHECK(isomorphic(sig2.frame.lat, corpus::chain(3).lat));

  auto sigflat = scott_frame(corpus::flat_domain(2));
  CHECK(sigflat.frame.n() == 5);

  auto sig1 = scott_frame(corpus::domain_one());
  CHECK(sig1.frame.n() == 2);
}

TEST_CASE("the top open is the principal filter of bottom") {
  for (const auto& nd : corpus::domains()) {
    auto sf = scott_frame(nd.domain);
    CHECK(sf.opens[sf.frame.top()] == upset(nd.domain, nd.domain.bot));
  }
}

TEST_CASE("every Scott open is the union of the filters it contains") {
  for (const auto& nd : corpus::domains()) {
    auto sf = scott_frame(nd.domain);
    for (const auto& open : sf.opens) {
      std::vector<int> unions;
      for (int c : open) {
        auto up = upset(nd.domain, c);
        unions.insert(unions.end(), up.begin(), up.end());
      }
      CHECK(canonical_subset(unions) == open);
    }
  }
}

TEST_CASE("scott base of flat-2 is all five opens") {
  auto sf = scott_frame(corpus::flat_domain(2));
  auto base = scott_base(sf);
  CHECK(base.member == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(is_base(base));
}

TEST_CASE("SO1 and SO2 agree on finite posets") {
  for (const auto& nd : corpus::domains()) {
    const auto& d = nd.domain;
    const int n = d.poset.n;
    for (long long mask = 0; mask < (1LL << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1LL << i)) s.push_back(i);
      if (upward_closed(d, s)) CHECK(inaccessible_by_directed_joins(d, s));
    }
  }
}

TEST_CASE("spectrality certificates for the domain corpus") {
  for (const auto& nd : corpus::domains())
    CHECK_MESSAGE(is_spectral_scott(nd.domain).value, nd.name);
}

TEST_CASE("principal filters reverse bounded joins") {
  for (const auto& nd : corpus::domains()) {
    const auto& d = nd.domain;
    for (int x = 0; x < d.poset.n; ++x)
      for (int y = 0; y < d.poset.n; ++y) {
        std::vector<int> inter;
        auto ux = upset(d, x), uy = upset(d, y);
        std::set_intersection(ux.begin(), ux.end(), uy.begin(), uy.end(),
                              std::back_inserter(inter));
        if (bounded_above(d, x, y)) {
          auto lub = least_upper_bound(d.poset, {x, y});
          REQUIRE(lub.has_value());  // bounded completeness
          CHECK(upset(d, *lub) == inter);
        } else {
          CHECK(inter.empty());
        }
      }
  }
}

TEST_CASE("sierpinski universal property on the named frames") {
  auto c2 = corpus::chain(2);
  auto cert2 = verify_sierpinski_up(c2);
  CHECK(cert2.ok);
  CHECK(cert2.hom_count == std::vector<int>{1, 1});

  auto m2 = corpus::m2();
  auto certm = verify_sierpinski_up(m2);
  CHECK(certm.ok);
  CHECK(certm.unique[1] == std::vector<int>{0, 1, 3});  // bot, l, top

  Sierpinski s = sierpinski();
  auto certs = verify_sierpinski_up(s.frame);
  CHECK(certs.ok);
  CHECK(certs.unique[s.truth] == std::vector<int>{0, 1, 2});  // the identity
}

TEST_CASE("the unique hom hits the base trichotomy") {
  // on the three compact opens of Sierpinski the unique hom returns top, U, bot
  Sierpinski s = sierpinski();
  for (const auto& nf : corpus::frames_up_to(4)) {
    auto cert = verify_sierpinski_up(nf.frame);
    REQUIRE(cert.ok);
    for (int u = 0; u < nf.frame.n(); ++u) {
      const auto& h = cert.unique[u];
      CHECK(h[s.frame.top()] == nf.frame.top());
      CHECK(h[s.truth] == u);
      CHECK(h[s.frame.bot()] == nf.frame.bot());
    }
  }
}

TEST_CASE("on finite domains every element is sharp") {
  for (const auto& nd : corpus::domains()) {
    auto sf = scott_frame(nd.domain);
    auto sharp = sharp_elements(sf);
    CHECK(int(sharp.size()) == nd.domain.poset.n);
  }
}

TEST_CASE("point equivalence certificates") {
  for (const auto& nd : corpus::domains()) {
    auto cert = points_equivalences(nd.domain);
    CHECK_MESSAGE(cert.ok, nd.name);
    CHECK(cert.point_count == cert.domain_size);
    CHECK(cert.spectral_point_count == cert.point_count);
    CHECK(cert.patch_point_count == cert.domain_size);
    CHECK(cert.sharp_count == cert.domain_size);
  }
}

TEST_CASE("worked point counts") {
  auto c2cert = points_equivalences(corpus::domain_chain2());
  CHECK(c2cert.point_count == 2);  // the filters {1} and {a,1} of Sierpinski

  auto flatcert = points_equivalences(corpus::flat_domain(2));
  CHECK(flatcert.point_count == 3);
  CHECK(flatcert.patch_point_count == 3);

  auto onecert = points_equivalences(corpus::domain_one());
  CHECK(onecert.point_count == 1);
  CHECK(onecert.patch_point_count == 1);
}
