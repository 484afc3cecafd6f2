#include <sstream>

#include "doctest.h"

#include "finloc/corpus.hpp"
#include "finloc/io.hpp"

using namespace finloc;

namespace {

std::string fixture(const std::string& name) {
  return std::string(FINLOC_FIXTURES) + "/" + name;
}

// minimal DOT reader for the round-trip check: collects "nI -> nJ;" edges
std::vector<std::pair<int, int>> edges_of_dot(const std::string& dot) {
  std::vector<std::pair<int, int>> out;
  std::istringstream is(dot);
  std::string line;
  while (std::getline(is, line)) {
    auto arrow = line.find("->");
    if (arrow == std::string::npos) continue;
    int a = std::stoi(line.substr(line.find('n') + 1));
    int b = std::stoi(line.substr(line.find('n', arrow) + 1));
    out.push_back({a, b});
  }
  return out;
}

}  // namespace

TEST_CASE("parsing the shipped fixtures") {
  auto c3 = parse_lattice_text(read_file(fixture("c3.lattice")));
  CHECK(c3.n() == 3);
  CHECK(c3.label(1) == "a");
  CHECK(c3.top == 2);

  auto m2 = parse_lattice_text(read_file(fixture("m2.lattice")));
  CHECK(m2.meet(1, 2) == m2.bot);

  for (const char* name :
       {"one.lattice", "c2.lattice", "c3.lattice", "c4.lattice", "c5.lattice",
        "m2.lattice", "m2_top.lattice", "m2_bot.lattice", "cube.lattice"})
    CHECK_NOTHROW(parse_lattice_text(read_file(fixture(name))));

  for (const char* name : {"one.domain", "c2.domain", "flat2.domain",
                           "flat3.domain", "m2.domain"})
    CHECK_NOTHROW(parse_domain_text(read_file(fixture(name))));
}

TEST_CASE("fixtures match the built-in corpus") {
  auto m2 = parse_lattice_text(read_file(fixture("m2.lattice")));
  CHECK(m2 == corpus::m2().lat);
  auto c5 = parse_lattice_text(read_file(fixture("c5.lattice")));
  CHECK(c5 == corpus::chain(5).lat);
  auto cube = parse_lattice_text(read_file(fixture("cube.lattice")));
  CHECK(isomorphic(cube, corpus::cube().lat));
  auto n5 = parse_poset_text(read_file(fixture("n5.poset")));
  CHECK(n5.rel == corpus::n5_poset().rel);
}

TEST_CASE("a diamond missing one cover fails with NoJoin") {
  try {
    parse_lattice_text(read_file(fixture("broken_m2.lattice")));
    FAIL("expected NoJoin");
  } catch (const ValidationError& e) {
    CHECK(e.law() == "NoJoin");
    CHECK(e.witness() == std::vector<int>{1, 2});
  }
}

TEST_CASE("a domain file needs a bot line") {
  CHECK_THROWS_AS(parse_domain_text("elements: a b\nle: a b\n"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_poset_text("elements: a b\nle: a\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_poset_text("le: a b\n"), ParseError);
  CHECK_THROWS_AS(parse_poset_text("elements: a\nwhat: a\n"), ParseError);
}

TEST_CASE("top and bot overrides are checked") {
  CHECK_NOTHROW(parse_lattice_text("elements: 0 1\nle: 0 1\nbot: 0\ntop: 1\n"));
  CHECK_THROWS_AS(parse_lattice_text("elements: 0 1\nle: 0 1\ntop: 0\n"),
                  ValidationError);
}

TEST_CASE("emit_dot is byte-stable") {
  auto c3 = corpus::chain_poset(3);
  CHECK(emit_dot(c3) ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"a\"];\n"
        "  n2 [label=\"1\"];\n"
        "  n0 -> n1;\n"
        "  n1 -> n2;\n"
        "}\n");
}

TEST_CASE("dot edges reconstruct the hasse cover") {
  for (const auto& nf : corpus::frames()) {
    const auto& p = nf.frame.lat.poset;
    auto edges = edges_of_dot(emit_dot(p));
    auto cover = hasse_cover(p);
    std::vector<uint8_t> rebuilt(size_t(p.n) * p.n, 0);
    for (auto [a, b] : edges) rebuilt[size_t(a) * p.n + b] = 1;
    CHECK(rebuilt == cover);
  }
}

TEST_CASE("m2 renders as a diamond") {
  auto edges = edges_of_dot(emit_dot(corpus::m2_poset()));
  CHECK(edges.size() == 4);
}

TEST_CASE("lattice text round-trips") {
  for (const auto& nf : corpus::frames()) {
    auto back = parse_lattice_text(lattice_to_text(nf.frame.lat));
    CHECK(back == nf.frame.lat);
  }
}

TEST_CASE("nucleus tables parse against frame labels") {
  FinFrame c3{parse_lattice_text(read_file(fixture("c3.lattice")))};
  auto table = parse_nucleus_table(c3, "j: 0->a a->a 1->1");
  CHECK(table == std::vector<int>{1, 1, 2});
  CHECK(format_nucleus_table(c3, table) == "j: 0->a a->a 1->1");
  CHECK_THROWS_AS(parse_nucleus_table(c3, "j: 0->z"), ParseError);
  CHECK_THROWS_AS(parse_nucleus_table(c3, "j: 0->a"), ParseError);
}

TEST_CASE("input kind comes from the extension") {
  CHECK(kind_of_path("x.poset") == InputKind::Poset);
  CHECK(kind_of_path("x.lattice") == InputKind::Lattice);
  CHECK(kind_of_path("x.domain") == InputKind::Domain);
  CHECK_THROWS_AS(kind_of_path("x.txt"), ParseError);
}
