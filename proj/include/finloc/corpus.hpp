#pragma once

#include <string>
#include <vector>

#include "finloc/scott.hpp"

namespace finloc {
namespace corpus {

// Named structures used throughout the suites. Up to isomorphism these cover
// every distributive lattice with at most 5 elements, plus the 2^3 cube.
FinPoset chain_poset(int n);       // labels 0, a, b, ..., 1
FinPoset antichain_poset(int n);
FinPoset m2_poset();               // diamond: bot < l, r < top
FinPoset n5_poset();               // pentagon; a lattice but not distributive
FinPoset cube_poset();             // 2^3

FinFrame one();      // terminal frame on one element
FinFrame chain(int n);
FinFrame m2();
FinFrame m2_top();   // diamond with an extra top appended
FinFrame m2_bot();   // diamond with an extra bottom appended
FinFrame cube();

struct NamedFrame {
  std::string name;
  FinFrame frame;
};

// The full fixture corpus: one, chains 2..5, m2, m2_top, m2_bot, cube.
std::vector<NamedFrame> frames();
std::vector<NamedFrame> frames_up_to(int max_elements);

struct NamedDomain {
  std::string name;
  ScottDomain domain;
};

ScottDomain domain_one();
ScottDomain domain_chain2();
ScottDomain flat_domain(int k);  // bottom under k incomparable elements
ScottDomain domain_m2();

// one, chain2, flat2, flat3, m2
std::vector<NamedDomain> domains();

// Every labeled poset on n elements (brute force over relations).
std::vector<FinPoset> all_posets(int n, long long cap = kDefaultCap);

}  // namespace corpus
}  // namespace finloc
