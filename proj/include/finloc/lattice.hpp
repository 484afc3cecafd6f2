#pragma once

#include <string>
#include <vector>

#include "finloc/poset.hpp"

namespace finloc {

// A finite distributive lattice. The meet/join tables are stored explicitly
// even though they are derivable from the order; validation cross-checks the
// tables against the order so inconsistent inputs surface.
struct FinDistLattice {
  FinPoset poset;
  int top = -1;
  int bot = -1;
  std::vector<int> meet_table;  // row-major n*n
  std::vector<int> join_table;

  int n() const { return poset.n; }
  bool leq(int i, int j) const { return poset.leq(i, j); }
  int meet(int i, int j) const { return meet_table[size_t(i) * n() + j]; }
  int join(int i, int j) const { return join_table[size_t(i) * n() + j]; }
  std::string label(int i) const { return poset.label(i); }
  bool operator==(const FinDistLattice& o) const {
    return poset == o.poset && top == o.top && bot == o.bot &&
           meet_table == o.meet_table && join_table == o.join_table;
  }
};

// Derives the lattice structure from a poset. Throws ValidationError with
// NoMeet(i,j) / NoJoin(i,j) / NoTop / NoBot / NotDistributive(x,y,z).
FinDistLattice build_lattice(const FinPoset& p);

// Full axiom report: monoid laws, absorption, distributivity, its dual
// (as a derived law), and table/order agreement.
Report validate_lattice(const FinDistLattice& l);

struct LatticeHom {
  FinDistLattice dom, cod;
  std::vector<int> table;
  int operator()(int i) const { return table[i]; }
  bool operator==(const LatticeHom& o) const {
    return dom == o.dom && cod == o.cod && table == o.table;
  }
};

// Preserves top, bot, binary meets and binary joins.
bool is_lattice_hom(const FinDistLattice& dom, const FinDistLattice& cod,
                    const std::vector<int>& table);

// An iso is a bijection that is monotone with monotone inverse; preservation
// of the four structure constants follows and is asserted.
bool is_iso(const LatticeHom& h);

std::vector<LatticeHom> enumerate_lattice_homs(const FinDistLattice& k,
                                               const FinDistLattice& l,
                                               long long cap = kDefaultCap);
std::vector<LatticeHom> find_isos(const FinDistLattice& k,
                                  const FinDistLattice& l,
                                  long long cap = kDefaultCap);
bool isomorphic(const FinDistLattice& k, const FinDistLattice& l,
                long long cap = kDefaultCap);

// Birkhoff oracle. Downsets are ordered by (cardinality, lexicographic
// member list); members[i] names the downset carried by element i.
struct DownsetLattice {
  FinDistLattice lattice;
  std::vector<std::vector<int>> members;
};
DownsetLattice downset_lattice(const FinPoset& p, long long cap = kDefaultCap);

// Subposet of elements with exactly one lower cover, excluding bottom.
struct JoinIrreducibles {
  FinPoset poset;
  std::vector<int> elements;  // indices into the source lattice
};
JoinIrreducibles join_irreducibles(const FinDistLattice& l);

}  // namespace finloc
