#pragma once

#include <optional>
#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

// Inhabited, downward-closed, join-closed subset of a lattice.
struct Ideal {
  FinDistLattice lattice;
  std::vector<int> members;  // sorted
  bool contains(int x) const { return subset_contains(members, x); }
  bool operator==(const Ideal& o) const { return members == o.members; }
};

// I1/I2/I3 with a witness for the first failure; nullopt means ideal.
std::optional<Violation> ideal_violation(const FinDistLattice& l,
                                         const std::vector<int>& s);
bool is_ideal(const FinDistLattice& l, const std::vector<int>& s);

Ideal principal_ideal(const FinDistLattice& l, int x);

// Does a finite ideal have a maximum generating it?
std::optional<int> principal_generator(const Ideal& i);

// Every subset passing is_ideal, ordered by (cardinality, lex member list).
std::vector<Ideal> all_ideals(const FinDistLattice& l, long long cap = kDefaultCap);

// One membership step per list element, per the inductive definition.
struct CoverWitness {
  std::vector<std::pair<int, int>> steps;  // (element, index of ideal containing it)
};
std::optional<CoverWitness> covers(const std::vector<int>& list,
                                   const std::vector<Ideal>& family);

// Least upper bound of a family of ideals: the closure of the union under
// binary joins and down-closure. covers() is the verification predicate for
// membership; agreement of the two descriptions is a tested property.
Ideal ideal_join(const FinDistLattice& l, const std::vector<Ideal>& family);

// The frame of ideals. Element i of the frame is ideals[i].
struct Spectrum {
  FinFrame frame;
  std::vector<Ideal> ideals;
};
Spectrum spectrum(const FinDistLattice& l, long long cap = kDefaultCap);

// Sublattice of compact opens; elements[i] is the frame element carried by
// lattice element i. On a finite frame this is the whole frame.
struct CompactOpens {
  FinDistLattice lattice;
  std::vector<int> elements;
};
CompactOpens compact_opens_lattice(const FinFrame& x, long long cap = kDefaultCap);

// x |-> down(x) as a lattice iso L ~ K(Spec L).
struct ObjectRoundTrip {
  bool ok = false;
  LatticeHom iso;  // from L to K(Spec L)
  std::optional<Violation> failure;
};
ObjectRoundTrip duality_roundtrip_object(const FinDistLattice& l,
                                         long long cap = kDefaultCap);

// phi: U |-> { K compact : K <= U } and theta: I |-> \/ I as mutually
// inverse frame isos O(X) ~ Idl(K(X)).
struct FrameRoundTrip {
  bool ok = false;
  std::vector<int> phi;    // O(X) -> spectrum(K X) element indices
  std::vector<int> theta;  // spectrum(K X) -> O(X)
  std::optional<Violation> failure;
};
FrameRoundTrip duality_roundtrip_frame(const FinFrame& x,
                                       long long cap = kDefaultCap);

// Functorial actions. f is the inverse-image part of a spectral locale map
// X -> Y, i.e. a FrameHom with dom O(Y) and cod O(X); its restriction to
// compacts is a LatticeHom K(Y) -> K(X), and conversely the displayed join
// formula rebuilds the frame hom.
LatticeHom K_on_hom(const FrameHom& f, long long cap = kDefaultCap);
FrameHom Spec_on_hom(const LatticeHom& h, const FinFrame& y, const FinFrame& x,
                     long long cap = kDefaultCap);

}  // namespace finloc
