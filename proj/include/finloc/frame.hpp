#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finloc/lattice.hpp"

namespace finloc {

// Every finite distributive lattice is a frame; the wrapper marks intent and
// carries the subset-join operation.
struct FinFrame {
  FinDistLattice lat;

  int n() const { return lat.n(); }
  int top() const { return lat.top; }
  int bot() const { return lat.bot; }
  bool leq(int i, int j) const { return lat.leq(i, j); }
  int meet(int i, int j) const { return lat.meet(i, j); }
  int join(int i, int j) const { return lat.join(i, j); }
  std::string label(int i) const { return lat.label(i); }
  bool operator==(const FinFrame& o) const { return lat == o.lat; }
};

FinFrame make_frame(FinDistLattice l);
FinFrame frame_from_poset(const FinPoset& p);

// Least upper bound of a subset; the empty join is bot.
int join_subset(const FinFrame& f, const std::vector<int>& s);
int meet_subset(const FinFrame& f, const std::vector<int>& s);  // empty meet = top

// Frame distributivity over subset joins, checked exhaustively (2^n subsets).
Report validate_frame(const FinFrame& f, long long cap = kDefaultCap);

struct FrameHom {
  FinFrame dom, cod;
  std::vector<int> table;
  int operator()(int i) const { return table[i]; }
  bool operator==(const FrameHom& o) const {
    return dom == o.dom && cod == o.cod && table == o.table;
  }
};

// Preserves top, bot, binary meets and binary joins; on finite carriers this
// is equivalent to preserving top, binary meets and all subset joins.
bool is_frame_hom(const FinFrame& dom, const FinFrame& cod,
                  const std::vector<int>& table);
bool preserves_subset_joins(const FinFrame& dom, const FinFrame& cod,
                            const std::vector<int>& table,
                            long long cap = kDefaultCap);

// Right adjoint of a subset-join-preserving monotone map, computed as
// g(b) = \/ { x : h(x) <= b }. Throws NotJoinPreserving with a witness subset.
std::vector<int> right_adjoint(const FinFrame& a, const FinFrame& b,
                               const std::vector<int>& table);

// Heyting implication u => v, the right adjoint of (-) /\ u.
int heyting(const FinFrame& f, int u, int v);

// u << v decided literally: every directed subset whose join dominates v has
// a member above u.
bool way_below(const FinFrame& f, int u, int v, long long cap = kDefaultCap);
bool is_compact(const FinFrame& f, int u, long long cap = kDefaultCap);

// u <<| v: some w has u /\ w = bot and v \/ w = top.
bool well_inside(const FinFrame& f, int u, int v);
std::optional<int> complement(const FinFrame& f, int u);

// Intensional family of basic opens; repetitions allowed.
struct BaseFamily {
  FinFrame frame;
  std::vector<int> member;
};

// Every element must be the join of the members below it.
bool is_base(const BaseFamily& b);

// Closure under finite joins, indexed by subsets of the original index set,
// deduplicated to distinct elements. The empty join contributes bot.
BaseFamily directify_base(const BaseFamily& b, long long cap = kDefaultCap);

// Class predicates with witnessing certificate (the base) or violation.
struct ClassReport {
  std::string predicate;
  bool value = false;
  std::vector<int> certificate;  // the witnessing base, when value holds
  std::optional<Violation> witness;
};

ClassReport is_spectral(const FinFrame& f, long long cap = kDefaultCap);
ClassReport is_zero_dimensional(const FinFrame& f);
ClassReport is_regular(const FinFrame& f, long long cap = kDefaultCap);
ClassReport is_stone(const FinFrame& f, long long cap = kDefaultCap);

std::vector<FrameHom> frame_homs(const FinFrame& f, const FinFrame& g,
                                 long long cap = kDefaultCap);

// A point is a frame hom into the two-element frame, reported as the
// completely prime filter of elements sent to top.
struct Point {
  FinFrame frame;
  std::vector<int> filter;
};

bool is_completely_prime_filter(const FinFrame& f, const std::vector<int>& s,
                                long long cap = kDefaultCap);
std::vector<Point> points(const FinFrame& f, long long cap = kDefaultCap);

// The two-element frame (the classical fragment of the terminal locale).
FinFrame two_chain_frame();

}  // namespace finloc
