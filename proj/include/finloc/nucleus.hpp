#pragma once

#include <vector>

#include "finloc/frame.hpp"

namespace finloc {

// Inflationary, binary-meet-preserving, idempotent endomap on a frame.
// Equality is table equality.
struct Nucleus {
  FinFrame frame;
  std::vector<int> table;
  int operator()(int u) const { return table[u]; }
  bool operator==(const Nucleus& o) const { return table == o.table; }
};

// As Nucleus but idempotency is not required. Monotonicity follows from
// meet preservation.
struct Prenucleus {
  FinFrame frame;
  std::vector<int> table;
  int operator()(int u) const { return table[u]; }
};

Report check_nucleus(const FinFrame& f, const std::vector<int>& table);
Report check_prenucleus(const FinFrame& f, const std::vector<int>& table);

// Throwing forms: NotInflationary(u) / NotMeetPreserving(u,v) / NotIdempotent(u).
Nucleus validate_nucleus(const FinFrame& f, std::vector<int> table);
Prenucleus validate_prenucleus(const FinFrame& f, std::vector<int> table);

Nucleus identity_nucleus(const FinFrame& f);
Nucleus top_nucleus(const FinFrame& f);
Nucleus closed_nucleus(const FinFrame& f, int u);  // v |-> u \/ v
Nucleus open_nucleus(const FinFrame& f, int u);    // v |-> u => v

// Pointwise order on nucleus tables.
bool nucleus_leq(const Nucleus& j, const Nucleus& k);

// Pointwise meet; the greatest lower bound.
Nucleus nucleus_meet(const Nucleus& j, const Nucleus& k);

// Least upper bound, computed as the least fixed point of iterating the
// pointwise join above each argument. Equals the join over the family of
// finite compositions; the empty join is the identity nucleus.
Nucleus nucleus_join(const FinFrame& f, const std::vector<Nucleus>& family);

// k*_s for a word s over the family index set; always a prenucleus.
Prenucleus finite_composition(const FinFrame& f,
                              const std::vector<Nucleus>& family,
                              const std::vector<int>& word);

// Fixed points of j form a frame; meets are inherited and the join of S is
// j(\/S). The surjection u |-> j(u) is left adjoint to the inclusion.
struct Sublocale {
  FinFrame frame;
  std::vector<int> carrier;     // fixed points, as elements of the base frame
  std::vector<int> surjection;  // base element -> sublocale element index
};
Sublocale sublocale_frame(const Nucleus& j);

// All nuclei, deduplicated, in lexicographic table order. The search walks
// inflationary monotone tables only, then filters; a full n^n scan is not
// attempted.
std::vector<Nucleus> enumerate_nuclei(const FinFrame& f,
                                      long long cap = kDefaultCap);

// Family (closed(j(K)) /\ open(K)) over compact K; its join re-assembles j.
std::vector<Nucleus> johnstone_decompose(const Nucleus& j,
                                         long long cap = kDefaultCap);

// Scott continuity: preservation of directed subset joins. Vacuously strong
// on finite frames, checked literally.
bool preserves_directed_joins(const Nucleus& j, long long cap = kDefaultCap);

}  // namespace finloc
