#pragma once

#include <vector>

#include "finloc/patch.hpp"

namespace finloc {

// A finite pointed bounded-complete poset. Finiteness makes every element
// compact and the decidability condition on boundedness structural.
struct ScottDomain {
  FinPoset poset;
  int bot = -1;
};

// Throws NotPointed / NotBoundedComplete (with the offending subset).
ScottDomain validate_scott_domain(const FinPoset& p, int bot);

bool bounded_above(const ScottDomain& d, int x, int y);

std::vector<int> upset(const ScottDomain& d, int c);

// SO1 and SO2, checked independently (on finite posets SO1 implies SO2).
bool upward_closed(const ScottDomain& d, const std::vector<int>& s);
bool inaccessible_by_directed_joins(const ScottDomain& d,
                                    const std::vector<int>& s,
                                    long long cap = kDefaultCap);

// Frame of Scott opens: up-closed subsets under intersection/union, ordered
// by (cardinality, lex member list). Element i carries opens[i].
struct ScottFrame {
  ScottDomain domain;
  FinFrame frame;
  std::vector<std::vector<int>> opens;

  int open_index(const std::vector<int>& members) const;
};
ScottFrame scott_frame(const ScottDomain& d, long long cap = kDefaultCap);

// Finite unions of principal up-sets, deduplicated to distinct opens.
BaseFamily scott_base(const ScottFrame& sf, long long cap = kDefaultCap);

// Spectrality of the Scott locale, certified by the principal-filter base.
// The base's meet closure is established through the boundedness case split:
// up(x) /\ up(y) is up(x \/ y) when x,y are bounded and empty otherwise.
ClassReport is_spectral_scott(const ScottDomain& d, long long cap = kDefaultCap);

// The three-element frame with its distinguished middle element.
struct Sierpinski {
  FinFrame frame;
  int truth = 1;
};
Sierpinski sierpinski();

// For every open U of X there is exactly one frame hom from the Sierpinski
// frame sending truth to U.
struct SierpinskiUPCertificate {
  bool ok = false;
  std::vector<int> hom_count;            // per open U
  std::vector<std::vector<int>> unique;  // the unique hom table per U
};
SierpinskiUPCertificate verify_sierpinski_up(const FinFrame& x,
                                             long long cap = kDefaultCap);

// On a finite domain every element is sharp; the topological
// characterization (decidable membership in compact opens agrees with the
// order against compact elements) is re-checked per element.
std::vector<int> sharp_elements(const ScottFrame& sf, long long cap = kDefaultCap);

// Certifies the three bijections: D ~ pt(Sigma D) via x |-> {U : x in U}
// with inverse F |-> \/{c : up(c) in F}; every point of Sigma D is spectral;
// and Sharp(D) ~ pt(Patch Sigma D) through the universal lift along eps.
struct PointsEquivalenceCertificate {
  bool ok = false;
  int domain_size = 0;
  int point_count = 0;
  int spectral_point_count = 0;
  int patch_point_count = 0;
  int sharp_count = 0;
  std::vector<Violation> failures;
};
PointsEquivalenceCertificate points_equivalences(const ScottDomain& d,
                                                 long long cap = kDefaultCap);

}  // namespace finloc
