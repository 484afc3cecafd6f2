#pragma once

#include <string>
#include <vector>

#include "finloc/nucleus.hpp"
#include "finloc/spectrum.hpp"

namespace finloc {

// The patch of a finite frame: the frame of all nuclei under the pointwise
// order. On a finite frame every nucleus preserves directed joins, so this
// coincides with the frame of Scott-continuous nuclei; the coincidence is
// checked at construction time, element by element.
struct PatchFrame {
  FinFrame base;
  FinFrame frame;               // element i carries nuclei[i]
  std::vector<Nucleus> nuclei;

  int index_of(const std::vector<int>& table) const;
};

PatchFrame patch(const FinFrame& x, long long cap = kDefaultCap);

// gamma(K1,K2) = closed(K1) /\ open(K2) over pairs of compact opens.
// Every member is complemented in the patch frame.
struct PatchBase {
  BaseFamily family;
  std::vector<std::pair<int, int>> index;  // (K1, K2) per member
};
PatchBase patch_base(const PatchFrame& pf, long long cap = kDefaultCap);

// eps^*: O(X) -> O(Patch X), U |-> closed nucleus on U, with right adjoint
// eps_*: j |-> j(bot).
struct EpsilonMaps {
  FrameHom direct;
  std::vector<int> adjoint;
};
EpsilonMaps epsilon(const PatchFrame& pf);

// For f^*: O(A) -> O(X) with X Stone, the induced hom O(Patch A) -> O(X):
//   j |-> \/_K f^*(j(K)) /\ not(f^*(K))   over compact K of A.
// Throws NotStone / NotFrameHom; a missing complement is a hard error since
// the formula is only invoked under the Stone hypothesis.
FrameHom universal_map(const FrameHom& f, const PatchFrame& pa,
                       long long cap = kDefaultCap);

struct PatchUPCase {
  FrameHom given;       // f^*: O(A) -> O(X)
  FrameHom induced;     // the computed universal map
  bool commutes = false;
  int commuting_homs = 0;  // among all enumerated homs O(Patch A) -> O(X)
};

struct PatchUPCertificate {
  bool ok = false;
  bool uniqueness_checked = true;
  std::vector<PatchUPCase> cases;
};

// Existence and uniqueness of the universal map for every frame hom
// O(A) -> O(X), by exhaustive hom enumeration. Above the cap, existence is
// still verified and uniqueness reported as skipped.
PatchUPCertificate verify_patch_up(const FinFrame& a, const FinFrame& x,
                                   long long cap = kDefaultCap);

// Canonical c_U / o_U / c_U&o_V name for a patch element.
std::string patch_element_label(const PatchFrame& pf, int i);

}  // namespace finloc
