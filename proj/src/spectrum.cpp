#include "finloc/spectrum.hpp"

#include <algorithm>

namespace finloc {

std::optional<Violation> ideal_violation(const FinDistLattice& l,
                                         const std::vector<int>& s) {
  if (s.empty()) return Violation{"I1Uninhabited", {}};
  for (int y : s)
    for (int x = 0; x < l.n(); ++x)
      if (l.leq(x, y) && !subset_contains(s, x))
        return Violation{"I2NotDownwardClosed", {x, y}};
  for (int x : s)
    for (int y : s)
      if (!subset_contains(s, l.join(x, y)))
        return Violation{"I3NotJoinClosed", {x, y}};
  return std::nullopt;
}

bool is_ideal(const FinDistLattice& l, const std::vector<int>& s) {
  return !ideal_violation(l, s).has_value();
}

Ideal principal_ideal(const FinDistLattice& l, int x) {
  std::vector<int> m;
  for (int y = 0; y < l.n(); ++y)
    if (l.leq(y, x)) m.push_back(y);
  return Ideal{l, m};
}

std::optional<int> principal_generator(const Ideal& i) {
  auto g = greatest_element(i.lattice.poset, i.members);
  if (g && principal_ideal(i.lattice, *g).members == i.members) return g;
  return std::nullopt;
}

std::vector<Ideal> all_ideals(const FinDistLattice& l, long long cap) {
  const int n = l.n();
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(n < 62 ? (1LL << n) : cap + 1, cap);
  std::vector<Ideal> out;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    if (is_ideal(l, s)) out.push_back(Ideal{l, s});
  }
  std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::optional<CoverWitness> covers(const std::vector<int>& list,
                                   const std::vector<Ideal>& family) {
  CoverWitness w;
  for (int x : list) {
    int found = -1;
    for (size_t i = 0; i < family.size(); ++i)
      if (family[i].contains(x)) {
        found = int(i);
        break;
      }
    if (found < 0) return std::nullopt;
    w.steps.push_back({x, found});
  }
  return w;
}

Ideal ideal_join(const FinDistLattice& l, const std::vector<Ideal>& family) {
  std::vector<uint8_t> in(l.n(), 0);
  in[l.bot] = 1;  // join of the empty covered list
  for (const Ideal& i : family)
    for (int x : i.members) in[x] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < l.n(); ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < l.n(); ++y) {
        if (in[y] && !in[l.join(x, y)]) {
          in[l.join(x, y)] = 1;
          changed = true;
        }
        if (l.leq(y, x) && !in[y]) {
          in[y] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<int> m;
  for (int x = 0; x < l.n(); ++x)
    if (in[x]) m.push_back(x);
  return Ideal{l, m};
}

Spectrum spectrum(const FinDistLattice& l, long long cap) {
  Spectrum s;
  s.ideals = all_ideals(l, cap);
  const int m = int(s.ideals.size());
  FinPoset p;
  p.n = m;
  p.rel.assign(size_t(m) * m, 0);
  p.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string lbl = "{";
    for (size_t t = 0; t < s.ideals[i].members.size(); ++t) {
      if (t) lbl += ",";
      lbl += l.label(s.ideals[i].members[t]);
    }
    lbl += "}";
    p.labels[i] = lbl;
    for (int j = 0; j < m; ++j)
      p.rel[size_t(i) * m + j] =
          std::includes(s.ideals[j].members.begin(), s.ideals[j].members.end(),
                        s.ideals[i].members.begin(), s.ideals[i].members.end())
              ? 1
              : 0;
  }
  s.frame = FinFrame{build_lattice(p)};
  return s;
}

CompactOpens compact_opens_lattice(const FinFrame& x, long long cap) {
  CompactOpens out;
  for (int u = 0; u < x.n(); ++u)
    if (is_compact(x, u, cap)) out.elements.push_back(u);
  FinPoset p = subposet(x.lat.poset, out.elements);
  out.lattice = build_lattice(p);
  return out;
}

ObjectRoundTrip duality_roundtrip_object(const FinDistLattice& l, long long cap) {
  ObjectRoundTrip r;
  Spectrum s = spectrum(l, cap);
  CompactOpens k = compact_opens_lattice(s.frame, cap);
  std::vector<int> table(l.n(), -1);
  for (int x = 0; x < l.n(); ++x) {
    Ideal down = principal_ideal(l, x);
    int target = -1;
    for (size_t t = 0; t < k.elements.size(); ++t)
      if (s.ideals[k.elements[t]].members == down.members) {
        target = int(t);
        break;
      }
    if (target < 0) {
      r.failure = Violation{"PrincipalIdealNotCompact", {x}};
      return r;
    }
    table[x] = target;
  }
  LatticeHom h{l, k.lattice, table};
  if (!is_iso(h)) {
    r.failure = Violation{"IsoFailure", {}, "down-map is not a lattice iso"};
    return r;
  }
  r.ok = true;
  r.iso = h;
  return r;
}

FrameRoundTrip duality_roundtrip_frame(const FinFrame& x, long long cap) {
  FrameRoundTrip r;
  CompactOpens k = compact_opens_lattice(x, cap);
  Spectrum s = spectrum(k.lattice, cap);
  const int m = int(s.ideals.size());

  r.phi.assign(x.n(), -1);
  for (int u = 0; u < x.n(); ++u) {
    std::vector<int> members;
    for (int t = 0; t < k.lattice.n(); ++t)
      if (x.leq(k.elements[t], u)) members.push_back(t);
    int target = -1;
    for (int i = 0; i < m; ++i)
      if (s.ideals[i].members == members) {
        target = i;
        break;
      }
    if (target < 0) {
      r.failure = Violation{"IsoFailure", {u}, "phi(U) is not an ideal"};
      return r;
    }
    r.phi[u] = target;
  }

  r.theta.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    std::vector<int> elems;
    for (int t : s.ideals[i].members) elems.push_back(k.elements[t]);
    r.theta[i] = join_subset(x, elems);
  }

  for (int u = 0; u < x.n(); ++u)
    if (r.theta[r.phi[u]] != u) {
      r.failure = Violation{"IsoFailure", {u}, "theta(phi(U)) != U"};
      return r;
    }
  for (int i = 0; i < m; ++i)
    if (r.phi[r.theta[i]] != i) {
      r.failure = Violation{"IsoFailure", {i}, "phi(theta(I)) != I"};
      return r;
    }
  if (!is_frame_hom(x, s.frame, r.phi)) {
    r.failure = Violation{"IsoFailure", {}, "phi is not a frame hom"};
    return r;
  }
  r.ok = true;
  return r;
}

LatticeHom K_on_hom(const FrameHom& f, long long cap) {
  CompactOpens ky = compact_opens_lattice(f.dom, cap);
  CompactOpens kx = compact_opens_lattice(f.cod, cap);
  std::vector<int> table(ky.lattice.n(), -1);
  for (int t = 0; t < ky.lattice.n(); ++t) {
    int image = f.table[ky.elements[t]];
    auto it = std::find(kx.elements.begin(), kx.elements.end(), image);
    if (it == kx.elements.end())
      throw ValidationError({"NotSpectral", {ky.elements[t]}, "image of a compact open is not compact"});
    table[t] = int(it - kx.elements.begin());
  }
  return LatticeHom{ky.lattice, kx.lattice, table};
}

FrameHom Spec_on_hom(const LatticeHom& h, const FinFrame& y, const FinFrame& x,
                     long long cap) {
  CompactOpens ky = compact_opens_lattice(y, cap);
  CompactOpens kx = compact_opens_lattice(x, cap);
  if (!(h.dom == ky.lattice) || !(h.cod == kx.lattice))
    throw ValidationError({"HomLatticeMismatch", {}, "h must map K(Y) to K(X)"});
  std::vector<int> table(y.n(), -1);
  for (int v = 0; v < y.n(); ++v) {
    std::vector<int> pieces;
    for (int t = 0; t < ky.lattice.n(); ++t)
      if (y.leq(ky.elements[t], v)) pieces.push_back(kx.elements[h.table[t]]);
    table[v] = join_subset(x, pieces);
  }
  return FrameHom{y, x, table};
}

}  // namespace finloc
