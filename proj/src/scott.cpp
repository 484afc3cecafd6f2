#include "finloc/scott.hpp"

#include <algorithm>

namespace finloc {

ScottDomain validate_scott_domain(const FinPoset& p, int bot) {
  if (bot < 0 || bot >= p.n)
    throw ValidationError({"NotPointed", {bot}, "bottom index out of range"});
  for (int x = 0; x < p.n; ++x)
    if (!p.leq(bot, x)) throw ValidationError({"NotPointed", {x}});
  const int n = p.n;
  if (n >= 20) throw CapExceeded(1LL << n, 1LL << 20);
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    if (upper_bounds(p, s).empty()) continue;
    if (!least_upper_bound(p, s))
      throw ValidationError({"NotBoundedComplete", s});
  }
  return ScottDomain{p, bot};
}

bool bounded_above(const ScottDomain& d, int x, int y) {
  return !upper_bounds(d.poset, {x, y}).empty();
}

std::vector<int> upset(const ScottDomain& d, int c) {
  std::vector<int> out;
  for (int x = 0; x < d.poset.n; ++x)
    if (d.poset.leq(c, x)) out.push_back(x);
  return out;
}

bool upward_closed(const ScottDomain& d, const std::vector<int>& s) {
  return is_up_closed(d.poset, s);
}

bool inaccessible_by_directed_joins(const ScottDomain& d,
                                    const std::vector<int>& s, long long cap) {
  const int n = d.poset.n;
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(1LL << std::min(n, 62), cap);
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<int> t;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) t.push_back(i);
    if (!is_directed_subset(d.poset, t)) continue;
    auto lub = least_upper_bound(d.poset, t);
    if (!lub || !subset_contains(s, *lub)) continue;
    bool hit = false;
    for (int x : t)
      if (subset_contains(s, x)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

int ScottFrame::open_index(const std::vector<int>& members) const {
  for (size_t i = 0; i < opens.size(); ++i)
    if (opens[i] == members) return int(i);
  return -1;
}

ScottFrame scott_frame(const ScottDomain& d, long long cap) {
  const int n = d.poset.n;
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(n < 62 ? (1LL << n) : cap + 1, cap);
  ScottFrame sf;
  sf.domain = d;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    if (is_up_closed(d.poset, s)) sf.opens.push_back(s);
  }
  std::sort(sf.opens.begin(), sf.opens.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  const int m = int(sf.opens.size());
  FinPoset p;
  p.n = m;
  p.rel.assign(size_t(m) * m, 0);
  p.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string lbl = "{";
    for (size_t t = 0; t < sf.opens[i].size(); ++t) {
      if (t) lbl += ",";
      lbl += d.poset.label(sf.opens[i][t]);
    }
    lbl += "}";
    p.labels[i] = lbl;
    for (int j = 0; j < m; ++j)
      p.rel[size_t(i) * m + j] =
          std::includes(sf.opens[j].begin(), sf.opens[j].end(),
                        sf.opens[i].begin(), sf.opens[i].end())
              ? 1
              : 0;
  }
  sf.frame = FinFrame{build_lattice(p)};
  return sf;
}

BaseFamily scott_base(const ScottFrame& sf, long long cap) {
  const ScottDomain& d = sf.domain;
  const int n = d.poset.n;
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(n < 62 ? (1LL << n) : cap + 1, cap);
  BaseFamily out{sf.frame, {}};
  std::vector<uint8_t> seen(sf.frame.n(), 0);
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> members;
    for (int c = 0; c < n; ++c)
      if (mask & (1LL << c)) {
        auto up = upset(d, c);
        members.insert(members.end(), up.begin(), up.end());
      }
    members = canonical_subset(std::move(members));
    int idx = sf.open_index(members);
    if (idx < 0) throw ValidationError({"UpsetUnionNotOpen", {}});
    if (!seen[idx]) {
      seen[idx] = 1;
      out.member.push_back(idx);
    }
  }
  std::sort(out.member.begin(), out.member.end());
  return out;
}

ClassReport is_spectral_scott(const ScottDomain& d, long long cap) {
  ScottFrame sf = scott_frame(d, cap);
  ClassReport r;
  r.predicate = "spectral(scott)";

  BaseFamily base = scott_base(sf, cap);
  if (!is_base(base)) {
    r.witness = Violation{"ScottBaseNotBase", {}};
    return r;
  }
  for (int b : base.member)
    if (!is_compact(sf.frame, b, cap)) {
      r.witness = Violation{"BasicOpenNotCompact", {b}};
      return r;
    }
  if (!subset_contains(base.member, sf.frame.top())) {
    r.witness = Violation{"TopNotBasic", {}};
    return r;
  }
  // binary meet closure, via the boundedness case split on principal filters
  for (int x = 0; x < d.poset.n; ++x)
    for (int y = 0; y < d.poset.n; ++y) {
      std::vector<int> inter;
      auto ux = upset(d, x), uy = upset(d, y);
      std::set_intersection(ux.begin(), ux.end(), uy.begin(), uy.end(),
                            std::back_inserter(inter));
      if (bounded_above(d, x, y)) {
        auto lub = least_upper_bound(d.poset, {x, y});
        if (!lub || upset(d, *lub) != inter) {
          r.witness = Violation{"FilterMeetMismatch", {x, y}};
          return r;
        }
      } else if (!inter.empty()) {
        r.witness = Violation{"UnboundedFiltersIntersect", {x, y}};
        return r;
      }
    }
  for (int a : base.member)
    for (int b : base.member) {
      int m = sf.frame.meet(a, b);
      if (!subset_contains(base.member, m)) {
        r.witness = Violation{"BaseNotMeetClosed", {a, b}};
        return r;
      }
    }
  ClassReport sp = is_spectral(sf.frame, cap);
  if (!sp.value) {
    r.witness = sp.witness;
    return r;
  }
  r.value = true;
  r.certificate = base.member;
  return r;
}

Sierpinski sierpinski() {
  FinPoset p;
  p.n = 3;
  p.rel = {1, 1, 1, 0, 1, 1, 0, 0, 1};
  p.labels = {"0", "true", "1"};
  return Sierpinski{FinFrame{build_lattice(p)}, 1};
}

SierpinskiUPCertificate verify_sierpinski_up(const FinFrame& x, long long cap) {
  Sierpinski s = sierpinski();
  SierpinskiUPCertificate cert;
  auto homs = frame_homs(s.frame, x, cap);
  cert.hom_count.assign(x.n(), 0);
  cert.unique.assign(x.n(), {});
  cert.ok = true;
  for (int u = 0; u < x.n(); ++u) {
    for (const FrameHom& h : homs)
      if (h.table[s.truth] == u) {
        ++cert.hom_count[u];
        cert.unique[u] = h.table;
      }
    if (cert.hom_count[u] != 1) cert.ok = false;
  }
  return cert;
}

std::vector<int> sharp_elements(const ScottFrame& sf, long long cap) {
  const ScottDomain& d = sf.domain;
  std::vector<int> out;
  for (int x = 0; x < d.poset.n; ++x) {
    bool sharp = true;
    // topological characterization: membership in a compact open agrees with
    // the order relation against the compact elements generating it
    for (int k = 0; k < sf.frame.n(); ++k) {
      if (!is_compact(sf.frame, k, cap)) continue;
      bool member = subset_contains(sf.opens[k], x);
      bool generated = false;
      for (int c : sf.opens[k])
        if (d.poset.leq(c, x)) {
          generated = true;
          break;
        }
      if (member != generated) sharp = false;
    }
    if (sharp) out.push_back(x);
  }
  return out;
}

PointsEquivalenceCertificate points_equivalences(const ScottDomain& d,
                                                 long long cap) {
  PointsEquivalenceCertificate cert;
  ScottFrame sf = scott_frame(d, cap);
  FinFrame two = two_chain_frame();
  cert.domain_size = d.poset.n;

  auto pts = points(sf.frame, cap);
  cert.point_count = int(pts.size());

  // nu: F |-> \/ { c : up(c) in F }; a finite directed family attains its join
  auto nu = [&](const std::vector<int>& filter) -> int {
    std::vector<int> cs;
    for (int c = 0; c < d.poset.n; ++c) {
      int idx = sf.open_index(upset(d, c));
      if (idx >= 0 && subset_contains(filter, idx)) cs.push_back(c);
    }
    auto lub = least_upper_bound(d.poset, cs);
    return lub ? *lub : -1;
  };
  // x |-> its neighbourhood filter
  auto pt_of = [&](int x) {
    std::vector<int> filter;
    for (int u = 0; u < sf.frame.n(); ++u)
      if (subset_contains(sf.opens[u], x)) filter.push_back(u);
    return filter;
  };

  for (int x = 0; x < d.poset.n; ++x) {
    auto filter = pt_of(x);
    bool found = false;
    for (auto& p : pts)
      if (p.filter == filter) found = true;
    if (!found) cert.failures.push_back({"PointMissing", {x}});
    if (nu(filter) != x) cert.failures.push_back({"NuPtNotIdentity", {x}});
  }
  for (auto& p : pts) {
    int x = nu(p.filter);
    if (x < 0 || pt_of(x) != p.filter)
      cert.failures.push_back({"PtNuNotIdentity", {x}});
  }
  if (cert.point_count != cert.domain_size)
    cert.failures.push_back({"BijectionFailure", {cert.domain_size, cert.point_count}});

  // every point of a finite Scott locale is spectral: its hom sends compact
  // opens to compact opens of the two-element frame
  cert.spectral_point_count = 0;
  for (auto& p : pts) {
    bool spectral = true;
    for (int k = 0; k < sf.frame.n(); ++k) {
      if (!is_compact(sf.frame, k, cap)) continue;
      int image = subset_contains(p.filter, k) ? two.top() : two.bot();
      if (!is_compact(two, image, cap)) spectral = false;
    }
    if (spectral) ++cert.spectral_point_count;
  }
  if (cert.spectral_point_count != cert.point_count)
    cert.failures.push_back({"NonSpectralPoint", {}});

  // Sharp(D) ~ pt(Patch Sigma D), factored through the universal lift
  auto sharps = sharp_elements(sf, cap);
  cert.sharp_count = int(sharps.size());
  PatchFrame pp = patch(sf.frame, cap);
  EpsilonMaps eps = epsilon(pp);
  auto patch_pts = points(pp.frame, cap);
  cert.patch_point_count = int(patch_pts.size());

  std::vector<std::vector<int>> lifted;
  for (int x : sharps) {
    auto filter = pt_of(x);
    std::vector<int> table(sf.frame.n());
    for (int u = 0; u < sf.frame.n(); ++u)
      table[u] = subset_contains(filter, u) ? two.top() : two.bot();
    FrameHom p{sf.frame, two, table};
    FrameHom barp = universal_map(p, pp, cap);
    // commutation with eps recovers the original point
    for (int u = 0; u < sf.frame.n(); ++u)
      if (barp.table[eps.direct.table[u]] != table[u]) {
        cert.failures.push_back({"LiftDoesNotCommute", {x, u}});
        break;
      }
    std::vector<int> pfilter;
    for (int j = 0; j < pp.frame.n(); ++j)
      if (barp.table[j] == two.top()) pfilter.push_back(j);
    lifted.push_back(pfilter);
  }
  // the lift is a bijection onto the points of the patch
  for (auto& f : lifted) {
    bool found = false;
    for (auto& q : patch_pts)
      if (q.filter == f) found = true;
    if (!found) cert.failures.push_back({"LiftNotAPatchPoint", {}});
  }
  std::sort(lifted.begin(), lifted.end());
  if (int(lifted.size()) != cert.patch_point_count ||
      std::adjacent_find(lifted.begin(), lifted.end()) != lifted.end())
    cert.failures.push_back({"BijectionFailure", {cert.sharp_count, cert.patch_point_count}});

  cert.ok = cert.failures.empty();
  return cert;
}

}  // namespace finloc
