#include "finloc/frame.hpp"

#include <algorithm>
#include <functional>

namespace finloc {

FinFrame make_frame(FinDistLattice l) { return FinFrame{std::move(l)}; }

FinFrame frame_from_poset(const FinPoset& p) { return FinFrame{build_lattice(p)}; }

int join_subset(const FinFrame& f, const std::vector<int>& s) {
  int acc = f.bot();
  for (int x : s) acc = f.join(acc, x);
  return acc;
}

int meet_subset(const FinFrame& f, const std::vector<int>& s) {
  int acc = f.top();
  for (int x : s) acc = f.meet(acc, x);
  return acc;
}

namespace {

// visit every subset of 0..n-1 as a sorted vector
template <typename Fn>
void for_each_subset(int n, long long cap, Fn&& fn) {
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(n < 62 ? (1LL << n) : cap + 1, cap);
  std::vector<int> s;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    s.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    fn(s);
  }
}

}  // namespace

Report validate_frame(const FinFrame& f, long long cap) {
  Report r = validate_lattice(f.lat);
  if (!r.ok()) return r;
  for_each_subset(f.n(), cap, [&](const std::vector<int>& s) {
    int js = join_subset(f, s);
    for (int x = 0; x < f.n(); ++x) {
      std::vector<int> met;
      met.reserve(s.size());
      for (int y : s) met.push_back(f.meet(x, y));
      if (f.meet(x, js) != join_subset(f, met)) {
        std::vector<int> w = {x};
        w.insert(w.end(), s.begin(), s.end());
        r.add("FrameDistributivity", w);
      }
    }
  });
  return r;
}

bool is_frame_hom(const FinFrame& dom, const FinFrame& cod,
                  const std::vector<int>& table) {
  if (table[dom.top()] != cod.top() || table[dom.bot()] != cod.bot()) return false;
  for (int x = 0; x < dom.n(); ++x)
    for (int y = 0; y < dom.n(); ++y) {
      if (table[dom.meet(x, y)] != cod.meet(table[x], table[y])) return false;
      if (table[dom.join(x, y)] != cod.join(table[x], table[y])) return false;
    }
  return true;
}

bool preserves_subset_joins(const FinFrame& dom, const FinFrame& cod,
                            const std::vector<int>& table, long long cap) {
  bool ok = true;
  for_each_subset(dom.n(), cap, [&](const std::vector<int>& s) {
    if (!ok) return;
    std::vector<int> image;
    image.reserve(s.size());
    for (int x : s) image.push_back(table[x]);
    if (table[join_subset(dom, s)] != join_subset(cod, image)) ok = false;
  });
  return ok;
}

std::vector<int> right_adjoint(const FinFrame& a, const FinFrame& b,
                               const std::vector<int>& table) {
  // join preservation has to hold before the adjoint formula is meaningful;
  // it also subsumes monotonicity
  bool ok = true;
  std::vector<int> bad;
  for_each_subset(a.n(), kDefaultCap, [&](const std::vector<int>& s) {
    if (!ok) return;
    std::vector<int> image;
    for (int x : s) image.push_back(table[x]);
    if (table[join_subset(a, s)] != join_subset(b, image)) {
      ok = false;
      bad = s;
    }
  });
  if (!ok) throw ValidationError({"NotJoinPreserving", bad});
  std::vector<int> g(b.n());
  for (int y = 0; y < b.n(); ++y) {
    std::vector<int> below;
    for (int x = 0; x < a.n(); ++x)
      if (b.leq(table[x], y)) below.push_back(x);
    g[y] = join_subset(a, below);
  }
  return g;
}

int heyting(const FinFrame& f, int u, int v) {
  std::vector<int> ws;
  for (int w = 0; w < f.n(); ++w)
    if (f.leq(f.meet(w, u), v)) ws.push_back(w);
  return join_subset(f, ws);
}

bool way_below(const FinFrame& f, int u, int v, long long cap) {
  bool holds = true;
  for_each_subset(f.n(), cap, [&](const std::vector<int>& s) {
    if (!holds) return;
    if (!is_directed_subset(f.lat.poset, s)) return;
    if (!f.leq(v, join_subset(f, s))) return;
    for (int w : s)
      if (f.leq(u, w)) return;
    holds = false;
  });
  return holds;
}

bool is_compact(const FinFrame& f, int u, long long cap) {
  return way_below(f, u, u, cap);
}

bool well_inside(const FinFrame& f, int u, int v) {
  for (int w = 0; w < f.n(); ++w)
    if (f.meet(u, w) == f.bot() && f.join(v, w) == f.top()) return true;
  return false;
}

std::optional<int> complement(const FinFrame& f, int u) {
  for (int w = 0; w < f.n(); ++w)
    if (f.meet(u, w) == f.bot() && f.join(u, w) == f.top()) return w;
  return std::nullopt;
}

bool is_base(const BaseFamily& b) {
  const FinFrame& f = b.frame;
  for (int u = 0; u < f.n(); ++u) {
    std::vector<int> below;
    for (int m : b.member)
      if (f.leq(m, u)) below.push_back(m);
    if (join_subset(f, below) != u) return false;
  }
  return true;
}

BaseFamily directify_base(const BaseFamily& b, long long cap) {
  BaseFamily out{b.frame, {}};
  std::vector<uint8_t> seen(b.frame.n(), 0);
  for_each_subset(int(b.member.size()), cap, [&](const std::vector<int>& idxs) {
    std::vector<int> elems;
    for (int i : idxs) elems.push_back(b.member[i]);
    int j = join_subset(b.frame, elems);
    if (!seen[j]) {
      seen[j] = 1;
      out.member.push_back(j);
    }
  });
  std::sort(out.member.begin(), out.member.end());
  return out;
}

namespace {

std::vector<int> compact_elements(const FinFrame& f, long long cap) {
  std::vector<int> ks;
  for (int u = 0; u < f.n(); ++u)
    if (is_compact(f, u, cap)) ks.push_back(u);
  return ks;
}

}  // namespace

ClassReport is_spectral(const FinFrame& f, long long cap) {
  ClassReport r;
  r.predicate = "spectral";
  // SP1: the top open is compact
  if (!is_compact(f, f.top(), cap)) {
    r.witness = Violation{"NotCompactTop", {f.top()}};
    return r;
  }
  auto ks = compact_elements(f, cap);
  // SP2: compact opens closed under binary meets
  for (int a : ks)
    for (int b : ks)
      if (!subset_contains(ks, f.meet(a, b))) {
        r.witness = Violation{"CompactsNotMeetClosed", {a, b}};
        return r;
      }
  // SP3: the compact opens form a base
  if (!is_base({f, ks})) {
    r.witness = Violation{"CompactsNotBase", {}};
    return r;
  }
  // SP4: smallness of the type of compact opens is immediate on a finite
  // carrier; recorded by the certificate being a finite list.
  r.value = true;
  r.certificate = ks;
  return r;
}

ClassReport is_zero_dimensional(const FinFrame& f) {
  ClassReport r;
  r.predicate = "zero-dimensional";
  std::vector<int> clopens;
  for (int u = 0; u < f.n(); ++u)
    if (complement(f, u)) clopens.push_back(u);
  if (is_base({f, clopens})) {
    r.value = true;
    r.certificate = clopens;
  } else {
    r.witness = Violation{"ClopensNotBase", {}};
  }
  return r;
}

ClassReport is_regular(const FinFrame& f, long long /*cap*/) {
  ClassReport r;
  r.predicate = "regular";
  // the full family is the candidate base; each u must be the join of the
  // elements well inside it
  std::vector<int> base;
  for (int u = 0; u < f.n(); ++u) base.push_back(u);
  for (int u = 0; u < f.n(); ++u) {
    std::vector<int> wi;
    for (int b : base)
      if (f.leq(b, u) && well_inside(f, b, u)) wi.push_back(b);
    if (join_subset(f, wi) != u) {
      r.witness = Violation{"NoWellInsideCover", {u}};
      return r;
    }
  }
  r.value = true;
  r.certificate = base;
  return r;
}

ClassReport is_stone(const FinFrame& f, long long cap) {
  ClassReport r;
  r.predicate = "stone";
  if (!is_compact(f, f.top(), cap)) {
    r.witness = Violation{"NotCompactTop", {f.top()}};
    return r;
  }
  ClassReport zd = is_zero_dimensional(f);
  if (!zd.value) {
    r.witness = zd.witness;
    return r;
  }
  r.value = true;
  r.certificate = zd.certificate;
  return r;
}

std::vector<FrameHom> frame_homs(const FinFrame& f, const FinFrame& g,
                                 long long cap) {
  std::vector<FrameHom> out;
  std::vector<int> table(f.n(), 0);
  long long visited = 0;  // the cap budgets the monotone-pruned search
  std::function<void(int)> rec = [&](int pos) {
    if (++visited > cap) throw CapExceeded(visited, cap);
    if (pos == f.n()) {
      if (is_frame_hom(f, g, table)) out.push_back({f, g, table});
      return;
    }
    for (int v = 0; v < g.n(); ++v) {
      table[pos] = v;
      bool ok = true;
      if (pos == f.top() && v != g.top()) ok = false;
      if (ok && pos == f.bot() && v != g.bot()) ok = false;
      for (int j = 0; j < pos && ok; ++j) {
        if (f.leq(j, pos) && !g.leq(table[j], v)) ok = false;
        if (ok && f.leq(pos, j) && !g.leq(v, table[j])) ok = false;
      }
      if (ok) rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

bool is_completely_prime_filter(const FinFrame& f, const std::vector<int>& s,
                                long long cap) {
  if (!subset_contains(s, f.top())) return false;
  if (subset_contains(s, f.bot())) return false;
  if (!is_up_closed(f.lat.poset, s)) return false;
  for (int x : s)
    for (int y : s)
      if (!subset_contains(s, f.meet(x, y))) return false;
  bool prime = true;
  for_each_subset(f.n(), cap, [&](const std::vector<int>& t) {
    if (!prime) return;
    if (!subset_contains(s, join_subset(f, t))) return;
    for (int x : t)
      if (subset_contains(s, x)) return;
    prime = false;
  });
  return prime;
}

std::vector<Point> points(const FinFrame& f, long long cap) {
  FinFrame two = two_chain_frame();
  std::vector<Point> out;
  for (auto& h : frame_homs(f, two, cap)) {
    std::vector<int> filter;
    for (int x = 0; x < f.n(); ++x)
      if (h.table[x] == two.top()) filter.push_back(x);
    out.push_back({f, filter});
  }
  return out;
}

FinFrame two_chain_frame() {
  FinPoset p;
  p.n = 2;
  p.rel = {1, 1, 0, 1};
  p.labels = {"0", "1"};
  return frame_from_poset(p);
}

}  // namespace finloc
