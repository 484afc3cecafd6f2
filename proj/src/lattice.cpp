#include "finloc/lattice.hpp"

#include <algorithm>
#include <functional>

namespace finloc {

FinDistLattice build_lattice(const FinPoset& p) {
  const int n = p.n;
  FinDistLattice l;
  l.poset = p;
  l.meet_table.assign(size_t(n) * n, -1);
  l.join_table.assign(size_t(n) * n, -1);

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto m = greatest_lower_bound(p, {i, j});
      if (!m) throw ValidationError({"NoMeet", {i, j}});
      auto v = least_upper_bound(p, {i, j});
      if (!v) throw ValidationError({"NoJoin", {i, j}});
      l.meet_table[size_t(i) * n + j] = *m;
      l.join_table[size_t(i) * n + j] = *v;
    }

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto top = greatest_element(p, all);
  if (!top) throw ValidationError({"NoTop", {}});
  auto bot = least_element(p, all);
  if (!bot) throw ValidationError({"NoBot", {}});
  l.top = *top;
  l.bot = *bot;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          throw ValidationError({"NotDistributive", {x, y, z}});
  return l;
}

Report validate_lattice(const FinDistLattice& l) {
  Report r;
  const int n = l.n();
  if (n == 0) {
    r.add("EmptyCarrier", {});
    return r;
  }
  auto chk = [&](bool cond, const char* law, std::vector<int> w) {
    if (!cond) r.add(law, std::move(w));
  };
  for (int x = 0; x < n; ++x) {
    chk(l.meet(x, l.top) == x, "MeetUnit", {x});
    chk(l.join(x, l.bot) == x, "JoinUnit", {x});
    chk(l.meet(x, x) == x, "MeetIdempotent", {x});
    chk(l.join(x, x) == x, "JoinIdempotent", {x});
    for (int y = 0; y < n; ++y) {
      chk(l.meet(x, y) == l.meet(y, x), "MeetCommutative", {x, y});
      chk(l.join(x, y) == l.join(y, x), "JoinCommutative", {x, y});
      chk(l.meet(x, l.join(x, y)) == x, "Absorption", {x, y});
      chk(l.join(x, l.meet(x, y)) == x, "DualAbsorption", {x, y});
      // order agreement: leq(x,y) <=> x/\y = x <=> x\/y = y
      chk((l.leq(x, y)) == (l.meet(x, y) == x), "OrderMeetAgreement", {x, y});
      chk((l.leq(x, y)) == (l.join(x, y) == y), "OrderJoinAgreement", {x, y});
      for (int z = 0; z < n; ++z) {
        chk(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)),
            "MeetAssociative", {x, y, z});
        chk(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)),
            "JoinAssociative", {x, y, z});
        chk(l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z)),
            "Distributivity", {x, y, z});
        // derived in every distributive lattice; checked explicitly
        chk(l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z)),
            "DualDistributivity", {x, y, z});
      }
    }
  }
  return r;
}

bool is_lattice_hom(const FinDistLattice& dom, const FinDistLattice& cod,
                    const std::vector<int>& table) {
  if (table[dom.top] != cod.top || table[dom.bot] != cod.bot) return false;
  for (int x = 0; x < dom.n(); ++x)
    for (int y = 0; y < dom.n(); ++y) {
      if (table[dom.meet(x, y)] != cod.meet(table[x], table[y])) return false;
      if (table[dom.join(x, y)] != cod.join(table[x], table[y])) return false;
    }
  return true;
}

bool is_iso(const LatticeHom& h) {
  const int n = h.dom.n();
  if (h.cod.n() != n) return false;
  std::vector<int> inverse(n, -1);
  for (int i = 0; i < n; ++i) {
    if (inverse[h.table[i]] != -1) return false;
    inverse[h.table[i]] = i;
  }
  if (!is_monotone(h.dom.poset, h.cod.poset, h.table)) return false;
  if (!is_monotone(h.cod.poset, h.dom.poset, inverse)) return false;
  // a monotone bijection with monotone inverse is automatically a hom
  return is_lattice_hom(h.dom, h.cod, h.table);
}

std::vector<LatticeHom> enumerate_lattice_homs(const FinDistLattice& k,
                                               const FinDistLattice& l,
                                               long long cap) {
  std::vector<LatticeHom> out;
  std::vector<int> table(k.n(), 0);
  long long visited = 0;  // the cap budgets the monotone-pruned search
  std::function<void(int)> rec = [&](int pos) {
    if (++visited > cap) throw CapExceeded(visited, cap);
    if (pos == k.n()) {
      if (is_lattice_hom(k, l, table)) out.push_back({k, l, table});
      return;
    }
    for (int v = 0; v < l.n(); ++v) {
      table[pos] = v;
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (k.leq(j, pos) && !l.leq(table[j], v)) ok = false;
        if (ok && k.leq(pos, j) && !l.leq(v, table[j])) ok = false;
      }
      if (ok) rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<LatticeHom> find_isos(const FinDistLattice& k,
                                  const FinDistLattice& l, long long cap) {
  std::vector<LatticeHom> out;
  if (k.n() != l.n()) return out;
  for (auto& h : enumerate_lattice_homs(k, l, cap))
    if (is_iso(h)) out.push_back(h);
  return out;
}

bool isomorphic(const FinDistLattice& k, const FinDistLattice& l, long long cap) {
  return !find_isos(k, l, cap).empty();
}

DownsetLattice downset_lattice(const FinPoset& p, long long cap) {
  const int n = p.n;
  if (n >= 20 || (1LL << n) > cap) throw CapExceeded(n < 63 ? (1LL << n) : cap + 1, cap);
  std::vector<std::vector<int>> downsets;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    if (is_down_closed(p, s)) downsets.push_back(s);
  }
  std::sort(downsets.begin(), downsets.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  const int m = int(downsets.size());
  FinPoset q;
  q.n = m;
  q.rel.assign(size_t(m) * m, 0);
  q.labels.resize(m);
  for (int i = 0; i < m; ++i) {
    std::string lbl = "{";
    for (size_t t = 0; t < downsets[i].size(); ++t) {
      if (t) lbl += ",";
      lbl += p.label(downsets[i][t]);
    }
    lbl += "}";
    q.labels[i] = lbl;
    for (int j = 0; j < m; ++j)
      q.rel[size_t(i) * m + j] = std::includes(downsets[j].begin(), downsets[j].end(),
                                               downsets[i].begin(), downsets[i].end())
                                     ? 1
                                     : 0;
  }
  DownsetLattice out;
  out.lattice = build_lattice(q);
  out.members = std::move(downsets);
  return out;
}

JoinIrreducibles join_irreducibles(const FinDistLattice& l) {
  auto cover = hasse_cover(l.poset);
  const int n = l.n();
  std::vector<int> elems;
  for (int x = 0; x < n; ++x) {
    if (x == l.bot) continue;
    int lower_covers = 0;
    for (int y = 0; y < n; ++y)
      if (cover[size_t(y) * n + x]) ++lower_covers;
    if (lower_covers == 1) elems.push_back(x);
  }
  JoinIrreducibles out;
  out.elements = elems;
  out.poset = subposet(l.poset, elems);
  return out;
}

}  // namespace finloc
