#include "finloc/nucleus.hpp"

#include <algorithm>
#include <functional>

namespace finloc {

Report check_prenucleus(const FinFrame& f, const std::vector<int>& table) {
  Report r;
  if (int(table.size()) != f.n()) {
    r.add("BadTableSize", {int(table.size())});
    return r;
  }
  for (int u = 0; u < f.n(); ++u)
    if (!f.leq(u, table[u])) r.add("NotInflationary", {u});
  for (int u = 0; u < f.n(); ++u)
    for (int v = 0; v < f.n(); ++v)
      if (table[f.meet(u, v)] != f.meet(table[u], table[v]))
        r.add("NotMeetPreserving", {u, v});
  return r;
}

Report check_nucleus(const FinFrame& f, const std::vector<int>& table) {
  Report r = check_prenucleus(f, table);
  if (int(table.size()) != f.n()) return r;
  for (int u = 0; u < f.n(); ++u)
    if (table[table[u]] != table[u]) r.add("NotIdempotent", {u});
  return r;
}

Nucleus validate_nucleus(const FinFrame& f, std::vector<int> table) {
  Report r = check_nucleus(f, table);
  if (!r.ok()) throw ValidationError(r.violations.front());
  return Nucleus{f, std::move(table)};
}

Prenucleus validate_prenucleus(const FinFrame& f, std::vector<int> table) {
  Report r = check_prenucleus(f, table);
  if (!r.ok()) throw ValidationError(r.violations.front());
  return Prenucleus{f, std::move(table)};
}

Nucleus identity_nucleus(const FinFrame& f) {
  std::vector<int> t(f.n());
  for (int u = 0; u < f.n(); ++u) t[u] = u;
  return Nucleus{f, std::move(t)};
}

Nucleus top_nucleus(const FinFrame& f) {
  return Nucleus{f, std::vector<int>(f.n(), f.top())};
}

Nucleus closed_nucleus(const FinFrame& f, int u) {
  std::vector<int> t(f.n());
  for (int v = 0; v < f.n(); ++v) t[v] = f.join(u, v);
  return Nucleus{f, std::move(t)};
}

Nucleus open_nucleus(const FinFrame& f, int u) {
  std::vector<int> t(f.n());
  for (int v = 0; v < f.n(); ++v) t[v] = heyting(f, u, v);
  return Nucleus{f, std::move(t)};
}

bool nucleus_leq(const Nucleus& j, const Nucleus& k) {
  for (int u = 0; u < j.frame.n(); ++u)
    if (!j.frame.leq(j.table[u], k.table[u])) return false;
  return true;
}

Nucleus nucleus_meet(const Nucleus& j, const Nucleus& k) {
  std::vector<int> t(j.frame.n());
  for (int u = 0; u < j.frame.n(); ++u)
    t[u] = j.frame.meet(j.table[u], k.table[u]);
  return Nucleus{j.frame, std::move(t)};
}

Nucleus nucleus_join(const FinFrame& f, const std::vector<Nucleus>& family) {
  // Iterate v |-> \/_i k_i(v) starting from each argument. Each iterate is
  // below some finite composition and dominates the previous one, so on a
  // finite frame the limit is the join over all finite compositions.
  std::vector<int> t(f.n());
  for (int u = 0; u < f.n(); ++u) {
    int v = u;
    for (;;) {
      int next = v;
      for (const Nucleus& k : family) next = f.join(next, k.table[v]);
      if (next == v) break;
      v = next;
    }
    t[u] = v;
  }
  return Nucleus{f, std::move(t)};
}

Prenucleus finite_composition(const FinFrame& f,
                              const std::vector<Nucleus>& family,
                              const std::vector<int>& word) {
  std::vector<int> t(f.n());
  for (int u = 0; u < f.n(); ++u) {
    int v = u;
    for (int i : word) v = family[i].table[v];
    t[u] = v;
  }
  return Prenucleus{f, std::move(t)};
}

Sublocale sublocale_frame(const Nucleus& j) {
  const FinFrame& f = j.frame;
  Sublocale out;
  for (int u = 0; u < f.n(); ++u)
    if (j.table[u] == u) out.carrier.push_back(u);
  out.frame = FinFrame{build_lattice(subposet(f.lat.poset, out.carrier))};
  out.surjection.assign(f.n(), -1);
  for (int u = 0; u < f.n(); ++u) {
    int fixed = j.table[u];
    auto it = std::find(out.carrier.begin(), out.carrier.end(), fixed);
    out.surjection[u] = int(it - out.carrier.begin());
  }
  return out;
}

std::vector<Nucleus> enumerate_nuclei(const FinFrame& f, long long cap) {
  const int n = f.n();
  std::vector<Nucleus> out;
  std::vector<int> table(n, 0);
  long long visited = 0;
  // DFS over inflationary tables, pruning monotonicity against earlier
  // positions; meet preservation and idempotency are checked at the leaves.
  // The cap budgets the pruned search, not the raw n^n table space, since
  // the acceptance corpus needs frames whose n^n is astronomically larger
  // than the number of inflationary monotone candidates.
  std::function<void(int)> rec = [&](int pos) {
    if (++visited > cap) throw CapExceeded(visited, cap);
    if (pos == n) {
      if (check_nucleus(f, table).ok()) out.push_back({f, table});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (!f.leq(pos, v)) continue;
      table[pos] = v;
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (f.leq(j, pos) && !f.leq(table[j], v)) ok = false;
        if (ok && f.leq(pos, j) && !f.leq(v, table[j])) ok = false;
      }
      if (ok) rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](const Nucleus& a, const Nucleus& b) { return a.table < b.table; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Nucleus> johnstone_decompose(const Nucleus& j, long long cap) {
  const FinFrame& f = j.frame;
  std::vector<Nucleus> factors;
  for (int k = 0; k < f.n(); ++k) {
    if (!is_compact(f, k, cap)) continue;
    factors.push_back(nucleus_meet(closed_nucleus(f, j.table[k]), open_nucleus(f, k)));
  }
  return factors;
}

bool preserves_directed_joins(const Nucleus& j, long long cap) {
  const FinFrame& f = j.frame;
  const int n = f.n();
  if (n >= 62 || (1LL << n) > cap) throw CapExceeded(1LL << std::min(n, 62), cap);
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) s.push_back(i);
    if (!is_directed_subset(f.lat.poset, s)) continue;
    std::vector<int> image;
    for (int x : s) image.push_back(j.table[x]);
    if (j.table[join_subset(f, s)] != join_subset(f, image)) return false;
  }
  return true;
}

}  // namespace finloc
