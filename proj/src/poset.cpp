#include "finloc/poset.hpp"

#include <algorithm>
#include <functional>

namespace finloc {

FinPoset validate_poset(int n, std::vector<uint8_t> rel,
                        std::vector<std::string> labels) {
  if (n < 1) throw ValidationError({"EmptyCarrier", {}, "n must be >= 1"});
  if (int(rel.size()) != n * n)
    throw ValidationError({"BadRelationSize", {n}, "relation must be n*n"});
  auto at = [&](int i, int j) { return rel[size_t(i) * n + j] != 0; };
  for (int i = 0; i < n; ++i)
    if (!at(i, i)) throw ValidationError({"NotReflexive", {i}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && at(i, j) && at(j, i))
        throw ValidationError({"NotAntisymmetric", {i, j}});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!at(i, j)) continue;
      for (int k = 0; k < n; ++k)
        if (at(j, k) && !at(i, k))
          throw ValidationError({"NotTransitive", {i, j, k}});
    }
  FinPoset p;
  p.n = n;
  p.rel = std::move(rel);
  p.labels = std::move(labels);
  return p;
}

std::vector<uint8_t> reflexive_transitive_closure(int n, std::vector<uint8_t> rel) {
  for (int i = 0; i < n; ++i) rel[size_t(i) * n + i] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!rel[size_t(i) * n + k]) continue;
      for (int j = 0; j < n; ++j)
        if (rel[size_t(k) * n + j]) rel[size_t(i) * n + j] = 1;
    }
  return rel;
}

std::vector<uint8_t> hasse_cover(const FinPoset& p) {
  const int n = p.n;
  std::vector<uint8_t> cover(size_t(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !p.leq(i, j)) continue;
      bool direct = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && p.leq(i, k) && p.leq(k, j)) {
          direct = false;
          break;
        }
      if (direct) cover[size_t(i) * n + j] = 1;
    }
  return cover;
}

bool is_monotone(const FinPoset& dom, const FinPoset& cod,
                 const std::vector<int>& table) {
  for (int i = 0; i < dom.n; ++i)
    for (int j = 0; j < dom.n; ++j)
      if (dom.leq(i, j) && !cod.leq(table[i], table[j])) return false;
  return true;
}

std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& p,
                                                 const FinPoset& q,
                                                 long long cap) {
  long long total = 1;
  for (int i = 0; i < p.n; ++i) {
    total *= q.n;
    if (total > cap) throw CapExceeded(total, cap);
  }
  std::vector<MonotoneMap> out;
  std::vector<int> table(p.n, 0);
  // lexicographic scan over tables, pruning against earlier positions
  std::function<void(int)> rec = [&](int pos) {
    if (pos == p.n) {
      out.push_back({p, q, table});
      return;
    }
    for (int v = 0; v < q.n; ++v) {
      table[pos] = v;
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (p.leq(j, pos) && !q.leq(table[j], v)) ok = false;
        if (ok && p.leq(pos, j) && !q.leq(v, table[j])) ok = false;
      }
      if (ok) rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<int> canonical_subset(std::vector<int> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool subset_contains(const std::vector<int>& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

std::vector<int> upper_bounds(const FinPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int u = 0; u < p.n; ++u) {
    bool all = true;
    for (int x : s)
      if (!p.leq(x, u)) {
        all = false;
        break;
      }
    if (all) out.push_back(u);
  }
  return out;
}

std::vector<int> lower_bounds(const FinPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int u = 0; u < p.n; ++u) {
    bool all = true;
    for (int x : s)
      if (!p.leq(u, x)) {
        all = false;
        break;
      }
    if (all) out.push_back(u);
  }
  return out;
}

std::optional<int> least_element(const FinPoset& p, const std::vector<int>& s) {
  for (int x : s) {
    bool least = true;
    for (int y : s)
      if (!p.leq(x, y)) {
        least = false;
        break;
      }
    if (least) return x;
  }
  return std::nullopt;
}

std::optional<int> greatest_element(const FinPoset& p, const std::vector<int>& s) {
  for (int x : s) {
    bool greatest = true;
    for (int y : s)
      if (!p.leq(y, x)) {
        greatest = false;
        break;
      }
    if (greatest) return x;
  }
  return std::nullopt;
}

std::optional<int> least_upper_bound(const FinPoset& p, const std::vector<int>& s) {
  return least_element(p, upper_bounds(p, s));
}

std::optional<int> greatest_lower_bound(const FinPoset& p, const std::vector<int>& s) {
  return greatest_element(p, lower_bounds(p, s));
}

std::vector<int> up_closure(const FinPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int u = 0; u < p.n; ++u)
    for (int x : s)
      if (p.leq(x, u)) {
        out.push_back(u);
        break;
      }
  return out;
}

std::vector<int> down_closure(const FinPoset& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (int u = 0; u < p.n; ++u)
    for (int x : s)
      if (p.leq(u, x)) {
        out.push_back(u);
        break;
      }
  return out;
}

bool is_up_closed(const FinPoset& p, const std::vector<int>& s) {
  for (int x : s)
    for (int u = 0; u < p.n; ++u)
      if (p.leq(x, u) && !subset_contains(s, u)) return false;
  return true;
}

bool is_down_closed(const FinPoset& p, const std::vector<int>& s) {
  for (int x : s)
    for (int u = 0; u < p.n; ++u)
      if (p.leq(u, x) && !subset_contains(s, u)) return false;
  return true;
}

bool is_directed_subset(const FinPoset& p, const std::vector<int>& s) {
  if (s.empty()) return false;
  for (int x : s)
    for (int y : s) {
      bool bounded = false;
      for (int u : s)
        if (p.leq(x, u) && p.leq(y, u)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

FinPoset subposet(const FinPoset& p, const std::vector<int>& elements) {
  FinPoset q;
  q.n = int(elements.size());
  q.rel.assign(size_t(q.n) * q.n, 0);
  q.labels.resize(q.n);
  for (int i = 0; i < q.n; ++i) {
    q.labels[i] = p.label(elements[i]);
    for (int j = 0; j < q.n; ++j)
      q.rel[size_t(i) * q.n + j] = p.leq(elements[i], elements[j]) ? 1 : 0;
  }
  return q;
}

}  // namespace finloc
