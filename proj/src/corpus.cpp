#include "finloc/corpus.hpp"

namespace finloc {
namespace corpus {

namespace {

std::vector<std::string> chain_labels(int n) {
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) {
    if (i == 0) l[i] = "0";
    else if (i == n - 1) l[i] = "1";
    else l[i] = std::string(1, char('a' + i - 1));
  }
  if (n == 1) l[0] = "*";
  return l;
}

FinPoset poset_from_covers(int n, std::vector<std::pair<int, int>> covers,
                           std::vector<std::string> labels) {
  std::vector<uint8_t> rel(size_t(n) * n, 0);
  for (auto [a, b] : covers) rel[size_t(a) * n + b] = 1;
  rel = reflexive_transitive_closure(n, std::move(rel));
  return validate_poset(n, std::move(rel), std::move(labels));
}

}  // namespace

FinPoset chain_poset(int n) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  return poset_from_covers(n, covers, chain_labels(n));
}

FinPoset antichain_poset(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
  return poset_from_covers(n, {}, labels);
}

FinPoset m2_poset() {
  return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                           {"0", "l", "r", "1"});
}

FinPoset n5_poset() {
  // 0 < a < b < 1 and 0 < c < 1, with c incomparable to a, b
  return poset_from_covers(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
                           {"0", "a", "b", "c", "1"});
}

FinPoset cube_poset() {
  // subsets of {p,q,r} by inclusion, in bitmask order
  std::vector<std::string> labels = {"0", "p", "q", "pq", "r", "pr", "qr", "1"};
  std::vector<uint8_t> rel(64, 0);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if ((i & j) == i) rel[size_t(i) * 8 + j] = 1;
  return validate_poset(8, std::move(rel), std::move(labels));
}

FinFrame one() { return FinFrame{build_lattice(chain_poset(1))}; }
FinFrame chain(int n) { return FinFrame{build_lattice(chain_poset(n))}; }
FinFrame m2() { return FinFrame{build_lattice(m2_poset())}; }

FinFrame m2_top() {
  return FinFrame{build_lattice(poset_from_covers(
      5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}}, {"0", "l", "r", "m", "1"}))};
}

FinFrame m2_bot() {
  return FinFrame{build_lattice(poset_from_covers(
      5, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}, {"0", "m", "l", "r", "1"}))};
}

FinFrame cube() { return FinFrame{build_lattice(cube_poset())}; }

std::vector<NamedFrame> frames() {
  return {
      {"one", one()},       {"c2", chain(2)},   {"c3", chain(3)},
      {"c4", chain(4)},     {"c5", chain(5)},   {"m2", m2()},
      {"m2_top", m2_top()}, {"m2_bot", m2_bot()}, {"cube", cube()},
  };
}

std::vector<NamedFrame> frames_up_to(int max_elements) {
  std::vector<NamedFrame> out;
  for (auto& nf : frames())
    if (nf.frame.n() <= max_elements) out.push_back(nf);
  return out;
}

ScottDomain domain_one() { return validate_scott_domain(chain_poset(1), 0); }
ScottDomain domain_chain2() { return validate_scott_domain(chain_poset(2), 0); }

ScottDomain flat_domain(int k) {
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels(k + 1);
  labels[0] = "0";
  for (int i = 1; i <= k; ++i) {
    covers.push_back({0, i});
    labels[i] = "x" + std::to_string(i - 1);
  }
  return validate_scott_domain(poset_from_covers(k + 1, covers, labels), 0);
}

ScottDomain domain_m2() { return validate_scott_domain(m2_poset(), 0); }

std::vector<NamedDomain> domains() {
  return {
      {"one", domain_one()},
      {"c2", domain_chain2()},
      {"flat2", flat_domain(2)},
      {"flat3", flat_domain(3)},
      {"m2", domain_m2()},
  };
}

std::vector<FinPoset> all_posets(int n, long long cap) {
  const int pairs = n * (n - 1);
  if (pairs >= 62 || (1LL << pairs) > cap)
    throw CapExceeded(pairs < 62 ? (1LL << pairs) : cap + 1, cap);
  std::vector<FinPoset> out;
  // iterate over all strict relations on the off-diagonal entries
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    std::vector<uint8_t> rel(size_t(n) * n, 0);
    for (int i = 0; i < n; ++i) rel[size_t(i) * n + i] = 1;
    for (int s = 0; s < pairs; ++s)
      if (mask & (1LL << s)) rel[size_t(slots[s].first) * n + slots[s].second] = 1;
    try {
      out.push_back(validate_poset(n, rel));
    } catch (const ValidationError&) {
    }
  }
  return out;
}

}  // namespace corpus
}  // namespace finloc
