#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finloc/common.hpp"

namespace finloc {

// A finite poset on elements 0..n-1. The relation table is the full
// (reflexive, transitive) order, not a generating set. Labels are display
// metadata only and never participate in equality.
struct FinPoset {
  int n = 0;
  std::vector<uint8_t> rel;  // row-major: rel[i*n+j] != 0  iff  i <= j
  std::vector<std::string> labels;

  bool leq(int i, int j) const { return rel[size_t(i) * n + j] != 0; }
  std::string label(int i) const {
    if (i >= 0 && i < int(labels.size()) && !labels[i].empty()) return labels[i];
    return std::to_string(i);
  }
  bool operator==(const FinPoset& o) const { return n == o.n && rel == o.rel; }
};

// Checks reflexivity, antisymmetry and transitivity; throws ValidationError
// with laws NotReflexive(i) / NotAntisymmetric(i,j) / NotTransitive(i,j,k).
FinPoset validate_poset(int n, std::vector<uint8_t> rel,
                        std::vector<std::string> labels = {});

std::vector<uint8_t> reflexive_transitive_closure(int n, std::vector<uint8_t> rel);

// cover(i,j) iff i < j with nothing strictly between.
std::vector<uint8_t> hasse_cover(const FinPoset& p);

struct MonotoneMap {
  FinPoset dom, cod;
  std::vector<int> table;
  int operator()(int i) const { return table[i]; }
};

bool is_monotone(const FinPoset& dom, const FinPoset& cod,
                 const std::vector<int>& table);

// All monotone maps P -> Q in lexicographic table order.
std::vector<MonotoneMap> enumerate_monotone_maps(const FinPoset& p,
                                                 const FinPoset& q,
                                                 long long cap = kDefaultCap);

// Subset helpers. Subsets are sorted index vectors (the canonical form).
std::vector<int> canonical_subset(std::vector<int> s);
bool subset_contains(const std::vector<int>& s, int x);

std::vector<int> upper_bounds(const FinPoset& p, const std::vector<int>& s);
std::vector<int> lower_bounds(const FinPoset& p, const std::vector<int>& s);
std::optional<int> least_element(const FinPoset& p, const std::vector<int>& s);
std::optional<int> greatest_element(const FinPoset& p, const std::vector<int>& s);
std::optional<int> least_upper_bound(const FinPoset& p, const std::vector<int>& s);
std::optional<int> greatest_lower_bound(const FinPoset& p, const std::vector<int>& s);

std::vector<int> up_closure(const FinPoset& p, const std::vector<int>& s);
std::vector<int> down_closure(const FinPoset& p, const std::vector<int>& s);
bool is_up_closed(const FinPoset& p, const std::vector<int>& s);
bool is_down_closed(const FinPoset& p, const std::vector<int>& s);

// Inhabited and every pair has an upper bound *within the subset*.
bool is_directed_subset(const FinPoset& p, const std::vector<int>& s);

// Restriction of the order to the given elements (kept in the given order).
FinPoset subposet(const FinPoset& p, const std::vector<int>& elements);

}  // namespace finloc
