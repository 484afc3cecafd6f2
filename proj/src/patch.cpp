#include "finloc/patch.hpp"

#include <algorithm>

namespace finloc {

int PatchFrame::index_of(const std::vector<int>& table) const {
  for (size_t i = 0; i < nuclei.size(); ++i)
    if (nuclei[i].table == table) return int(i);
  return -1;
}

PatchFrame patch(const FinFrame& x, long long cap) {
  PatchFrame pf;
  pf.base = x;
  pf.nuclei = enumerate_nuclei(x, cap);
  const int m = int(pf.nuclei.size());

  for (const Nucleus& j : pf.nuclei)
    if (!preserves_directed_joins(j, cap))
      throw ValidationError({"NotScottContinuous", {}, "nucleus fails directed-join preservation"});

  FinPoset p;
  p.n = m;
  p.rel.assign(size_t(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      p.rel[size_t(i) * m + j] = nucleus_leq(pf.nuclei[i], pf.nuclei[j]) ? 1 : 0;
  pf.frame = FinFrame{build_lattice(p)};

  // the order-derived tables must agree with the nucleus operations
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int mt = pf.index_of(nucleus_meet(pf.nuclei[i], pf.nuclei[j]).table);
      int jn = pf.index_of(nucleus_join(x, {pf.nuclei[i], pf.nuclei[j]}).table);
      if (mt != pf.frame.meet(i, j) || jn != pf.frame.join(i, j))
        throw ValidationError({"PatchTableMismatch", {i, j}});
    }

  pf.frame.lat.poset.labels.resize(m);
  for (int i = 0; i < m; ++i)
    pf.frame.lat.poset.labels[i] = patch_element_label(pf, i);
  return pf;
}

PatchBase patch_base(const PatchFrame& pf, long long cap) {
  PatchBase out;
  out.family.frame = pf.frame;
  const FinFrame& x = pf.base;
  std::vector<int> compacts;
  for (int u = 0; u < x.n(); ++u)
    if (is_compact(x, u, cap)) compacts.push_back(u);
  for (int k1 : compacts)
    for (int k2 : compacts) {
      Nucleus g = nucleus_meet(closed_nucleus(x, k1), open_nucleus(x, k2));
      int idx = pf.index_of(g.table);
      if (idx < 0) throw ValidationError({"PatchBaseMiss", {k1, k2}});
      out.family.member.push_back(idx);
      out.index.push_back({k1, k2});
    }
  return out;
}

EpsilonMaps epsilon(const PatchFrame& pf) {
  EpsilonMaps out;
  std::vector<int> direct(pf.base.n());
  for (int u = 0; u < pf.base.n(); ++u) {
    int idx = pf.index_of(closed_nucleus(pf.base, u).table);
    if (idx < 0) throw ValidationError({"ClosedNucleusMissing", {u}});
    direct[u] = idx;
  }
  out.direct = FrameHom{pf.base, pf.frame, direct};
  out.adjoint.resize(pf.frame.n());
  for (int j = 0; j < pf.frame.n(); ++j)
    out.adjoint[j] = pf.nuclei[j].table[pf.base.bot()];
  return out;
}

FrameHom universal_map(const FrameHom& f, const PatchFrame& pa, long long cap) {
  const FinFrame& a = pa.base;
  const FinFrame& x = f.cod;
  if (!(f.dom == a))
    throw ValidationError({"DomainMismatch", {}, "f must start at the patched frame"});
  if (!is_frame_hom(a, x, f.table))
    throw ValidationError({"NotFrameHom", {}});
  if (!is_stone(x, cap).value) throw ValidationError({"NotStone", {}});

  std::vector<int> compacts;
  for (int u = 0; u < a.n(); ++u)
    if (is_compact(a, u, cap)) compacts.push_back(u);

  std::vector<int> table(pa.frame.n());
  for (int j = 0; j < pa.frame.n(); ++j) {
    std::vector<int> pieces;
    for (int k : compacts) {
      auto neg = complement(x, f.table[k]);
      if (!neg)
        throw ValidationError({"NotComplemented", {f.table[k]}, "Stone codomain must complement f*(K)"});
      pieces.push_back(x.meet(f.table[pa.nuclei[j].table[k]], *neg));
    }
    table[j] = join_subset(x, pieces);
  }
  return FrameHom{pa.frame, x, table};
}

PatchUPCertificate verify_patch_up(const FinFrame& a, const FinFrame& x,
                                   long long cap) {
  PatchUPCertificate cert;
  PatchFrame pa = patch(a, cap);
  EpsilonMaps eps = epsilon(pa);

  std::vector<FrameHom> downstairs = frame_homs(a, x, cap);
  std::vector<FrameHom> upstairs;
  bool can_enumerate = true;
  try {
    upstairs = frame_homs(pa.frame, x, cap);
  } catch (const CapExceeded&) {
    can_enumerate = false;
    cert.uniqueness_checked = false;
  }

  cert.ok = true;
  for (const FrameHom& f : downstairs) {
    PatchUPCase c;
    c.given = f;
    c.induced = universal_map(f, pa, cap);
    if (!is_frame_hom(pa.frame, x, c.induced.table)) cert.ok = false;
    // commutation: induced o eps^* = f^*
    c.commutes = true;
    for (int u = 0; u < a.n(); ++u)
      if (c.induced.table[eps.direct.table[u]] != f.table[u]) c.commutes = false;
    if (!c.commutes) cert.ok = false;
    if (can_enumerate) {
      for (const FrameHom& g : upstairs) {
        bool comm = true;
        for (int u = 0; u < a.n(); ++u)
          if (g.table[eps.direct.table[u]] != f.table[u]) {
            comm = false;
            break;
          }
        if (comm) {
          ++c.commuting_homs;
          if (!(g.table == c.induced.table)) cert.ok = false;
        }
      }
      if (c.commuting_homs != 1) cert.ok = false;
    }
    cert.cases.push_back(std::move(c));
  }
  return cert;
}

std::string patch_element_label(const PatchFrame& pf, int i) {
  const FinFrame& x = pf.base;
  const Nucleus& j = pf.nuclei[i];
  const Nucleus id = identity_nucleus(x);
  const Nucleus top = top_nucleus(x);
  if (j == id) return "c_" + x.label(x.bot());
  if (j == top) return "o_" + x.label(x.bot());
  int at_bot = j.table[x.bot()];
  if (closed_nucleus(x, at_bot) == j) return "c_" + x.label(at_bot);
  for (int u = 0; u < x.n(); ++u)
    if (open_nucleus(x, u) == j) return "o_" + x.label(u);
  for (int k1 = 0; k1 < x.n(); ++k1)
    for (int k2 = 0; k2 < x.n(); ++k2)
      if (nucleus_meet(closed_nucleus(x, k1), open_nucleus(x, k2)) == j)
        return "c_" + x.label(k1) + "&o_" + x.label(k2);
  return "j" + std::to_string(i);
}

}  // namespace finloc
