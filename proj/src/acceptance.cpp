#include "finloc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iterator>
#include <sstream>

#include "finloc/corpus.hpp"
#include "finloc/io.hpp"

namespace finloc {

namespace {

using corpus::frames;
using corpus::frames_up_to;

struct Check {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    pass = false;
    if (detail.tellp() > 0) detail << "; ";
    detail << why;
  }
  void note(const std::string& what) {
    if (pass && detail.tellp() == 0) detail << what;
  }
};

Check spectrum_examples(long long cap) {
  Check c;
  auto expect_iso = [&](const FinDistLattice& got, const FinFrame& want,
                        const std::string& what) {
    if (!isomorphic(got, want.lat, cap)) c.fail(what + " not isomorphic");
  };
  expect_iso(spectrum(corpus::chain(2).lat, cap).frame.lat, corpus::chain(2),
             "spectrum(2-chain)");
  expect_iso(spectrum(corpus::chain(3).lat, cap).frame.lat, corpus::chain(3),
             "spectrum(3-chain)");
  expect_iso(spectrum(corpus::m2().lat, cap).frame.lat, corpus::m2(),
             "spectrum(M2)");
  c.note("3 spectra matched");
  return c;
}

Check duality_roundtrips(long long cap) {
  Check c;
  int n = 0;
  for (auto& nf : frames_up_to(5)) {
    auto obj = duality_roundtrip_object(nf.frame.lat, cap);
    if (!obj.ok) c.fail(nf.name + ": object round-trip failed");
    auto frm = duality_roundtrip_frame(nf.frame, cap);
    if (!frm.ok) c.fail(nf.name + ": frame round-trip failed");
    ++n;
  }
  c.note(std::to_string(n) + " lattices certified");
  return c;
}

Check functor_roundtrips(long long cap) {
  Check c;
  int homs = 0;
  for (auto& y : frames_up_to(4))
    for (auto& x : frames_up_to(4)) {
      for (auto& f : frame_homs(y.frame, x.frame, cap)) {
        LatticeHom k = K_on_hom(f, cap);
        FrameHom back = Spec_on_hom(k, y.frame, x.frame, cap);
        if (!(back.table == f.table))
          c.fail(y.name + "->" + x.name + ": Spec(K(f)) != f");
        ++homs;
      }
      CompactOpens ky = compact_opens_lattice(y.frame, cap);
      CompactOpens kx = compact_opens_lattice(x.frame, cap);
      for (auto& h : enumerate_lattice_homs(ky.lattice, kx.lattice, cap)) {
        FrameHom f = Spec_on_hom(h, y.frame, x.frame, cap);
        LatticeHom back = K_on_hom(f, cap);
        if (!(back.table == h.table))
          c.fail(y.name + "->" + x.name + ": K(Spec(h)) != h");
      }
    }
  c.note(std::to_string(homs) + " frame homs round-tripped");
  return c;
}

Check nucleus_join_criterion(long long cap) {
  Check c;
  int joins = 0;
  for (auto& nf : frames_up_to(4)) {
    auto nucs = enumerate_nuclei(nf.frame, cap);
    const int m = int(nucs.size());
    if (m > 20) {
      c.fail(nf.name + ": unexpectedly many nuclei");
      continue;
    }
    for (long long mask = 0; mask < (1LL << m); ++mask) {
      std::vector<Nucleus> fam;
      for (int i = 0; i < m; ++i)
        if (mask & (1LL << i)) fam.push_back(nucs[i]);
      Nucleus join = nucleus_join(nf.frame, fam);
      // brute-force least upper bound over the enumerated nucleus poset
      const Nucleus* best = nullptr;
      for (const Nucleus& cand : nucs) {
        bool ub = true;
        for (const Nucleus& k : fam)
          if (!nucleus_leq(k, cand)) ub = false;
        if (!ub) continue;
        if (!best || nucleus_leq(cand, *best)) best = &cand;
      }
      if (!best || !(join == *best)) {
        c.fail(nf.name + ": join differs from brute-force lub");
        break;
      }
      for (const Nucleus& j : nucs) {
        std::vector<Nucleus> met;
        for (const Nucleus& k : fam) met.push_back(nucleus_meet(j, k));
        if (!(nucleus_meet(j, join) == nucleus_join(nf.frame, met))) {
          c.fail(nf.name + ": distributivity failed");
          break;
        }
      }
      ++joins;
    }
  }
  c.note(std::to_string(joins) + " joins matched the oracle");
  return c;
}

Check patch_sierpinski(long long cap) {
  Check c;
  Sierpinski s = sierpinski();
  PatchFrame pf = patch(s.frame, cap);
  if (!isomorphic(pf.frame.lat, corpus::m2().lat, cap))
    c.fail("patch(Sierpinski) not Boolean-4");
  if (pf.frame.n() != 4) c.fail("patch(Sierpinski) has wrong size");
  // the expected diamond: identity at the bottom, the closed and open nuclei
  // on truth incomparable in the middle, the top nucleus above
  int bot = pf.frame.bot(), top = pf.frame.top();
  if (pf.frame.label(bot) != "c_0") c.fail("bottom label " + pf.frame.label(bot));
  if (pf.frame.label(top) != "o_0") c.fail("top label " + pf.frame.label(top));
  bool saw_ct = false, saw_ot = false;
  for (int i = 0; i < pf.frame.n(); ++i) {
    if (pf.frame.label(i) == "c_true") saw_ct = true;
    if (pf.frame.label(i) == "o_true") saw_ot = true;
  }
  if (!saw_ct || !saw_ot) c.fail("middle labels missing");
  c.note("diamond with labels c_0, c_true, o_true, o_0");
  return c;
}

Check patch_stone(long long cap) {
  Check c;
  for (auto& nf : frames_up_to(5)) {
    PatchFrame pf = patch(nf.frame, cap);
    if (!is_stone(pf.frame, cap).value) c.fail(nf.name + ": patch not Stone");
  }
  int checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (auto& p : corpus::all_posets(n, cap)) {
      auto dl = downset_lattice(p, cap);
      PatchFrame pf = patch(FinFrame{dl.lattice}, cap);
      if (pf.frame.n() != (1 << n)) {
        c.fail("assembly size != 2^" + std::to_string(n));
        break;
      }
      ++checked;
    }
  c.note(std::to_string(checked) + " downset lattices hit 2^|P|");
  return c;
}

Check patch_universal_property(long long cap) {
  Check c;
  std::vector<corpus::NamedFrame> as = {
      {"c2", corpus::chain(2)}, {"c3", corpus::chain(3)}, {"m2", corpus::m2()}};
  std::vector<corpus::NamedFrame> xs = {{"c2", corpus::chain(2)},
                                        {"m2", corpus::m2()}};
  int cases = 0;
  for (auto& a : as)
    for (auto& x : xs) {
      auto cert = verify_patch_up(a.frame, x.frame, cap);
      if (!cert.ok || !cert.uniqueness_checked)
        c.fail("UP failed for A=" + a.name + ", X=" + x.name);
      cases += int(cert.cases.size());
    }
  c.note(std::to_string(cases) + " universal lifts certified");
  return c;
}

Check aft_heyting(long long cap) {
  Check c;
  int adjoints = 0;
  for (auto& a : frames_up_to(4))
    for (auto& b : frames_up_to(4))
      for (auto& h : enumerate_monotone_maps(a.frame.lat.poset,
                                             b.frame.lat.poset, cap)) {
        if (!preserves_subset_joins(a.frame, b.frame, h.table, cap)) continue;
        auto g = right_adjoint(a.frame, b.frame, h.table);
        for (int u = 0; u < a.frame.n(); ++u)
          for (int v = 0; v < b.frame.n(); ++v)
            if (b.frame.leq(h.table[u], v) != a.frame.leq(u, g[v])) {
              c.fail(a.name + "->" + b.name + ": adjunction law failed");
              u = a.frame.n();
              break;
            }
        ++adjoints;
      }
  for (auto& nf : frames()) {
    const FinFrame& f = nf.frame;
    for (int u = 0; u < f.n(); ++u)
      for (int v = 0; v < f.n(); ++v) {
        int imp = heyting(f, u, v);
        for (int w = 0; w < f.n(); ++w)
          if (f.leq(f.meet(w, u), v) != f.leq(w, imp)) {
            c.fail(nf.name + ": residuation failed");
            u = v = f.n();
            break;
          }
      }
  }
  c.note(std::to_string(adjoints) + " adjoints verified");
  return c;
}

Check scott_locale(long long cap) {
  Check c;
  for (auto& nd : corpus::domains()) {
    ScottFrame sf = scott_frame(nd.domain, cap);
    if (!validate_frame(sf.frame, cap).ok())
      c.fail(nd.name + ": scott frame invalid");
    BaseFamily base = scott_base(sf, cap);
    if (!is_base(base)) c.fail(nd.name + ": scott base fails is_base");
    if (!is_spectral_scott(nd.domain, cap).value)
      c.fail(nd.name + ": not spectral");
    const ScottDomain& d = nd.domain;
    for (int x = 0; x < d.poset.n; ++x)
      for (int y = 0; y < d.poset.n; ++y) {
        std::vector<int> inter;
        auto ux = upset(d, x), uy = upset(d, y);
        std::set_intersection(ux.begin(), ux.end(), uy.begin(), uy.end(),
                              std::back_inserter(inter));
        if (bounded_above(d, x, y)) {
          auto lub = least_upper_bound(d.poset, {x, y});
          if (!lub || inter != upset(d, *lub))
            c.fail(nd.name + ": up(x join y) != up(x) /\\ up(y)");
        } else if (!inter.empty()) {
          c.fail(nd.name + ": unbounded filters intersect");
        }
      }
  }
  c.note("5 domains certified");
  return c;
}

Check point_equivalences(long long cap) {
  Check c;
  for (auto& nd : corpus::domains()) {
    auto cert = points_equivalences(nd.domain, cap);
    if (!cert.ok) c.fail(nd.name + ": equivalences failed");
    if (cert.point_count != cert.domain_size)
      c.fail(nd.name + ": |pt| != |D|");
    if (cert.patch_point_count != cert.domain_size ||
        cert.sharp_count != cert.domain_size)
      c.fail(nd.name + ": |pt(patch)| != |Sharp(D)| = |D|");
  }
  c.note("5 domains, all bijections certified");
  return c;
}

Check sierpinski_up(long long cap) {
  Check c;
  int opens = 0;
  for (auto& nf : frames_up_to(4)) {
    auto cert = verify_sierpinski_up(nf.frame, cap);
    if (!cert.ok) c.fail(nf.name + ": Sierpinski UP failed");
    opens += nf.frame.n();
  }
  c.note(std::to_string(opens) + " opens, one hom each");
  return c;
}

Check finite_collapse(long long cap) {
  Check c;
  for (auto& nf : frames()) {
    const FinFrame& f = nf.frame;
    for (int u = 0; u < f.n(); ++u) {
      if (!is_compact(f, u, cap)) c.fail(nf.name + ": non-compact open");
      for (int v = 0; v < f.n(); ++v)
        if (way_below(f, u, v, cap) != f.leq(u, v))
          c.fail(nf.name + ": way-below differs from order");
    }
    for (auto& i : all_ideals(f.lat, cap))
      if (!principal_generator(i)) c.fail(nf.name + ": non-principal ideal");
    FinFrame two = two_chain_frame();
    for (auto& p : points(f, cap))
      for (int k = 0; k < f.n(); ++k) {
        int image = subset_contains(p.filter, k) ? two.top() : two.bot();
        if (is_compact(f, k, cap) && !is_compact(two, image, cap))
          c.fail(nf.name + ": non-spectral point");
      }
  }
  c.note("collapse guards hold on all 9 corpus frames");
  return c;
}

struct Entry {
  int id;
  std::string name;
  std::vector<std::string> groups;
  std::function<Check(long long)> fn;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> entries = {
      {1, "spectrum-examples", {"spectrum", "duality"}, spectrum_examples},
      {2, "duality-roundtrips", {"duality"}, duality_roundtrips},
      {3, "functor-roundtrips", {"duality", "functor"}, functor_roundtrips},
      {4, "nucleus-join", {"nuclei"}, nucleus_join_criterion},
      {5, "patch-sierpinski", {"patch"}, patch_sierpinski},
      {6, "patch-stone", {"patch"}, patch_stone},
      {7, "patch-universal-property", {"patch"}, patch_universal_property},
      {8, "aft-heyting", {"aft"}, aft_heyting},
      {9, "scott-locale", {"scott"}, scott_locale},
      {10, "point-equivalences", {"scott", "points"}, point_equivalences},
      {11, "sierpinski-up", {"scott", "sierpinski"}, sierpinski_up},
      {12, "finite-collapse", {"collapse"}, finite_collapse},
  };
  return entries;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out = {"all"};
  for (auto& e : table()) out.push_back(e.name);
  return out;
}

std::vector<CriterionResult> run_suite(const std::string& name, long long cap) {
  std::vector<CriterionResult> out;
  bool matched = false;
  for (auto& e : table()) {
    bool run = name == "all" || name == e.name;
    for (auto& g : e.groups)
      if (name == g) run = true;
    if (!run) continue;
    matched = true;
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    try {
      Check c = e.fn(cap);
      r.pass = c.pass;
      r.detail = c.detail.str();
    } catch (const CapExceeded& ex) {
      r.skipped = true;
      r.detail = ex.what();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
    out.push_back(std::move(r));
  }
  if (!matched)
    throw ValidationError({"UnknownSuite", {}, "no suite named '" + name + "'"});
  return out;
}

}  // namespace finloc
