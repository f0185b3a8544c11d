#include "gtutte/matroid.hpp"

#include <sstream>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

using Mask = std::uint64_t;

struct SweepData {
  std::size_t n;
  std::vector<std::size_t> rank;  // by mask
  std::vector<Int> mult;          // by mask
};

SweepData precompute(const ElementList& list, const TargetGroup& g,
                     const EngineOptions& opts) {
  const std::size_t n = list.size();
  if (n > opts.naive_cap)
    throw CapExceeded("axiom sweep: list length exceeds cap");
  SweepData d{n, {}, {}};
  d.rank.resize(std::size_t{1} << n);
  d.mult.resize(std::size_t{1} << n);
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    FgGroup q = quotient(list, mask_indices(mask, n));
    d.rank[mask] = list.group().free_rank() - q.free_rank();
    d.mult[mask] = hom_count(q.torsion_factors(), g);
  }
  return d;
}

int popcount(Mask m) { return __builtin_popcountll(m); }

bool divides(const Int& a, const Int& b) {
  return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
}

AxiomReport fail(Axiom axiom, AxiomReport::Witness w) {
  AxiomReport r{axiom, false, std::move(w)};
  return r;
}

// Ascending submask enumeration of `rest`, including 0 and rest.
template <typename F>
void for_each_submask(Mask rest, F&& f) {
  Mask sub = 0;
  for (;;) {
    f(sub);
    if (sub == rest) break;
    sub = (sub - rest) & rest;
  }
}

AxiomReport divisibility_sweep(Axiom axiom, const ElementList& list,
                               const TargetGroup& g,
                               const EngineOptions& opts) {
  SweepData d = precompute(list, g, opts);
  const std::size_t jump = (axiom == Axiom::A1) ? 0 : 1;
  for (Mask s = 0; s < (Mask{1} << d.n); ++s)
    for (std::size_t a = 0; a < d.n; ++a) {
      if (s >> a & 1) continue;
      Mask sa = s | (Mask{1} << a);
      if (d.rank[sa] != d.rank[s] + jump) continue;
      // A1: m(S u a) | m(S); A2: m(S) | m(S u a)
      bool ok = (axiom == Axiom::A1) ? divides(d.mult[sa], d.mult[s])
                                     : divides(d.mult[s], d.mult[sa]);
      if (!ok)
        return fail(axiom, {mask_indices(s, d.n),
                            mask_indices(sa, d.n),
                            a,
                            {d.mult[s], d.mult[sa]}});
    }
  return {axiom, true, std::nullopt};
}

bool is_molecule(const SweepData& d, Mask s, Mask t, Mask b) {
  bool ok = true;
  for_each_submask(t & ~s, [&](Mask extra) {
    Mask r = s | extra;
    if (d.rank[r] != d.rank[s] + static_cast<std::size_t>(popcount(r & b)))
      ok = false;
  });
  return ok;
}

AxiomReport molecule_product_sweep(const ElementList& list,
                                   const TargetGroup& g,
                                   const EngineOptions& opts) {
  SweepData d = precompute(list, g, opts);
  AxiomReport report{Axiom::A3, true, std::nullopt};
  for (Mask t = 0; t < (Mask{1} << d.n) && report.holds; ++t) {
    std::vector<Mask> subs;
    for_each_submask(t, [&](Mask s) { subs.push_back(s); });
    for (Mask s : subs) {
      if (!report.holds) break;
      for_each_submask(t & ~s, [&](Mask b) {
        if (!report.holds) return;
        Mask c = t & ~s & ~b;
        if (!is_molecule(d, s, t, b)) return;
        Int lhs = d.mult[s] * d.mult[t];
        Int rhs = d.mult[s | b] * d.mult[s | c];
        if (lhs != rhs)
          report = fail(Axiom::A3, {mask_indices(s, d.n),
                                    mask_indices(t, d.n),
                                    std::nullopt,
                                    {lhs, rhs}});
      });
    }
  }
  return report;
}

AxiomReport positivity_sweep(Axiom axiom, const ElementList& list,
                             const TargetGroup& g, const EngineOptions& opts) {
  SweepData d = precompute(list, g, opts);
  AxiomReport report{axiom, true, std::nullopt};
  for (Mask t = 0; t < (Mask{1} << d.n) && report.holds; ++t) {
    std::vector<Mask> subs;
    for_each_submask(t, [&](Mask s) { subs.push_back(s); });
    for (Mask s : subs) {
      if (!report.holds) break;
      const std::size_t gap = static_cast<std::size_t>(popcount(t & ~s));
      if (axiom == Axiom::A4 && d.rank[t] != d.rank[s]) continue;
      if (axiom == Axiom::A5 && d.rank[t] != d.rank[s] + gap) continue;
      Mask bmask = 0;
      if (axiom == Axiom::P) {
        // split T \ S into the rank-increasing part and the rest; the
        // interval is a molecule only if ranks are additive along it
        for (std::size_t a = 0; a < d.n; ++a)
          if ((t >> a & 1) && !(s >> a & 1) &&
              d.rank[s | (Mask{1} << a)] == d.rank[s] + 1)
            bmask |= Mask{1} << a;
        if (!is_molecule(d, s, t, bmask)) continue;
      }
      Int sum = 0;
      for_each_submask(t & ~s, [&](Mask extra) {
        Mask b = s | extra;
        int par = (axiom == Axiom::A4) ? popcount(extra)
                                       : popcount(t) - popcount(b);
        sum += (par % 2 == 0) ? d.mult[b] : -d.mult[b];
      });
      if (axiom == Axiom::P && (d.rank[t] - d.rank[s]) % 2 == 1) sum = -sum;
      if (sum < 0)
        report = fail(axiom, {mask_indices(s, d.n),
                              mask_indices(t, d.n),
                              std::nullopt,
                              {sum}});
    }
  }
  return report;
}

}  // namespace

std::string axiom_name(Axiom a) {
  switch (a) {
    case Axiom::A1: return "A1";
    case Axiom::A2: return "A2";
    case Axiom::A3: return "A3";
    case Axiom::A4: return "A4";
    case Axiom::A5: return "A5";
    case Axiom::P: return "P";
  }
  return "?";
}

std::string AxiomReport::Witness::str() const {
  std::ostringstream out;
  auto set = [&out](const char* name, const std::vector<std::size_t>& idx) {
    out << name << "={";
    for (std::size_t i = 0; i < idx.size(); ++i)
      out << (i ? "," : "") << idx[i];
    out << "}";
  };
  set("S", s);
  out << " ";
  set("T", t);
  if (alpha) out << " alpha=" << *alpha;
  out << " values=[";
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? "," : "") << values[i].get_str();
  out << "]";
  return out.str();
}

AxiomReport check_axiom(Axiom axiom, const ElementList& list,
                        const TargetGroup& g, const EngineOptions& opts) {
  switch (axiom) {
    case Axiom::A1:
    case Axiom::A2:
      return divisibility_sweep(axiom, list, g, opts);
    case Axiom::A3:
      return molecule_product_sweep(list, g, opts);
    case Axiom::A4:
    case Axiom::A5:
    case Axiom::P:
      return positivity_sweep(axiom, list, g, opts);
  }
  throw DomainError("InvalidAxiom", "unknown axiom id");
}

AxiomReport check_axiom1(const ElementList& l, const TargetGroup& g,
                         const EngineOptions& o) {
  return check_axiom(Axiom::A1, l, g, o);
}
AxiomReport check_axiom2(const ElementList& l, const TargetGroup& g,
                         const EngineOptions& o) {
  return check_axiom(Axiom::A2, l, g, o);
}
AxiomReport check_axiom3(const ElementList& l, const TargetGroup& g,
                         const EngineOptions& o) {
  return check_axiom(Axiom::A3, l, g, o);
}
AxiomReport check_axiom4(const ElementList& l, const TargetGroup& g,
                         const EngineOptions& o) {
  return check_axiom(Axiom::A4, l, g, o);
}
AxiomReport check_axiom5(const ElementList& l, const TargetGroup& g,
                         const EngineOptions& o) {
  return check_axiom(Axiom::A5, l, g, o);
}
AxiomReport check_axiom_p(const ElementList& l, const TargetGroup& g,
                          const EngineOptions& o) {
  return check_axiom(Axiom::P, l, g, o);
}

bool convolution_check(const ElementList& list, const TargetGroup& g1,
                       const TargetGroup& g2, const EngineOptions& opts) {
  const std::size_t n = list.size();
  if (n > opts.naive_cap)
    throw CapExceeded("convolution_check: list length exceeds cap");
  BiPoly lhs = g_tutte_naive(list, g1.product(g2), opts);
  BiPoly rhs;
  for (Mask mask = 0; mask < (Mask{1} << n); ++mask) {
    auto idx = mask_indices(mask, n);
    UniPoly restr_y = g_tutte_naive(list.sublist(idx), g1, opts).at_x(0);
    UniPoly contr_x = g_tutte_naive(contraction(list, idx), g2, opts).at_y(0);
    for (const auto& [ey, cy] : restr_y.terms())
      for (const auto& [ex, cx] : contr_x.terms())
        rhs += BiPoly::monomial(cy * cx, ex, ey);
  }
  return lhs == rhs;
}

bool duality_check(const ElementList& list, const TargetGroup& g,
                   const EngineOptions& opts) {
  const std::size_t n = list.size();
  if (n > opts.naive_cap)
    throw CapExceeded("duality_check: list length exceeds cap");
  auto [dual_group, dual_list] = dual_construction(list);
  BiPoly t = g_tutte_naive(list, g, opts);
  BiPoly t_dual = g_tutte_naive(dual_list, g, opts);
  if (t_dual != t.swapped_xy()) return false;
  const Mask full = (Mask{1} << n) - 1;
  for (Mask mask = 0; mask <= full && n > 0; ++mask) {
    auto s = mask_indices(mask, n);
    auto sc = mask_indices(full & ~mask, n);
    if (multiplicity(dual_list, s, g) != multiplicity(list, sc, g))
      return false;
  }
  return true;
}

}  // namespace gtutte
