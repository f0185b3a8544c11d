#include "gtutte/engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "gtutte/errors.hpp"

namespace gtutte {

namespace {

void check_cap(std::size_t n, const EngineOptions& opts, const char* op) {
  if (n > opts.naive_cap)
    throw CapExceeded(std::string(op) + ": list length " + std::to_string(n) +
                      " exceeds enumeration cap " +
                      std::to_string(opts.naive_cap));
}

std::string canonical_key(const ElementList& list) {
  IntMatrix h = hermite_column_form(list.group().relations());
  std::vector<std::string> cols;
  cols.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::vector<Int> v = reduce_mod_lattice(h, list.lift(i));
    std::string s;
    for (const Int& e : v) s += e.get_str() + ",";
    cols.push_back(std::move(s));
  }
  std::sort(cols.begin(), cols.end());
  std::string key = std::to_string(list.group().ambient_rank()) + "|";
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      key += h.at(i, j).get_str() + ",";
  key += "|";
  for (const std::string& c : cols) key += c + ";";
  return key;
}

using Memo = std::unordered_map<std::string, BiPoly>;

BiPoly dc_recurse(const ElementList& list, const TargetGroup& g, Memo* memo) {
  std::string key;
  if (memo) {
    key = canonical_key(list);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  BiPoly result;
  if (list.size() == 0) {
    result = BiPoly(hom_count(list.group().torsion_factors(), g));
  } else {
    std::size_t pivot = 0;
    bool proper = false;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (is_proper(list, i)) {
        pivot = i;
        proper = true;
        break;
      }
    BiPoly del = dc_recurse(list.without(pivot), g, memo);
    BiPoly con = dc_recurse(contraction(list, {pivot}), g, memo);
    if (proper)
      result = del + con;
    else if (is_loop(list, pivot))
      result = del + y_minus_one() * con;
    else
      result = x_minus_one() * del + con;
  }
  if (memo) (*memo)[key] = result;
  return result;
}

}  // namespace

std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1) idx.push_back(i);
  return idx;
}

Int multiplicity(const ElementList& list,
                 const std::vector<std::size_t>& sublist,
                 const TargetGroup& g) {
  return hom_count(quotient(list, sublist).torsion_factors(), g);
}

BiPoly g_tutte_naive(const ElementList& list, const TargetGroup& g,
                     const EngineOptions& opts) {
  const std::size_t n = list.size();
  check_cap(n, opts, "g_tutte_naive");
  const std::size_t r_full = list_rank(list);
  BiPoly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto idx = mask_indices(mask, n);
    FgGroup q = quotient(list, idx);
    std::size_t r = list.group().free_rank() - q.free_rank();
    Int m = hom_count(q.torsion_factors(), g);
    total += BiPoly(m) * x_minus_one().pow(r_full - r) *
             y_minus_one().pow(idx.size() - r);
  }
  return total;
}

BiPoly g_tutte_dc(const ElementList& list, const TargetGroup& g,
                  const EngineOptions& opts) {
  Memo memo;
  return dc_recurse(list, g, opts.memoize ? &memo : nullptr);
}

UniPoly g_characteristic(const ElementList& list, const TargetGroup& g,
                         const EngineOptions& opts) {
  BiPoly t = g_tutte_dc(list, g, opts);
  return specialize_bi_to_uni(t, list_rank(list), list.group().free_rank());
}

LaurentMulti multivariate_z(const ElementList& list, const TargetGroup& g,
                            const EngineOptions& opts) {
  const std::size_t n = list.size();
  check_cap(n, opts, "multivariate_z");
  LaurentMulti z(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto idx = mask_indices(mask, n);
    FgGroup q = quotient(list, idx);
    long r = static_cast<long>(list.group().free_rank() - q.free_rank());
    std::vector<long> vexp(n, 0);
    for (std::size_t i : idx) vexp[i] = 1;
    z.add_term(-r, vexp, hom_count(q.torsion_factors(), g));
  }
  return z;
}

BiPoly tutte_from_z(const LaurentMulti& z, std::size_t list_rank) {
  BiPoly total;
  for (const auto& [key, c] : z.terms()) {
    long r = -key[0];
    long weight = 0;
    for (std::size_t i = 1; i < key.size(); ++i) weight += key[i];
    total += BiPoly(c) * x_minus_one().pow(static_cast<long>(list_rank) - r) *
             y_minus_one().pow(weight - r);
  }
  return total;
}

Specialization classify_specialization(const TargetGroup& g) {
  if (g.finite_factors.empty() && g.torus_rank == 0)
    return Specialization::ClassicalTutte;
  if (g.finite_factors.empty() && g.torus_rank == 1)
    return Specialization::ArithmeticTutte;
  if (g.dimension() == 0 && g.finite_factors.size() <= 1)
    return Specialization::CyclicConstituent;
  return Specialization::General;
}

ElementList apply_homomorphism(const IntMatrix& sigma,
                               const ElementList& list) {
  if (!list.group().is_torsion_free() || list.group().relations().cols() != 0)
    throw TorsionGroup("apply_homomorphism needs a free group Z^l");
  if (sigma.rows() != sigma.cols() ||
      sigma.rows() != list.group().ambient_rank())
    throw DimensionMismatch("sigma must be square of size ambient_rank");
  return ElementList(list.group(), sigma * list.lifts(), list.labels());
}

std::vector<std::pair<std::size_t, Int>> finite_gamma_expansion(
    const ElementList& list, const TargetGroup& g, const EngineOptions& opts) {
  const std::size_t n = list.size();
  check_cap(n, opts, "finite_gamma_expansion");
  for (std::size_t i = 0; i < n; ++i)
    if (!is_loop(list, i))
      throw NonTorsionElement("element " + std::to_string(i) +
                              " has infinite order");
  std::vector<Int> m(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    m[mask] = multiplicity(list, mask_indices(mask, n), g);
  // y^k coefficient: sum over #S = k of the inclusion-exclusion count
  // of complement points of the contraction by S
  std::vector<Int> coeff(n + 1);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(s));
    std::uint64_t rest = ~s & ((std::uint64_t{1} << n) - 1);
    // iterate supersets b of s
    std::uint64_t extra = 0;
    for (;;) {
      std::uint64_t b = s | extra;
      std::size_t diff = static_cast<std::size_t>(__builtin_popcountll(extra));
      coeff[k] += (diff % 2 == 0) ? m[b] : -m[b];
      if (extra == rest) break;
      extra = (extra - rest) & rest;
    }
  }
  std::vector<std::pair<std::size_t, Int>> out;
  for (std::size_t k = 0; k <= n; ++k) out.emplace_back(k, coeff[k]);
  return out;
}

}  // namespace gtutte
