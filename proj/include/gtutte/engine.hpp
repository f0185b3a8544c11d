#pragma once

#include <cstdint>
#include <vector>

#include "gtutte/group.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/target_group.hpp"

namespace gtutte {

struct EngineOptions {
  /// Guard on 2^n sublist enumeration (naive Tutte, Z, period sweeps).
  std::size_t naive_cap = 24;
  /// Memoize deletion-contraction states keyed by a canonical form of
  /// (relations, remaining lifts). Must not change results.
  bool memoize = false;
};

/// m(S; G) = #Hom((Gamma/<S>)_tor, G).
Int multiplicity(const ElementList& list, const std::vector<std::size_t>& sublist,
                 const TargetGroup& g);

/// T_A^G(x, y) by direct summation over all 2^n sublists.
BiPoly g_tutte_naive(const ElementList& list, const TargetGroup& g,
                     const EngineOptions& opts = {});

/// T_A^G(x, y) by deletion-contraction (pivot: lowest-index proper element).
BiPoly g_tutte_dc(const ElementList& list, const TargetGroup& g,
                  const EngineOptions& opts = {});

/// chi_A^G(t), via deletion-contraction and the T(1-t, 0) specialization.
UniPoly g_characteristic(const ElementList& list, const TargetGroup& g,
                         const EngineOptions& opts = {});

/// Z_A^G(q, v_1..v_n) by direct summation.
LaurentMulti multivariate_z(const ElementList& list, const TargetGroup& g,
                            const EngineOptions& opts = {});

/// (x-1)^{r_A} * Z((x-1)(y-1), y-1, ..., y-1).
BiPoly tutte_from_z(const LaurentMulti& z, std::size_t list_rank);

enum class Specialization {
  ClassicalTutte,     // #G[d] = 1 for all d: trivial, R^q
  ArithmeticTutte,    // #G[d] = d for all d: S^1, C^x
  CyclicConstituent,  // G = Z/kZ
  General,
};

Specialization classify_specialization(const TargetGroup& g);

/// Image list sigma(A) for a square sigma acting on a free group Z^l.
ElementList apply_homomorphism(const IntMatrix& sigma, const ElementList& list);

/// Coefficients of T_A^G as a polynomial in y, for lists of torsion
/// elements: the y^k coefficient counts complement points of the rank-k
/// contractions. All coefficients are non-negative.
std::vector<std::pair<std::size_t, Int>> finite_gamma_expansion(
    const ElementList& list, const TargetGroup& g,
    const EngineOptions& opts = {});

/// Index set of the bits set in mask.
std::vector<std::size_t> mask_indices(std::uint64_t mask, std::size_t n);

}  // namespace gtutte
