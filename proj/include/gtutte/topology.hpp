#pragma once

#include <map>
#include <utility>
#include <vector>

#include "gtutte/engine.hpp"
#include "gtutte/group.hpp"
#include "gtutte/polynomial.hpp"
#include "gtutte/target_group.hpp"

namespace gtutte {

struct TopologyOptions {
  EngineOptions engine;
  /// Candidate-tuple budget for brute-force Hom enumeration.
  unsigned long enumeration_budget = 100'000'000UL;
};

/// Characteristic quasi-polynomial: period rho and one constituent per
/// divisor k | rho. Evaluation at arbitrary q selects f_{gcd(q, rho)}.
struct QuasiPolynomial {
  Int period;
  std::map<Int, UniPoly> constituents;

  const UniPoly& constituent_for(const Int& q) const;
  Int operator()(const Int& q) const { return constituent_for(q)(q); }
};

/// rho_A: lcm over all sublists of the largest invariant factor of the
/// quotient's torsion part.
Int arrangement_period(const ElementList& list, const TopologyOptions& opts = {});

/// #M(A/S; Gamma/<S>, G) for finite G by exhaustive enumeration of
/// Hom(Gamma, G): phi must kill the relations and the sublist `zeros`,
/// and be nonzero on every other list element. The independent oracle
/// behind the counting theorems.
Int complement_count_bruteforce(const ElementList& list,
                                const std::vector<std::size_t>& zeros,
                                const TargetGroup& g,
                                const TopologyOptions& opts = {});

/// #M(A; Gamma, G) by enumeration (zeros = {}).
Int point_count_bruteforce(const ElementList& list, const TargetGroup& g,
                           const TopologyOptions& opts = {});

/// #M(A; Gamma, G) = chi_A^G(#G) for finite G.
Int point_count_formula(const ElementList& list, const TargetGroup& g,
                        const EngineOptions& opts = {});

QuasiPolynomial quasi_polynomial(const ElementList& list,
                                 const TopologyOptions& opts = {});

/// (e_semi, e_top) of the complement M(A; Gamma, G).
std::pair<Int, Int> euler_characteristic(const ElementList& list,
                                         const TargetGroup& g,
                                         const EngineOptions& opts = {});

/// Betti-number generating polynomial of the complement for non-compact G.
/// Throws CompactGroup when G has no R factor.
UniPoly poincare_polynomial(const ElementList& list, const TargetGroup& g,
                            const EngineOptions& opts = {});

/// Verifies that the complement counts of all 2^n contractions partition
/// Hom(Gamma, G), each side by brute force.
bool partition_check(const ElementList& list, const TargetGroup& g,
                     const TopologyOptions& opts = {});

/// chi(h - t) == (-1)^rank * chi(t).
bool functional_equation_check(const UniPoly& chi, long coxeter_number,
                               std::size_t rank);

}  // namespace gtutte
