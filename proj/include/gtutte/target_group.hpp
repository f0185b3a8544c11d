#pragma once

#include <cstddef>
#include <vector>

#include "gtutte/errors.hpp"
#include "gtutte/int_matrix.hpp"

namespace gtutte {

/// The coefficient group G = F x (S^1)^p x R^q, where F is the finite
/// abelian group given by `finite_factors`. Always torsion-wise finite.
struct TargetGroup {
  std::vector<Int> finite_factors;  // cyclic orders >= 2
  std::size_t torus_rank = 0;       // p
  std::size_t real_rank = 0;        // q

  static TargetGroup trivial() { return {}; }
  static TargetGroup cyclic(const Int& k) {
    TargetGroup g;
    if (k < 1) throw DomainError("InvalidGroup", "cyclic order must be >= 1");
    if (k > 1) g.finite_factors.push_back(k);
    return g;
  }
  static TargetGroup circle() { return {{}, 1, 0}; }
  static TargetGroup complex_star() { return {{}, 1, 1}; }
  static TargetGroup complex_plane() { return {{}, 0, 2}; }
  static TargetGroup real_line() { return {{}, 0, 1}; }

  /// G1 x G2 (factors concatenated, ranks added).
  TargetGroup product(const TargetGroup& other) const {
    TargetGroup g = *this;
    g.finite_factors.insert(g.finite_factors.end(),
                            other.finite_factors.begin(),
                            other.finite_factors.end());
    g.torus_rank += other.torus_rank;
    g.real_rank += other.real_rank;
    return g;
  }

  bool is_finite() const { return torus_rank == 0 && real_rank == 0; }
  bool is_divisible() const { return finite_factors.empty(); }
  bool is_compact() const { return real_rank == 0; }
  std::size_t dimension() const { return torus_rank + real_rank; }

  Int finite_part_order() const {
    Int n = 1;
    for (const Int& f : finite_factors) n *= f;
    return n;
  }

  Int order() const {
    if (!is_finite()) throw NonFiniteGroup("group has positive dimension");
    return finite_part_order();
  }

  /// #G[d] = d^p * prod_j gcd(d, f_j); the R^q part contributes nothing.
  Int torsion_point_count(const Int& d) const {
    Int n;
    mpz_pow_ui(n.get_mpz_t(), d.get_mpz_t(), torus_rank);
    for (const Int& f : finite_factors) n *= gcd(d, f);
    return n;
  }

  Int euler_semialgebraic() const {
    if (torus_rank > 0) return 0;
    Int e = finite_part_order();
    return (real_rank % 2 == 0) ? e : -e;
  }

  Int euler_topological() const {
    return torus_rank > 0 ? Int(0) : finite_part_order();
  }

  bool operator==(const TargetGroup&) const = default;
};

/// #Hom(F, G) for F = prod Z/d_i Z given by `factors`.
inline Int hom_count(const std::vector<Int>& factors, const TargetGroup& g) {
  Int n = 1;
  for (const Int& d : factors) n *= g.torsion_point_count(d);
  return n;
}

}  // namespace gtutte
