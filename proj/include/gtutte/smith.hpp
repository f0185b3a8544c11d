#pragma once

#include <vector>

#include "gtutte/int_matrix.hpp"

namespace gtutte {

/// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.
struct SmithForm {
  std::vector<Int> invariant_factors;
  std::size_t rank() const { return invariant_factors.size(); }
  bool operator==(const SmithForm&) const = default;
};

/// Smith normal form via gcd-reduction pivoting on a minimal-absolute-value
/// entry. Total on all matrices, including empty ones. Transform matrices
/// are not computed.
SmithForm smith_normal_form(IntMatrix m);

/// Column-style Hermite normal form: returns the matrix of nonzero pivot
/// columns spanning the same column lattice, in a canonical shape (positive
/// pivots, entries left of a pivot reduced into [0, pivot)). Used for
/// canonical keys; not part of the public group API.
IntMatrix hermite_column_form(IntMatrix m);

/// Reduces v modulo the column lattice of a Hermite form, yielding the
/// canonical coset representative.
std::vector<Int> reduce_mod_lattice(const IntMatrix& hermite,
                                    std::vector<Int> v);

}  // namespace gtutte
