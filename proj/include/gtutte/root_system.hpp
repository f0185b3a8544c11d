#pragma once

#include <string>

#include "gtutte/group.hpp"
#include "gtutte/int_matrix.hpp"

namespace gtutte {

enum class RootSystemType { A, B, C, D, E6, E7, E8, F4, G2 };

RootSystemType root_system_type_from_string(const std::string& name);
std::string root_system_type_name(RootSystemType type);

/// Positive roots of an irreducible root system in simple-root coordinates
/// (the ambient lattice is the root lattice, Z^rank), together with the
/// classical constants.
struct RootSystemData {
  RootSystemType type;
  std::size_t rank;
  ElementList positive_roots;
  Int weyl_order;
  long coxeter_number;
  Int index_of_connection;
  Int period;

  /// C[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering.
  IntMatrix cartan_matrix() const;
};

/// Supported ranks: A <= 8, B/C 2..6, D 3..6, plus G2, F4, E6, E7, E8.
RootSystemData positive_roots(RootSystemType type, std::size_t rank);

}  // namespace gtutte
