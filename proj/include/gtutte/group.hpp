#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gtutte/int_matrix.hpp"
#include "gtutte/smith.hpp"

namespace gtutte {

/// A finitely generated abelian group presented as Z^m / <relation columns>.
/// The presentation is kept verbatim; canonical invariants (free rank and
/// invariant factors > 1) are computed once at construction. Two groups are
/// abstractly isomorphic iff their canonical data agree.
class FgGroup {
 public:
  FgGroup(std::size_t ambient_rank, IntMatrix relations);

  static FgGroup free_abelian(std::size_t rank) {
    return FgGroup(rank, IntMatrix(rank, 0));
  }

  std::size_t ambient_rank() const { return ambient_rank_; }
  const IntMatrix& relations() const { return relations_; }

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion_factors() const { return torsion_factors_; }
  bool is_torsion_free() const { return torsion_factors_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Order of the torsion part.
  Int torsion_order() const;

  bool isomorphic_to(const FgGroup& other) const {
    return free_rank_ == other.free_rank_ &&
           torsion_factors_ == other.torsion_factors_;
  }

  /// Z^m / <relations + extra columns>.
  FgGroup quotient_by(const std::vector<std::vector<Int>>& extra_columns) const;

 private:
  std::size_t ambient_rank_;
  IntMatrix relations_;
  std::size_t free_rank_;
  std::vector<Int> torsion_factors_;
};

/// An indexed multiset of elements of an FgGroup, stored as integer lifts
/// in Z^m (one column each). Duplicate columns are distinct list members.
class ElementList {
 public:
  ElementList(FgGroup group, IntMatrix lifts,
              std::vector<std::string> labels = {});

  const FgGroup& group() const { return group_; }
  const IntMatrix& lifts() const { return lifts_; }
  std::size_t size() const { return lifts_.cols(); }
  std::vector<Int> lift(std::size_t i) const { return lifts_.column(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  ElementList sublist(const std::vector<std::size_t>& indices) const;
  ElementList without(std::size_t index) const;

 private:
  FgGroup group_;
  IntMatrix lifts_;
  std::vector<std::string> labels_;
};

/// Quotient of the ambient group by the span of the indexed sublist.
FgGroup quotient(const ElementList& list,
                 const std::vector<std::size_t>& sublist);

/// r_S = rank of the subgroup generated by the sublist.
std::size_t sublist_rank(const ElementList& list,
                         const std::vector<std::size_t>& sublist);

std::size_t list_rank(const ElementList& list);

bool is_loop(const ElementList& list, std::size_t index);
bool is_coloop(const ElementList& list, std::size_t index);
bool is_proper(const ElementList& list, std::size_t index);

/// Contraction A/S: the remaining elements viewed in the quotient group.
/// Lift columns are unchanged (the ambient Z^m survives the quotient);
/// labels follow the surviving indices.
ElementList contraction(const ElementList& list,
                        const std::vector<std::size_t>& sublist);

/// The dual pair (Gamma^dagger, A^dagger) built from the stored
/// presentation: Z^{n+h} modulo the transpose of [lifts | relations],
/// with the images of the first n basis vectors as the dual list.
std::pair<FgGroup, ElementList> dual_construction(const ElementList& list);

}  // namespace gtutte
