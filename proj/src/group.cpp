#include "gtutte/group.hpp"

#include <algorithm>

#include "gtutte/errors.hpp"

namespace gtutte {

FgGroup::FgGroup(std::size_t ambient_rank, IntMatrix relations)
    : ambient_rank_(ambient_rank), relations_(std::move(relations)) {
  if (relations_.cols() == 0) relations_ = IntMatrix(ambient_rank, 0);
  if (relations_.rows() != ambient_rank)
    throw DimensionMismatch("relation columns must have ambient_rank entries");
  SmithForm snf = smith_normal_form(relations_);
  free_rank_ = ambient_rank_ - snf.rank();
  for (const Int& d : snf.invariant_factors)
    if (d > 1) torsion_factors_.push_back(d);
}

Int FgGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : torsion_factors_) n *= d;
  return n;
}

FgGroup FgGroup::quotient_by(
    const std::vector<std::vector<Int>>& extra_columns) const {
  for (const auto& c : extra_columns)
    if (c.size() != ambient_rank_)
      throw DimensionMismatch("quotient column has wrong length");
  return FgGroup(ambient_rank_, relations_.with_columns(extra_columns));
}

ElementList::ElementList(FgGroup group, IntMatrix lifts,
                         std::vector<std::string> labels)
    : group_(std::move(group)),
      lifts_(std::move(lifts)),
      labels_(std::move(labels)) {
  if (lifts_.cols() == 0) lifts_ = IntMatrix(group_.ambient_rank(), 0);
  if (lifts_.rows() != group_.ambient_rank())
    throw DimensionMismatch("element lifts must have ambient_rank entries");
  if (!labels_.empty() && labels_.size() != lifts_.cols())
    throw DimensionMismatch("label count differs from list length");
  if (labels_.empty())
    for (std::size_t i = 0; i < lifts_.cols(); ++i)
      labels_.push_back("e" + std::to_string(i + 1));
}

ElementList ElementList::sublist(const std::vector<std::size_t>& indices) const {
  std::vector<std::string> labels;
  if (!labels_.empty())
    for (std::size_t i : indices) labels.push_back(labels_[i]);
  return ElementList(group_, lifts_.select_columns(indices), std::move(labels));
}

ElementList ElementList::without(std::size_t index) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != index) keep.push_back(i);
  return sublist(keep);
}

FgGroup quotient(const ElementList& list,
                 const std::vector<std::size_t>& sublist) {
  std::vector<std::vector<Int>> cols;
  cols.reserve(sublist.size());
  for (std::size_t i : sublist) cols.push_back(list.lift(i));
  return list.group().quotient_by(cols);
}

std::size_t sublist_rank(const ElementList& list,
                         const std::vector<std::size_t>& sublist) {
  return list.group().free_rank() - quotient(list, sublist).free_rank();
}

std::size_t list_rank(const ElementList& list) {
  std::vector<std::size_t> all(list.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return sublist_rank(list, all);
}

bool is_loop(const ElementList& list, std::size_t index) {
  return sublist_rank(list, {index}) == 0;
}

bool is_coloop(const ElementList& list, std::size_t index) {
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (i != index) rest.push_back(i);
  return list_rank(list) == sublist_rank(list, rest) + 1;
}

bool is_proper(const ElementList& list, std::size_t index) {
  return !is_loop(list, index) && !is_coloop(list, index);
}

ElementList contraction(const ElementList& list,
                        const std::vector<std::size_t>& sublist) {
  FgGroup q = quotient(list, sublist);
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < list.size(); ++i)
    if (std::find(sublist.begin(), sublist.end(), i) == sublist.end())
      rest.push_back(i);
  std::vector<std::string> labels;
  if (!list.labels().empty())
    for (std::size_t i : rest) labels.push_back(list.labels()[i]);
  return ElementList(std::move(q), list.lifts().select_columns(rest),
                     std::move(labels));
}

std::pair<FgGroup, ElementList> dual_construction(const ElementList& list) {
  const std::size_t n = list.size();
  const std::size_t h = list.group().relations().cols();
  const std::size_t m = list.group().ambient_rank();
  // (n+h) x m matrix whose rows are the lifts followed by the relators
  IntMatrix rel(n + h, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      rel.at(i, j) = list.lifts().at(j, i);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < m; ++j)
      rel.at(n + i, j) = list.group().relations().at(j, i);
  FgGroup dual_group(n + h, std::move(rel));
  IntMatrix dual_lifts(n + h, n);
  for (std::size_t i = 0; i < n; ++i) dual_lifts.at(i, i) = 1;
  ElementList dual_list(dual_group, std::move(dual_lifts), list.labels());
  return {std::move(dual_group), std::move(dual_list)};
}

}  // namespace gtutte
