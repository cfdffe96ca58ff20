#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellkit/bitmatrix.hpp"
#include "cellkit/hecke.hpp"

namespace cellkit {

/// Partition of W into cells: the strongly connected components of the
/// elementary relation x <-_L y (h_{s,y,x} != 0 for some s), its inverse
/// transport for right cells, or the union for two-sided cells. Blocks are
/// numbered by their minimal element in the global order.
struct CellPartition {
  Side side = Side::Left;
  std::vector<std::vector<Element>> blocks;  // each ascending
  std::vector<int> block_of;
  BitMatrix reach;                           // reach.get(b, a) <=> a <= b
  std::vector<std::pair<int, int>> edges;    // condensation edges (from, to)

  int block_count() const { return int(blocks.size()); }
  /// a <= b in the induced partial order on blocks.
  bool leq_blocks(int a, int b) const { return reach.get(b, a); }
  bool same_block(Element x, Element y) const { return block_of[x] == block_of[y]; }
};

CellPartition left_cells(KLTable& kl);
CellPartition right_cells(KLTable& kl);
CellPartition two_sided_cells(KLTable& kl);

/// Right descent set R(w).
GenSet r_set(const CoxeterSystem& W, Element w);

/// Enhanced right descent set: R(w) plus the pairs {s,t} with st != ts,
/// p_s < p_t and w*sts < w. Pairs are recorded as (s, t) with p_s < p_t.
struct EnhancedDescentSet {
  GenSet descents;
  std::vector<std::pair<Generator, Generator>> pairs;  // sorted

  bool operator==(const EnhancedDescentSet&) const = default;
  auto operator<=>(const EnhancedDescentSet&) const = default;
  std::string to_string() const;
};

EnhancedDescentSet r_pi_set(const CoxeterSystem& W, const WeightFunction& p, Element w);

/// Whether gamma is closed under Bruhat-type intervals of <=_L: for x,y in
/// gamma every z with x <=_L z <=_L y lies in gamma.
bool check_closed(const CellPartition& left, const std::vector<Element>& gamma);

/// Matrices of the generators acting on the quotient module of a closed set:
/// C'_s e_x = sum_y h_{s,x,y} e_y restricted to gamma; entry (y, x) of
/// action[s] is h_{s,x,y}.
struct CellModule {
  std::vector<Element> basis;
  std::vector<std::vector<std::vector<LaurentPoly>>> action;  // per generator
};

CellModule cell_module(KLTable& kl, const CellPartition& left, std::vector<Element> gamma,
                       std::optional<std::vector<Element>> basis_order = std::nullopt);

/// Exhaustive check of cell induction from the parabolic subgroup W_I:
/// (a) w ~_L w' in W implies pr_I(w) ~_{L,I} pr_I(w'), and (b) X_I * Gamma'
/// is a union of left cells of W for every left cell Gamma' of W_I.
struct InductionReport {
  bool ok = true;
  std::vector<std::string> violations;
};

InductionReport induction_check(KLTable& kl, GenSet I);

}  // namespace cellkit
