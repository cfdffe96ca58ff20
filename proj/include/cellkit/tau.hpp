#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "cellkit/cells.hpp"

namespace cellkit {

/// Membership in D_R(s,t) = {w : R(w) meets {s,t} in exactly one element}.
/// Requires st != ts (order >= 3).
bool in_dr(const CoxeterSystem& W, Element w, Generator s, Generator t);

/// The Vogan operator {ws, wt} intersected with D_R(s,t), as a multiset of
/// exactly two elements (duplicated when the intersection is a singleton);
/// returned sorted. Throws NotInDomain when w is outside D_R(s,t).
std::array<Element, 2> t_operator(const CoxeterSystem& W, Element w, Generator s, Generator t);

/// The string through w relative to {s,t} and w's 1-based position in it.
/// For w = x*u (x minimal in the coset w*W_I) the strings of the coset are
/// (xs, xst, xsts, ...) and (xt, xts, xtst, ...), each of m-1 elements.
struct StringPosition {
  std::vector<Element> items;
  int index = 0;
};
StringPosition string_of(const CoxeterSystem& W, Element w, Generator s, Generator t);

/// Full coset decomposition relative to {s,t}: minimal and maximal coset
/// elements plus the two strings.
struct CosetStrings {
  Element min = 0, max = 0;
  std::vector<Element> first, second;  // first starts with s, second with t
};
std::vector<CosetStrings> string_decomposition(const CoxeterSystem& W, Generator s, Generator t);

/// The star involution (order-3 pairs only): the unique other endpoint of
/// the Vogan operator. Throws WrongOrder if m_st != 3.
Element star(const CoxeterSystem& W, Element w, Generator s, Generator t);

/// The string involution: position i goes to position m-i in its string.
Element tilde(const CoxeterSystem& W, Element w, Generator s, Generator t);

enum class DeltaFamily { EqualWeightDihedral, UnequalWeightDihedral, Custom };

/// Dihedral parabolic context shared by a candidate pair: the subgroup, its
/// restricted weights, KL table and cell partitions.
struct SubgroupContext {
  ParabolicSubgroup par;
  WeightFunction weights;
  KLTable kl;
  CellPartition left, right;

  SubgroupContext(const CoxeterSystem& W, const WeightFunction& p, GenSet I);
};

/// A candidate pair (I, delta): a self-map of W_I given as a table over the
/// subgroup's element ids. Flags are set only by verify_admissible.
struct AdmissiblePair {
  GenSet I;
  std::shared_ptr<SubgroupContext> ctx;
  std::vector<Element> delta;
  DeltaFamily family = DeltaFamily::Custom;
  bool admissible = false;
  bool strongly_admissible = false;
};

/// The involution fixing the coset extremes and sending the k-th alternating
/// word to the (m-k)-th on each side; defined for equal weights on the pair.
AdmissiblePair delta_geq3(const CoxeterSystem& W, const WeightFunction& p, GenSet I);
/// The unequal-weight involution for even m >= 4: fixes 1_0, 1_1, 2_{m-1},
/// 2_m and swaps 2_1<->2_2, 1_2<->1_3, 2_3<->2_4, ... (with 1_k starting at
/// the smaller-weight generator).
AdmissiblePair delta_pi(const CoxeterSystem& W, const WeightFunction& p, GenSet I);
/// Arbitrary candidate table (for negative tests and experiments).
AdmissiblePair custom_pair(const CoxeterSystem& W, const WeightFunction& p, GenSet I,
                           std::vector<Element> delta);

/// Machine verification of the admissibility conditions, per left cell of
/// W_I: (1) delta restricts to a bijection onto a left cell, (2) relabelling
/// the basis by delta preserves every generator action matrix, and, when
/// strong is requested, (3) u and delta(u) share a right cell for all u.
struct AdmissibilityReport {
  struct CellVerdict {
    int cell = 0;
    bool bijective_onto_cell = false;
    bool module_isomorphism = false;
  };
  std::vector<CellVerdict> cells;
  bool cond1 = true, cond2 = true, cond3 = true;
  bool strong_checked = false;
  bool admissible() const { return cond1 && cond2; }
};
AdmissibilityReport verify_admissible(AdmissiblePair& pair, bool strong);

/// The canonical extension of delta to all of W: w = xu maps to x*delta(u).
/// Requires a verified pair.
std::vector<Element> extend_delta(const AdmissiblePair& pair);

enum class LambdaConvention { RPi, LeftCellsOfWI };

struct TauPartition {
  std::vector<std::vector<Element>> classes;  // ordered by minimal element
  std::vector<int> class_of;
  int rounds = 0;                  // refinement passes that produced a split
  std::vector<int> class_counts;   // per round, starting with round 0

  int class_count() const { return int(classes.size()); }
  bool same_class(Element x, Element y) const { return class_of[x] == class_of[y]; }
};

/// Vogan's partition: round 0 groups by the right descent set, later rounds
/// match the operator multisets over pairs with m_st in {3, 4}. Requires
/// equal parameters.
TauPartition vogan_tau_partition(const CoxeterSystem& W, const WeightFunction& p);

/// The partition refined by the extensions of a collection of verified
/// admissible pairs, colored at round 0 by the Lambda_I classes of pr_I.
TauPartition tau_delta_partition(const CoxeterSystem& W, const WeightFunction& p,
                                 const std::vector<AdmissiblePair>& delta,
                                 LambdaConvention lambda = LambdaConvention::RPi);

/// All qualifying pairs: equal-weight pairs of order >= 3 and unequal-weight
/// pairs of even order >= 4.
std::vector<AdmissiblePair> default_delta_collection(const CoxeterSystem& W,
                                                     const WeightFunction& p);

/// Checks whether two-sided cell membership together with the invariant
/// partition of default_delta_collection characterises the left cells.
struct ConjectureReport {
  bool holds = false;
  std::optional<std::pair<Element, Element>> witness;  // same class, different left cells
  int left_cell_count = 0, two_sided_count = 0, tau_class_count = 0, meet_class_count = 0;
  TauPartition tau;
  std::vector<AdmissiblePair> pairs;
};
ConjectureReport conjecture_check(KLTable& kl, unsigned jobs = 1);

}  // namespace cellkit
