#pragma once

#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cellkit/coxeter.hpp"
#include "cellkit/laurent.hpp"

namespace cellkit {

/// Positive integer weight per generator, constant on conjugacy classes of
/// generators (equivalently on the connected components of the odd-bond
/// graph on S).
struct WeightFunction {
  std::vector<int> p;

  int operator[](Generator s) const { return p[s]; }
  bool equal_parameters() const;
};

/// Throws NonPositiveWeight / ConjugacyViolation on invalid input.
WeightFunction validate_weights(const CoxeterSystem& W, const std::vector<int>& raw);

/// Finitely supported element of the Hecke algebra in T-basis coordinates.
using TCoeffs = std::map<Element, LaurentPoly>;

/// T_s * T_w by the quadratic relation.
TCoeffs t_mult(const CoxeterSystem& W, const WeightFunction& p, Generator s, Element w);
/// T_s * xi for a general T-basis vector.
TCoeffs t_mult(const CoxeterSystem& W, const WeightFunction& p, Generator s, const TCoeffs& xi);

/// The semilinear bar involution on T-basis coordinates, computed from
/// bar(T_s) = T_s^{-1} = T_s - (v^{p_s} - v^{-p_s}) T_1 alone. This is the
/// certification oracle for bar-invariance of the canonical basis; it is
/// independent of the KLTable recursion.
TCoeffs bar_on_T(const CoxeterSystem& W, const WeightFunction& p, const TCoeffs& xi);

/// Which left descent drives the recursion C'_w = C'_s C'_{sw} - corrections.
/// The computed values do not depend on the choice (tested); exposing it
/// makes that property checkable.
enum class DescentChoice { SmallestLeft, LargestLeft };

/*
  Memoized table of the canonical-basis data of the Iwahori-Hecke algebra of
  (W, S) with weights {p_s}:

    - kl_p(y, w): the coefficient of T_y in C'_w. It is 1 for y = w, zero
      unless y <= w, and lies in v^{-1}Z[v^{-1}] for y < w.
    - m_poly(s, z, y): for sz < z < y < sy, the unique bar-invariant
      M^s_{z,y} congruent to
        v^{p_s} p_{z,y} - sum_{z < z' < y, sz' < z'} p_{z,z'} M^s_{z',y}
      modulo strictly negative powers of v.
    - h_left(s, y): the structure constants h_{s,y,x} of
      C'_s C'_y = sum_x h_{s,y,x} C'_x, i.e. (v^{p_s} + v^{-p_s}) C'_y when
      sy < y, and C'_{sy} + sum M^s_{z,y} C'_z when sy > y.

  Rows are built in increasing element order; distinct polynomials are pooled
  so repeated values are stored once. fill() completes the whole table (the
  M-rows optionally in parallel) after which the table is frozen and queries
  are safe from concurrent readers.
*/
class KLTable {
public:
  using CRow = std::vector<std::pair<Element, std::uint32_t>>;   // (x, poly id)
  using MuRow = std::vector<std::pair<Element, LaurentPoly>>;    // nonzero M only
  using HRow = std::vector<std::pair<Element, LaurentPoly>>;     // (x, h_{s,y,x})

  KLTable(const CoxeterSystem& W, WeightFunction p,
          DescentChoice choice = DescentChoice::SmallestLeft);

  const CoxeterSystem& group() const { return W_; }
  const WeightFunction& weights() const { return p_; }

  const LaurentPoly& kl_p(Element y, Element w);
  /// Preconditions sz < z < y and sy > y (throws PreconditionViolated).
  const LaurentPoly& m_poly(Generator s, Element z, Element y);
  /// All z with M^s_{z,y} != 0, ascending; precondition sy > y.
  const MuRow& mu_row(Generator s, Element y);
  HRow h_left(Generator s, Element y);
  /// Right-handed structure constants via x <=_R y iff x^{-1} <=_L y^{-1}.
  HRow h_right(Generator s, Element y);
  /// The T-coordinates of C'_w, ascending in x.
  std::vector<std::pair<Element, LaurentPoly>> c_row(Element w);

  /// Completes every p-row and every M-row; jobs > 1 parallelizes the M-rows.
  void fill(unsigned jobs = 1);
  bool frozen() const { return frozen_; }

  const LaurentPoly& pool_poly(std::uint32_t id) const { return pool_[id]; }

private:
  const CoxeterSystem& W_;
  WeightFunction p_;
  DescentChoice choice_;

  std::vector<LaurentPoly> pool_;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> pool_buckets_;
  std::vector<CRow> rows_;
  Element rows_filled_ = 0;
  std::vector<std::unique_ptr<MuRow>> mu_;  // index s * |W| + y
  bool frozen_ = false;

  // scratch for row construction
  std::vector<LaurentPoly> dense_;
  std::vector<Element> touched_;

  std::uint32_t intern(LaurentPoly f);
  void ensure_rows(Element w);
  void build_row(Element w);
  const MuRow& mu_row_impl(Generator s, Element y);
  MuRow compute_mu_row(Generator s, Element y) const;
  const LaurentPoly& row_lookup(Element w, Element x) const;
};

}  // namespace cellkit
