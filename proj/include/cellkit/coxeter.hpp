#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cellkit/bitmatrix.hpp"
#include "cellkit/errors.hpp"

namespace cellkit {

using Element = std::uint32_t;
using Generator = int;

enum class Side { Left, Right, TwoSided };

/// Subset of the generating set S, as a bitset over generator indices.
class GenSet {
public:
  GenSet() = default;
  explicit GenSet(std::uint32_t bits) : bits_(bits) {}
  static GenSet single(Generator s) { return GenSet(std::uint32_t(1) << s); }
  static GenSet pair(Generator s, Generator t) { return single(s) | single(t); }
  static GenSet full(int rank) {
    return GenSet(rank >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << rank) - 1);
  }

  bool contains(Generator s) const { return (bits_ >> s) & 1u; }
  void add(Generator s) { bits_ |= std::uint32_t(1) << s; }
  void remove(Generator s) { bits_ &= ~(std::uint32_t(1) << s); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  std::uint32_t bits() const { return bits_; }
  bool subset_of(GenSet other) const { return (bits_ & ~other.bits_) == 0; }

  GenSet operator|(GenSet o) const { return GenSet(bits_ | o.bits_); }
  GenSet operator&(GenSet o) const { return GenSet(bits_ & o.bits_); }
  bool operator==(const GenSet&) const = default;
  auto operator<=>(const GenSet&) const = default;

  /// Members in increasing order.
  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (Generator s = 0; s < 32; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

private:
  std::uint32_t bits_ = 0;
};

/// Coxeter matrix: symmetric, m[s][s] = 1, off-diagonal entries >= 2 or the
/// infinity marker 0.
struct CoxeterMatrix {
  static constexpr int infinity = 0;

  int rank = 0;
  std::vector<std::vector<int>> m;

  static CoxeterMatrix from_entries(std::vector<std::vector<int>> entries);
  /// Throws InvalidMatrix on violation of shape or symmetry constraints.
  void validate() const;

  int order(Generator s, Generator t) const { return m[s][t]; }
  bool operator==(const CoxeterMatrix&) const = default;
};

/// Named preset ("A3", "B4", "D4", "F4", "H3", "H4", "G2", "I2(7)", "I2:7").
CoxeterMatrix preset_matrix(const std::string& name);

/// A finite Coxeter group, fully enumerated.
///
/// Elements are interned integer ids; id 0 is the identity and ids are sorted
/// by (length, ShortLex canonical word). Enumeration for rank >= 3 runs over
/// the reflection permutation action on the root system, realized in exact
/// integer arithmetic over Z[2cos(pi/L)]; rank <= 2 groups use closed-form
/// dihedral tables. Construction throws GroupTooLarge when the element count
/// (or the implied root count) exceeds the cap.
///
/// Immutable after construction; safe to share across concurrent readers.
class CoxeterSystem {
public:
  static constexpr Element identity = 0;
  static constexpr std::size_t default_cap = 20000;

  explicit CoxeterSystem(CoxeterMatrix matrix, std::size_t cap = default_cap);

  int rank() const { return matrix_.rank; }
  std::size_t order() const { return length_.size(); }
  const CoxeterMatrix& matrix() const { return matrix_; }

  unsigned length(Element w) const { return length_[w]; }
  Element left_mult(Generator s, Element w) const { return left_[w * rank_ + s]; }
  Element right_mult(Element w, Generator s) const { return right_[w * rank_ + s]; }
  Element product(Element w, Element x) const;
  Element inverse(Element w) const { return inverse_[w]; }
  Element longest_element() const { return Element(order() - 1); }

  /// Canonical (ShortLex-minimal) reduced word.
  std::vector<Generator> word(Element w) const;
  Element element_from_word(const std::vector<Generator>& word) const;

  GenSet right_descents(Element w) const;
  GenSet left_descents(Element w) const;
  GenSet descents(Element w, Side side) const;

  /// Bruhat-Chevalley order, via the precomputed lifting table.
  bool bruhat_leq(Element x, Element y) const { return bruhat_.get(y, x); }

  /// w = x*u with u in W_I and x the minimal coset representative (x in X_I);
  /// returns (x, u), both as elements of this group.
  std::pair<Element, Element> parabolic_decompose(Element w, GenSet I) const;
  /// The W_I-component u of w = x*u.
  Element pr(Element w, GenSet I) const { return parabolic_decompose(w, I).second; }

  /// Rendering: "e" for the identity, otherwise "s1 s2 s1".
  std::string name(Element w) const;
  /// Dihedral label "1_k"/"2_k" (rank-2 groups only).
  std::string dihedral_label(Element w) const;
  /// Parses "e", "s1 s2", "1 2", or (rank 2) "1_3"/"2_3".
  Element parse_element(const std::string& text) const;

private:
  CoxeterMatrix matrix_;
  int rank_;
  std::vector<unsigned> length_;
  std::vector<Element> left_, right_;   // element*rank + s
  std::vector<Element> inverse_;
  std::vector<Element> parent_;         // w = parent_[w] * last_[w]
  std::vector<Generator> last_;
  BitMatrix bruhat_;                    // bruhat_.get(y, x) <=> x <= y

  void enumerate_dihedral(std::size_t cap);
  void enumerate_generic(std::size_t cap);
  void finish_tables();  // inverse_, bruhat_ (needs length_/left_/right_/parent_)
};

/// A standard parabolic subgroup W_I together with element maps in both
/// directions. The embedded system uses generator j for the j-th smallest
/// member of I.
class ParabolicSubgroup {
public:
  ParabolicSubgroup(const CoxeterSystem& parent, GenSet I);

  const CoxeterSystem& group() const { return sub_; }
  const CoxeterSystem& parent() const { return parent_; }
  GenSet generators() const { return I_; }

  Element to_parent(Element u) const { return to_parent_[u]; }
  /// Precondition: w lies in W_I.
  Element from_parent(Element w) const;
  bool contains_parent(Element w) const { return from_parent_.count(w) != 0; }

private:
  const CoxeterSystem& parent_;
  GenSet I_;
  CoxeterSystem sub_;
  std::vector<Element> to_parent_;
  std::unordered_map<Element, Element> from_parent_;
};

}  // namespace cellkit
