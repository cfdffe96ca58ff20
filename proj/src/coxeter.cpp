#include "cellkit/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "cellkit/laurent.hpp"  // for Int

namespace cellkit {

namespace {

/*
  Exact arithmetic for the reflection representation.

  The geometric representation of (W, S) acts on the span of the simple
  roots with s(a_t) = a_t + 2cos(pi/m_st) a_s for t != s. With L the lcm of
  the finite entries m_st >= 3, every coefficient 2cos(pi/m_st) lies in the
  ring Z[psi], psi = 2cos(pi/L): indeed 2cos(k*theta) = D_k(2cos theta)
  where D_k are the Dickson polynomials D_0 = 2, D_1 = x,
  D_{k+1} = x D_k - D_{k-1}. We represent elements of Z[psi] as integer
  vectors in the power basis modulo the minimal polynomial of psi, which is
  extracted from the cyclotomic polynomial Phi_{2L}(y) = y^m g(y + 1/y),
  m = phi(2L)/2. No floating point is involved anywhere.
*/

using ZPoly = std::vector<Int>;  // dense coefficients, ascending degree

ZPoly zpoly_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}


// Exact division of integer polynomials (remainder known to vanish; b monic).
ZPoly zpoly_divexact(ZPoly a, const ZPoly& b) {
  a = zpoly_trim(std::move(a));
  if (a.size() < b.size()) return {};
  ZPoly q(a.size() - b.size() + 1, Int(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Int c = a[k + b.size() - 1] / b.back();
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
    q[k] = std::move(c);
  }
  return q;
}

const ZPoly& cyclotomic(int n, std::map<int, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;  // y^n - 1
  for (int d = 1; d < n; ++d)
    if (n % d == 0) num = zpoly_divexact(std::move(num), cyclotomic(d, memo));
  return memo.emplace(n, zpoly_trim(std::move(num))).first->second;
}

// Minimal polynomial of 2cos(pi/L) over Z, monic; L >= 3.
ZPoly cos_minpoly(int L) {
  std::map<int, ZPoly> memo;
  const ZPoly& phi = cyclotomic(2 * L, memo);
  int m = int(phi.size() - 1) / 2;
  // g = r_0 + sum_{j>=1} r_j D_j with r_j the upper coefficients of Phi.
  ZPoly g(m + 1, Int(0));
  ZPoly dprev{Int(2)};        // D_0
  ZPoly dcur{Int(0), Int(1)};  // D_1
  g[0] += phi[m];
  for (int j = 1; j <= m; ++j) {
    const Int& r = phi[m + j];
    if (r != 0)
      for (std::size_t i = 0; i < dcur.size(); ++i) g[i] += r * dcur[i];
    // D_{j+1} = x D_j - D_{j-1}
    ZPoly dnext(dcur.size() + 1, Int(0));
    for (std::size_t i = 0; i < dcur.size(); ++i) dnext[i + 1] = dcur[i];
    for (std::size_t i = 0; i < dprev.size(); ++i) dnext[i] -= dprev[i];
    dprev = std::move(dcur);
    dcur = std::move(dnext);
  }
  assert(g.back() == 1);
  return g;
}

struct CosRing {
  int deg = 1;
  ZPoly minpoly;  // monic, size deg+1; unused when deg == 1

  using Elt = std::vector<Int>;  // size deg

  static CosRing make(int L) {
    CosRing r;
    if (L >= 3) {
      r.minpoly = cos_minpoly(L);
      r.deg = int(r.minpoly.size()) - 1;
    }
    return r;
  }

  Elt from_int(long long v) const {
    Elt e(deg, Int(0));
    e[0] = v;
    return e;
  }

  void reduce(std::vector<Int>& c) const {
    for (std::size_t i = c.size(); i-- > std::size_t(deg);) {
      Int lead = std::move(c[i]);
      c[i] = 0;
      if (lead != 0)
        for (int j = 0; j < deg; ++j) c[i - deg + j] -= lead * minpoly[j];
    }
    c.resize(deg);
  }

  Elt mul(const Elt& a, const Elt& b) const {
    std::vector<Int> c(2 * deg - 1, Int(0));
    for (int i = 0; i < deg; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < deg; ++j) c[i + j] += a[i] * b[j];
    }
    reduce(c);
    return c;
  }

  // 2cos(k*pi/L) as a ring element (L >= 3 so that psi is defined).
  Elt dickson(int k) const {
    Elt prev = from_int(2);
    if (k == 0) return prev;
    std::vector<Int> xc{Int(0), Int(1)};
    reduce(xc);  // psi itself, reduced (deg 1 collapses it to a constant)
    Elt x = xc, cur = xc;
    for (int i = 1; i < k; ++i) {
      Elt next = mul(x, cur);
      for (int j = 0; j < deg; ++j) next[j] -= prev[j];
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
};

struct VecHash {
  std::size_t operator()(const std::vector<std::int32_t>& v) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto x : v) h ^= std::size_t(std::uint32_t(x)) + 0x9e3779b9u + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

CoxeterMatrix CoxeterMatrix::from_entries(std::vector<std::vector<int>> entries) {
  CoxeterMatrix mat;
  mat.rank = int(entries.size());
  mat.m = std::move(entries);
  mat.validate();
  return mat;
}

void CoxeterMatrix::validate() const {
  if (rank < 1 || rank > 31) fail(ErrorCode::InvalidMatrix, "rank must be between 1 and 31");
  if (int(m.size()) != rank) fail(ErrorCode::InvalidMatrix, "matrix has wrong number of rows");
  for (int s = 0; s < rank; ++s) {
    if (int(m[s].size()) != rank) fail(ErrorCode::InvalidMatrix, "matrix row has wrong size");
    if (m[s][s] != 1) fail(ErrorCode::InvalidMatrix, "diagonal entries must be 1");
    for (int t = 0; t < rank; ++t) {
      if (t != s && m[s][t] != infinity && m[s][t] < 2)
        fail(ErrorCode::InvalidMatrix, "off-diagonal entries must be >= 2 (or 0 for infinity)");
      if (m[s][t] != m[t][s]) fail(ErrorCode::InvalidMatrix, "matrix must be symmetric");
    }
  }
}

namespace {

// Linear diagram: bonds lists (i, order) for the edge between i and i+1.
CoxeterMatrix chain_matrix(int n, const std::vector<std::pair<int, int>>& bonds) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (auto [i, order] : bonds) m[i][i + 1] = m[i + 1][i] = order;
  return CoxeterMatrix::from_entries(std::move(m));
}

}  // namespace

CoxeterMatrix preset_matrix(const std::string& name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorCode::ConfigError, "empty group name");

  char family = char(std::toupper(static_cast<unsigned char>(s[0])));
  if (family == 'G' && s == "G2") family = 'I', s = "I2(6)";

  if (family == 'I') {
    // "I2(m)" or "I2:m"
    std::size_t pos = s.find_first_of("(:");
    if (pos == std::string::npos || s.substr(0, pos) != "I2")
      fail(ErrorCode::ConfigError, "unknown group preset '" + name + "'");
    std::string num = s.substr(pos + 1);
    if (!num.empty() && num.back() == ')') num.pop_back();
    int m = 0;
    try {
      m = std::stoi(num);
    } catch (...) {
      fail(ErrorCode::ConfigError, "cannot parse dihedral order in '" + name + "'");
    }
    if (m < 2) fail(ErrorCode::ConfigError, "I2(m) needs m >= 2");
    std::vector<std::vector<int>> mat{{1, m}, {m, 1}};
    return CoxeterMatrix::from_entries(std::move(mat));
  }

  int n = 0;
  try {
    n = std::stoi(s.substr(1));
  } catch (...) {
    fail(ErrorCode::ConfigError, "unknown group preset '" + name + "'");
  }
  switch (family) {
    case 'A': {
      if (n < 1) fail(ErrorCode::ConfigError, "A_n needs n >= 1");
      std::vector<std::pair<int, int>> bonds;
      for (int i = 0; i + 1 < n; ++i) bonds.emplace_back(i, 3);
      return chain_matrix(n, bonds);
    }
    case 'B': {
      if (n < 2) fail(ErrorCode::ConfigError, "B_n needs n >= 2");
      std::vector<std::pair<int, int>> bonds{{0, 4}};
      for (int i = 1; i + 1 < n; ++i) bonds.emplace_back(i, 3);
      return chain_matrix(n, bonds);
    }
    case 'D': {
      if (n < 4) fail(ErrorCode::ConfigError, "D_n needs n >= 4");
      std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
      for (int i = 0; i < n; ++i) m[i][i] = 1;
      m[0][2] = m[2][0] = 3;
      m[1][2] = m[2][1] = 3;
      for (int i = 2; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
      return CoxeterMatrix::from_entries(std::move(m));
    }
    case 'F': {
      if (n != 4) fail(ErrorCode::ConfigError, "only F4 is defined");
      return chain_matrix(4, {{0, 3}, {1, 4}, {2, 3}});
    }
    case 'H': {
      if (n != 3 && n != 4) fail(ErrorCode::ConfigError, "only H3 and H4 are defined");
      std::vector<std::pair<int, int>> bonds{{0, 5}};
      for (int i = 1; i + 1 < n; ++i) bonds.emplace_back(i, 3);
      return chain_matrix(n, bonds);
    }
    default:
      fail(ErrorCode::ConfigError, "unknown group preset '" + name + "'");
  }
}

CoxeterSystem::CoxeterSystem(CoxeterMatrix matrix, std::size_t cap)
    : matrix_(std::move(matrix)), rank_(matrix_.rank) {
  matrix_.validate();
  if (cap < 1) fail(ErrorCode::PreconditionViolated, "cap must be positive");
  if (rank_ <= 2)
    enumerate_dihedral(cap);
  else
    enumerate_generic(cap);
  finish_tables();
}

void CoxeterSystem::enumerate_dihedral(std::size_t cap) {
  if (rank_ == 1) {
    if (cap < 2) fail(ErrorCode::GroupTooLarge, "rank-1 group exceeds cap");
    length_ = {0, 1};
    right_ = {1, 0};
    left_ = {1, 0};
    parent_ = {0, 0};
    last_ = {0, 0};
    return;
  }
  int m = matrix_.m[0][1];
  if (m == CoxeterMatrix::infinity)
    fail(ErrorCode::GroupTooLarge, "infinite dihedral group (m = infinity)");
  std::size_t order = 2 * std::size_t(m);
  if (order > cap) fail(ErrorCode::GroupTooLarge, "group order exceeds cap");

  // ids: e = 0; 1_k -> 2k-1, 2_k -> 2k for 1 <= k <= m-1; w0 = 2m-1.
  auto one_id = [&](int k) -> Element {
    return k == 0 ? 0 : (k == m ? Element(2 * m - 1) : Element(2 * k - 1));
  };
  auto two_id = [&](int k) -> Element {
    return k == 0 ? 0 : (k == m ? Element(2 * m - 1) : Element(2 * k));
  };

  length_.assign(order, 0);
  right_.assign(order * 2, 0);
  left_.assign(order * 2, 0);
  parent_.assign(order, 0);
  last_.assign(order, 0);

  for (int k = 1; k < m; ++k) {
    length_[one_id(k)] = unsigned(k);
    length_[two_id(k)] = unsigned(k);
    parent_[one_id(k)] = one_id(k - 1);
    last_[one_id(k)] = (k % 2 == 1) ? 0 : 1;
    parent_[two_id(k)] = two_id(k - 1);
    last_[two_id(k)] = (k % 2 == 1) ? 1 : 0;
  }
  length_[2 * m - 1] = unsigned(m);
  parent_[2 * m - 1] = one_id(m - 1);  // canonical word of w0 starts with s1
  last_[2 * m - 1] = (m % 2 == 1) ? 0 : 1;

  auto set_right = [&](Element w, Generator s, Element r) { right_[w * 2 + s] = r; };
  auto set_left = [&](Generator s, Element w, Element r) { left_[w * 2 + s] = r; };

  set_right(0, 0, one_id(1));
  set_right(0, 1, two_id(1));
  set_left(0, 0, one_id(1));
  set_left(1, 0, two_id(1));
  for (int k = 1; k < m; ++k) {
    Generator last1 = (k % 2 == 1) ? 0 : 1;  // last letter of 1_k
    set_right(one_id(k), last1, one_id(k - 1));
    set_right(one_id(k), 1 - last1, one_id(k + 1));
    set_right(two_id(k), 1 - last1, two_id(k - 1));  // last letter of 2_k mirrors
    set_right(two_id(k), last1, two_id(k + 1));
    // prepending: s1 * 1_k = 2_{k-1}, s2 * 1_k = 2_{k+1}, and mirrored
    set_left(0, one_id(k), two_id(k - 1));
    set_left(1, one_id(k), two_id(k + 1));
    set_left(1, two_id(k), one_id(k - 1));
    set_left(0, two_id(k), one_id(k + 1));
  }
  Element w0 = Element(2 * m - 1);
  Generator end1 = (m % 2 == 1) ? 0 : 1;  // last letter of the word 1_m
  set_right(w0, end1, one_id(m - 1));
  set_right(w0, 1 - end1, two_id(m - 1));
  set_left(0, w0, two_id(m - 1));
  set_left(1, w0, one_id(m - 1));
}

void CoxeterSystem::enumerate_generic(std::size_t cap) {
  const int n = rank_;
  int L = 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) {
      int m = matrix_.m[s][t];
      if (m >= 3) L = std::lcm(L, m);
    }
  CosRing ring = CosRing::make(L);
  const int d = ring.deg;

  // Reflection coefficients c[s][t] = 2cos(pi/m_st); 0 for m=2, 2 for infinity.
  std::vector<CosRing::Elt> coef(std::size_t(n) * n, ring.from_int(0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      int m = matrix_.m[s][t];
      if (m == CoxeterMatrix::infinity)
        coef[s * n + t] = ring.from_int(2);
      else if (m >= 3)
        coef[s * n + t] = ring.dickson(L / m);
    }

  // Positive root closure. A root is a vector of n ring elements, flattened.
  using RootVec = std::vector<Int>;
  std::vector<RootVec> roots;
  std::map<RootVec, std::int32_t> root_index;
  for (int i = 0; i < n; ++i) {
    RootVec r(std::size_t(n) * d, Int(0));
    r[std::size_t(i) * d] = 1;
    root_index.emplace(r, std::int32_t(roots.size()));
    roots.push_back(std::move(r));
  }
  auto reflect = [&](Generator s, const RootVec& r) {
    RootVec out = r;
    // only the a_s coordinate changes: b_s -> -b_s + sum_{t != s} c_st b_t
    std::vector<Int> acc(d, Int(0));
    for (int j = 0; j < d; ++j) acc[j] = -r[std::size_t(s) * d + j];
    for (int t = 0; t < n; ++t) {
      if (t == s) continue;
      const CosRing::Elt& c = coef[std::size_t(s) * n + t];
      bool zero = true;
      for (int j = 0; j < d; ++j)
        if (c[j] != 0) zero = false;
      if (zero) continue;
      CosRing::Elt bt(r.begin() + std::size_t(t) * d, r.begin() + std::size_t(t + 1) * d);
      CosRing::Elt prod = ring.mul(c, bt);
      for (int j = 0; j < d; ++j) acc[j] += prod[j];
    }
    for (int j = 0; j < d; ++j) out[std::size_t(s) * d + j] = std::move(acc[j]);
    return out;
  };
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (Generator s = 0; s < n; ++s) {
      if (i == std::size_t(s)) continue;  // s(a_s) = -a_s
      RootVec img = reflect(s, roots[i]);
      if (root_index.emplace(img, std::int32_t(roots.size())).second) {
        roots.push_back(std::move(img));
        if (roots.size() >= cap)
          fail(ErrorCode::GroupTooLarge,
               "root system exceeds cap; the group is infinite or too large");
      }
    }
  }
  const std::int32_t npos = std::int32_t(roots.size());

  // Generator permutations on all 2*npos roots (i+npos is the negative of i).
  std::vector<std::vector<std::int32_t>> sperm(n, std::vector<std::int32_t>(2 * npos));
  for (Generator s = 0; s < n; ++s) {
    for (std::int32_t i = 0; i < npos; ++i) {
      std::int32_t j;
      if (i == s) {
        j = i + npos;
      } else {
        auto it = root_index.find(reflect(s, roots[i]));
        assert(it != root_index.end());
        j = it->second;
      }
      sperm[s][i] = j;
      sperm[s][i + npos] = j < npos ? j + npos : j - npos;
    }
  }
  roots.clear();
  root_index.clear();

  // Breadth-first enumeration over the permutation action. An element is
  // keyed by the images of the simple roots; processing elements in id order
  // with ascending generators makes ids and stored words (length, ShortLex)
  // canonical. Full permutations are kept per level only.
  using Key = std::vector<std::int32_t>;
  std::unordered_map<Key, Element, VecHash> id_of;
  std::vector<std::vector<std::int32_t>> level, next;

  std::vector<std::int32_t> ident(2 * npos);
  std::iota(ident.begin(), ident.end(), 0);
  id_of.emplace(Key(ident.begin(), ident.begin() + n), 0);
  level.push_back(std::move(ident));
  length_.push_back(0);
  parent_.push_back(0);
  last_.push_back(0);

  Element processed = 0;
  unsigned cur_len = 0;
  while (!level.empty()) {
    Element level_start = processed;
    for (std::size_t li = 0; li < level.size(); ++li, ++processed) {
      const auto& perm = level[li];
      Key key(n);
      for (Generator s = 0; s < n; ++s) {
        for (int i = 0; i < n; ++i) key[i] = perm[sperm[s][i]];
        auto [it, inserted] = id_of.emplace(key, Element(length_.size()));
        if (inserted) {
          if (length_.size() >= cap)
            fail(ErrorCode::GroupTooLarge, "group order exceeds cap");
          std::vector<std::int32_t> full(2 * npos);
          for (std::int32_t i = 0; i < 2 * npos; ++i) full[i] = perm[sperm[s][i]];
          next.push_back(std::move(full));
          length_.push_back(cur_len + 1);
          parent_.push_back(level_start + Element(li));
          last_.push_back(s);
        }
        right_.push_back(it->second);
      }
    }
    level = std::move(next);
    next.clear();
    ++cur_len;
  }
  assert(right_.size() == length_.size() * std::size_t(n));
}

void CoxeterSystem::finish_tables() {
  const std::size_t order = length_.size();
  // inverse: fold the reversed canonical word (= the parent-climb letters).
  inverse_.assign(order, 0);
  for (Element w = 1; w < order; ++w) {
    Element cur = 0;
    for (Element x = w; x != 0; x = parent_[x]) cur = right_mult(cur, last_[x]);
    inverse_[w] = cur;
  }
  // left multiplication via s*w = (w^{-1} * s)^{-1} (generic path only).
  if (left_.empty()) {
    left_.assign(order * rank_, 0);
    for (Element w = 0; w < order; ++w)
      for (Generator s = 0; s < rank_; ++s)
        left_[w * rank_ + s] = inverse_[right_mult(inverse_[w], s)];
  }
  // Bruhat order by the lifting recursion on the smallest left descent.
  bruhat_ = BitMatrix(order);
  bruhat_.set(0, 0);
  for (Element y = 1; y < order; ++y) {
    Generator s = 0;
    while (length(left_mult(s, y)) > length(y)) ++s;
    Element sy = left_mult(s, y);
    for (Element x = 0; x < order; ++x) {
      Element sx = left_mult(s, x);
      bool le = length(sx) < length(x) ? bruhat_.get(sy, sx) : bruhat_.get(sy, x);
      if (le) bruhat_.set(y, x);
    }
  }
}

Element CoxeterSystem::product(Element w, Element x) const {
  for (Generator s : word(x)) w = right_mult(w, s);
  return w;
}

std::vector<Generator> CoxeterSystem::word(Element w) const {
  std::vector<Generator> out;
  for (Element x = w; x != 0; x = parent_[x]) out.push_back(last_[x]);
  std::reverse(out.begin(), out.end());
  return out;
}

Element CoxeterSystem::element_from_word(const std::vector<Generator>& word) const {
  Element w = 0;
  for (Generator s : word) {
    if (s < 0 || s >= rank_) fail(ErrorCode::ConfigError, "generator index out of range");
    w = right_mult(w, s);
  }
  return w;
}

GenSet CoxeterSystem::right_descents(Element w) const {
  GenSet out;
  for (Generator s = 0; s < rank_; ++s)
    if (length(right_mult(w, s)) < length(w)) out.add(s);
  return out;
}

GenSet CoxeterSystem::left_descents(Element w) const {
  GenSet out;
  for (Generator s = 0; s < rank_; ++s)
    if (length(left_mult(s, w)) < length(w)) out.add(s);
  return out;
}

GenSet CoxeterSystem::descents(Element w, Side side) const {
  if (side == Side::TwoSided)
    fail(ErrorCode::PreconditionViolated, "descent sets are one-sided");
  return side == Side::Left ? left_descents(w) : right_descents(w);
}

std::pair<Element, Element> CoxeterSystem::parabolic_decompose(Element w, GenSet I) const {
  Element x = w, u = identity;
  for (;;) {
    Generator found = -1;
    for (Generator s = 0; s < rank_; ++s)
      if (I.contains(s) && length(right_mult(x, s)) < length(x)) {
        found = s;
        break;
      }
    if (found < 0) break;
    x = right_mult(x, found);
    u = left_mult(found, u);
  }
  return {x, u};
}

std::string CoxeterSystem::name(Element w) const {
  if (w == identity) return "e";
  std::ostringstream os;
  bool first = true;
  for (Generator s : word(w)) {
    if (!first) os << ' ';
    os << 's' << (s + 1);
    first = false;
  }
  return os.str();
}

std::string CoxeterSystem::dihedral_label(Element w) const {
  if (rank_ != 2) fail(ErrorCode::PreconditionViolated, "dihedral labels need rank 2");
  unsigned k = length(w);
  if (w == identity) return "1_0";
  if (w == longest_element()) return "2_" + std::to_string(k);
  int side = left_descents(w).contains(0) ? 1 : 2;
  return std::to_string(side) + "_" + std::to_string(k);
}

Element CoxeterSystem::parse_element(const std::string& text) const {
  std::string t;
  std::size_t begin = text.find_first_not_of(" \t");
  std::size_t end = text.find_last_not_of(" \t");
  if (begin == std::string::npos) fail(ErrorCode::ConfigError, "empty element");
  t = text.substr(begin, end - begin + 1);
  if (t == "e") return identity;
  if (rank_ == 2 && t.size() >= 3 && (t[0] == '1' || t[0] == '2') && t[1] == '_') {
    int k = 0;
    try {
      k = std::stoi(t.substr(2));
    } catch (...) {
      fail(ErrorCode::ConfigError, "cannot parse dihedral label '" + t + "'");
    }
    int m = matrix_.m[0][1];
    if (k < 0 || k > m) fail(ErrorCode::ConfigError, "dihedral label out of range: '" + t + "'");
    std::vector<Generator> word;
    Generator s = t[0] == '1' ? 0 : 1;
    for (int i = 0; i < k; ++i) word.push_back(i % 2 == 0 ? s : 1 - s);
    return element_from_word(word);
  }
  std::vector<Generator> word;
  std::istringstream is(t);
  std::string tok;
  while (is >> tok) {
    if (tok[0] == 's') tok = tok.substr(1);
    int idx = 0;
    try {
      idx = std::stoi(tok);
    } catch (...) {
      fail(ErrorCode::ConfigError, "cannot parse generator '" + tok + "'");
    }
    if (idx < 1 || idx > rank_)
      fail(ErrorCode::ConfigError, "generator index out of range in '" + t + "'");
    word.push_back(idx - 1);
  }
  return element_from_word(word);
}

ParabolicSubgroup::ParabolicSubgroup(const CoxeterSystem& parent, GenSet I)
    : parent_(parent),
      I_(I),
      sub_([&] {
        if (I.empty()) fail(ErrorCode::PreconditionViolated, "parabolic subset must be nonempty");
        auto members = I.members();
        std::vector<std::vector<int>> m(members.size(), std::vector<int>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = 0; j < members.size(); ++j)
            m[i][j] = parent.matrix().m[members[i]][members[j]];
        return CoxeterSystem(CoxeterMatrix::from_entries(std::move(m)), parent.order());
      }()) {
  auto members = I_.members();
  to_parent_.resize(sub_.order());
  for (Element u = 0; u < sub_.order(); ++u) {
    Element w = CoxeterSystem::identity;
    for (Generator s : sub_.word(u)) w = parent_.right_mult(w, members[s]);
    to_parent_[u] = w;
    from_parent_.emplace(w, u);
  }
}

Element ParabolicSubgroup::from_parent(Element w) const {
  auto it = from_parent_.find(w);
  if (it == from_parent_.end())
    fail(ErrorCode::PreconditionViolated, "element does not lie in the parabolic subgroup");
  return it->second;
}

}  // namespace cellkit
