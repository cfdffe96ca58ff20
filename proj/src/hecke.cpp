#include "cellkit/hecke.hpp"

#include <algorithm>
#include <cassert>
#include <thread>

namespace cellkit {

namespace {
const LaurentPoly kZeroPoly;
}

bool WeightFunction::equal_parameters() const {
  for (int w : p)
    if (w != p.front()) return false;
  return true;
}

WeightFunction validate_weights(const CoxeterSystem& W, const std::vector<int>& raw) {
  if (int(raw.size()) != W.rank())
    fail(ErrorCode::ConfigError,
         "expected " + std::to_string(W.rank()) + " weights, got " + std::to_string(raw.size()));
  for (int s = 0; s < W.rank(); ++s)
    if (raw[s] <= 0)
      fail(ErrorCode::NonPositiveWeight,
           "weight of s" + std::to_string(s + 1) + " must be positive");
  // Generators joined by a chain of odd bonds are conjugate and must carry
  // equal weights.
  std::vector<int> comp(W.rank());
  for (int s = 0; s < W.rank(); ++s) comp[s] = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < W.rank(); ++s)
      for (int t = 0; t < W.rank(); ++t) {
        int m = W.matrix().order(s, t);
        if (s != t && m != CoxeterMatrix::infinity && m % 2 == 1 && comp[s] != comp[t]) {
          comp[s] = comp[t] = std::min(comp[s], comp[t]);
          changed = true;
        }
      }
  }
  for (int s = 0; s < W.rank(); ++s)
    for (int t = s + 1; t < W.rank(); ++t)
      if (comp[s] == comp[t] && raw[s] != raw[t])
        fail(ErrorCode::ConjugacyViolation,
             "generators s" + std::to_string(s + 1) + " and s" + std::to_string(t + 1) +
                 " are conjugate but have weights " + std::to_string(raw[s]) + " and " +
                 std::to_string(raw[t]));
  return WeightFunction{raw};
}

TCoeffs t_mult(const CoxeterSystem& W, const WeightFunction& p, Generator s, Element w) {
  TCoeffs out;
  Element sw = W.left_mult(s, w);
  out[sw] = LaurentPoly::constant(1);
  if (W.length(sw) < W.length(w))
    out[w] = LaurentPoly{{p[s], 1}, {-p[s], -1}};
  return out;
}

TCoeffs t_mult(const CoxeterSystem& W, const WeightFunction& p, Generator s, const TCoeffs& xi) {
  TCoeffs out;
  for (const auto& [w, f] : xi) {
    Element sw = W.left_mult(s, w);
    out[sw] += f;
    if (W.length(sw) < W.length(w)) out[w] += f * LaurentPoly{{p[s], 1}, {-p[s], -1}};
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

TCoeffs bar_on_T(const CoxeterSystem& W, const WeightFunction& p, const TCoeffs& xi) {
  // bar(T_x) = T_{s_1}^{-1} ... T_{s_k}^{-1} for any reduced word of x;
  // T_s^{-1} = T_s - (v^{p_s} - v^{-p_s}) T_1.
  std::unordered_map<Element, TCoeffs> memo;
  memo[CoxeterSystem::identity] = {{CoxeterSystem::identity, LaurentPoly::constant(1)}};
  auto bar_t = [&](auto&& self, Element x) -> const TCoeffs& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    Generator s = W.left_descents(x).members().front();
    const TCoeffs& rest = self(self, W.left_mult(s, x));
    TCoeffs val = t_mult(W, p, s, rest);  // T_s * rest
    LaurentPoly a{{p[s], 1}, {-p[s], -1}};
    for (const auto& [w, f] : rest) {
      auto& slot = val[w];
      slot -= a * f;
      if (slot.is_zero()) val.erase(w);
    }
    return memo.emplace(x, std::move(val)).first->second;
  };
  TCoeffs out;
  for (const auto& [x, f] : xi) {
    LaurentPoly fbar = f.bar();
    for (const auto& [w, g] : bar_t(bar_t, x)) {
      auto& slot = out[w];
      slot += fbar * g;
      if (slot.is_zero()) out.erase(w);
    }
  }
  return out;
}

KLTable::KLTable(const CoxeterSystem& W, WeightFunction p, DescentChoice choice)
    : W_(W), p_(std::move(p)), choice_(choice) {
  if (int(p_.p.size()) != W_.rank())
    fail(ErrorCode::ConfigError, "weight function does not match the group rank");
  pool_.push_back(LaurentPoly());             // id 0 = zero
  pool_.push_back(LaurentPoly::constant(1));  // id 1 = one
  pool_buckets_[pool_[0].hash()].push_back(0);
  pool_buckets_[pool_[1].hash()].push_back(1);
  rows_.resize(W_.order());
  mu_.resize(std::size_t(W_.rank()) * W_.order());
  dense_.resize(W_.order());
}

std::uint32_t KLTable::intern(LaurentPoly f) {
  auto& bucket = pool_buckets_[f.hash()];
  for (std::uint32_t id : bucket)
    if (pool_[id] == f) return id;
  std::uint32_t id = std::uint32_t(pool_.size());
  pool_.push_back(std::move(f));
  bucket.push_back(id);
  return id;
}

const LaurentPoly& KLTable::row_lookup(Element w, Element x) const {
  const CRow& row = rows_[w];
  auto it = std::lower_bound(row.begin(), row.end(), x,
                             [](const auto& e, Element v) { return e.first < v; });
  if (it != row.end() && it->first == x) return pool_[it->second];
  return kZeroPoly;
}

void KLTable::ensure_rows(Element w) {
  while (rows_filled_ <= w) build_row(rows_filled_);
}

void KLTable::build_row(Element w) {
  assert(w == rows_filled_);
  if (w == CoxeterSystem::identity) {
    rows_[w] = {{CoxeterSystem::identity, 1u}};
    ++rows_filled_;
    return;
  }
  auto descents = W_.left_descents(w).members();
  Generator s = choice_ == DescentChoice::SmallestLeft ? descents.front() : descents.back();
  Element y = W_.left_mult(s, w);  // sw < w

  // C'_s C'_y in T-coordinates: T_x picks up p_{sx,y} plus v^{+-p_s} p_{x,y}.
  touched_.clear();
  auto bump = [&](Element x) -> LaurentPoly& {
    if (dense_[x].is_zero() &&
        std::find(touched_.begin(), touched_.end(), x) == touched_.end())
      touched_.push_back(x);
    return dense_[x];
  };
  for (const auto& [x, pid] : rows_[y]) {
    const LaurentPoly& pxy = pool_[pid];
    Element sx = W_.left_mult(s, x);
    std::int32_t shift = W_.length(sx) > W_.length(x) ? -p_[s] : p_[s];
    bump(sx) += pxy;
    bump(x).add_shifted(pxy, shift);
  }
  for (const auto& [z, mzy] : mu_row_impl(s, y))
    for (const auto& [x, pid] : rows_[z]) bump(x).sub_mul(mzy, pool_[pid]);

  std::sort(touched_.begin(), touched_.end());
  CRow row;
  row.reserve(touched_.size());
  for (Element x : touched_) {
    if (!dense_[x].is_zero()) row.emplace_back(x, intern(std::move(dense_[x])));
    dense_[x] = LaurentPoly();
  }
  rows_[w] = std::move(row);
  ++rows_filled_;
}

const KLTable::MuRow& KLTable::mu_row_impl(Generator s, Element y) {
  auto& slot = mu_[std::size_t(s) * W_.order() + y];
  if (!slot) slot = std::make_unique<MuRow>(compute_mu_row(s, y));
  return *slot;
}

// Descending induction on z over {z : sz < z < y}; requires all p-rows up to
// y to be present.
KLTable::MuRow KLTable::compute_mu_row(Generator s, Element y) const {
  std::vector<std::pair<Element, LaurentPoly>> desc;  // descending in z
  for (Element z = y; z-- > 0;) {
    if (W_.length(W_.left_mult(s, z)) >= W_.length(z)) continue;
    if (!W_.bruhat_leq(z, y)) continue;
    LaurentPoly q;
    q.add_shifted(row_lookup(y, z), p_[s]);  // v^{p_s} p_{z,y}
    for (const auto& [z2, m2] : desc) {
      const LaurentPoly& pzz2 = row_lookup(z2, z);
      if (!pzz2.is_zero()) q.sub_mul(pzz2, m2);
    }
    LaurentPoly m = symmetric_completion(q);
    if (!m.is_zero()) desc.emplace_back(z, std::move(m));
  }
  std::reverse(desc.begin(), desc.end());
  return desc;
}

const LaurentPoly& KLTable::kl_p(Element y, Element w) {
  ensure_rows(w);
  return row_lookup(w, y);
}

const KLTable::MuRow& KLTable::mu_row(Generator s, Element y) {
  if (W_.length(W_.left_mult(s, y)) < W_.length(y))
    fail(ErrorCode::PreconditionViolated, "mu_row needs sy > y");
  ensure_rows(y);
  return mu_row_impl(s, y);
}

const LaurentPoly& KLTable::m_poly(Generator s, Element z, Element y) {
  if (!(W_.length(W_.left_mult(s, z)) < W_.length(z)))
    fail(ErrorCode::PreconditionViolated, "m_poly needs sz < z");
  if (!(z != y && W_.bruhat_leq(z, y)))
    fail(ErrorCode::PreconditionViolated, "m_poly needs z < y");
  if (!(W_.length(W_.left_mult(s, y)) > W_.length(y)))
    fail(ErrorCode::PreconditionViolated, "m_poly needs sy > y");
  const MuRow& row = mu_row(s, y);
  auto it = std::lower_bound(row.begin(), row.end(), z,
                             [](const auto& e, Element v) { return e.first < v; });
  if (it != row.end() && it->first == z) return it->second;
  return kZeroPoly;
}

KLTable::HRow KLTable::h_left(Generator s, Element y) {
  ensure_rows(y);
  Element sy = W_.left_mult(s, y);
  if (W_.length(sy) < W_.length(y))
    return {{y, LaurentPoly{{p_[s], 1}, {-p_[s], 1}}}};
  const MuRow& mu = mu_row_impl(s, y);
  HRow out(mu.begin(), mu.end());
  out.emplace_back(sy, LaurentPoly::constant(1));  // the z's are all < y < sy
  return out;
}

KLTable::HRow KLTable::h_right(Generator s, Element y) {
  HRow out;
  for (auto& [x, h] : h_left(s, W_.inverse(y))) out.emplace_back(W_.inverse(x), std::move(h));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::vector<std::pair<Element, LaurentPoly>> KLTable::c_row(Element w) {
  ensure_rows(w);
  std::vector<std::pair<Element, LaurentPoly>> out;
  out.reserve(rows_[w].size());
  for (const auto& [x, pid] : rows_[w]) out.emplace_back(x, pool_[pid]);
  return out;
}

void KLTable::fill(unsigned jobs) {
  ensure_rows(Element(W_.order() - 1));
  // All p-rows are now complete; the remaining M-rows only read them and are
  // independent of one another, so they can be computed concurrently.
  std::vector<std::pair<Generator, Element>> work;
  for (Generator s = 0; s < W_.rank(); ++s)
    for (Element y = 0; y < W_.order(); ++y)
      if (W_.length(W_.left_mult(s, y)) > W_.length(y) && !mu_[std::size_t(s) * W_.order() + y])
        work.emplace_back(s, y);
  if (jobs <= 1 || work.size() < 64) {
    for (auto [s, y] : work) mu_row_impl(s, y);
  } else {
    unsigned nthreads = jobs;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < work.size(); i += nthreads) {
          auto [s, y] = work[i];
          mu_[std::size_t(s) * W_.order() + y] =
              std::make_unique<MuRow>(compute_mu_row(s, y));
        }
      });
    for (auto& th : pool) th.join();
  }
  frozen_ = true;
}

}  // namespace cellkit
