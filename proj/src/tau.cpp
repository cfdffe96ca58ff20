#include "cellkit/tau.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace cellkit {

namespace {

int bond_order(const CoxeterSystem& W, Generator s, Generator t) {
  if (s == t) fail(ErrorCode::WrongOrder, "need two distinct generators");
  return W.matrix().order(s, t);
}

void require_noncommuting(const CoxeterSystem& W, Generator s, Generator t) {
  if (bond_order(W, s, t) == 2)
    fail(ErrorCode::WrongOrder, "generators commute (m = 2)");
}

// Alternating word a b a b ... of length k inside the rank-2 system.
Element alternating(const CoxeterSystem& sub, Generator a, int k) {
  std::vector<Generator> word;
  for (int i = 0; i < k; ++i) word.push_back(i % 2 == 0 ? a : 1 - a);
  return sub.element_from_word(word);
}

}  // namespace

bool in_dr(const CoxeterSystem& W, Element w, Generator s, Generator t) {
  require_noncommuting(W, s, t);
  GenSet r = W.right_descents(w);
  return r.contains(s) != r.contains(t);
}

std::array<Element, 2> t_operator(const CoxeterSystem& W, Element w, Generator s, Generator t) {
  if (!in_dr(W, w, s, t)) fail(ErrorCode::NotInDomain, "element is not in D_R(s,t)");
  std::vector<Element> hits;
  for (Element c : {W.right_mult(w, s), W.right_mult(w, t)})
    if (in_dr(W, c, s, t)) hits.push_back(c);
  assert(!hits.empty());
  std::array<Element, 2> out{hits.front(), hits.back()};
  if (out[0] > out[1]) std::swap(out[0], out[1]);
  return out;
}

StringPosition string_of(const CoxeterSystem& W, Element w, Generator s, Generator t) {
  if (!in_dr(W, w, s, t)) fail(ErrorCode::NotInDomain, "element is not in D_R(s,t)");
  GenSet I = GenSet::pair(s, t);
  auto [x, u] = W.parabolic_decompose(w, I);
  int m = bond_order(W, s, t);
  int k = int(W.length(u));
  // first letter of u decides the string; u is neither e nor the coset top
  Generator a = W.length(W.left_mult(s, u)) < W.length(u) ? s : t;
  StringPosition out;
  out.index = k;
  Element cur = x;
  for (int j = 0; j < m - 1; ++j) {
    cur = W.right_mult(cur, j % 2 == 0 ? a : (a == s ? t : s));
    out.items.push_back(cur);
  }
  assert(out.items[k - 1] == w);
  return out;
}

std::vector<CosetStrings> string_decomposition(const CoxeterSystem& W, Generator s, Generator t) {
  require_noncommuting(W, s, t);
  GenSet I = GenSet::pair(s, t);
  int m = bond_order(W, s, t);
  std::map<Element, CosetStrings> by_min;
  for (Element w = 0; w < W.order(); ++w) {
    auto [x, u] = W.parabolic_decompose(w, I);
    (void)u;
    if (by_min.count(x)) continue;
    CosetStrings cs;
    cs.min = x;
    Element a = x, b = x;
    for (int j = 0; j < m - 1; ++j) {
      a = W.right_mult(a, j % 2 == 0 ? s : t);
      b = W.right_mult(b, j % 2 == 0 ? t : s);
      cs.first.push_back(a);
      cs.second.push_back(b);
    }
    cs.max = W.right_mult(a, m % 2 == 1 ? s : t);
    by_min.emplace(x, std::move(cs));
  }
  std::vector<CosetStrings> out;
  out.reserve(by_min.size());
  for (auto& [x, cs] : by_min) out.push_back(std::move(cs));
  return out;
}

Element star(const CoxeterSystem& W, Element w, Generator s, Generator t) {
  if (bond_order(W, s, t) != 3) fail(ErrorCode::WrongOrder, "star needs m_st = 3");
  auto pair = t_operator(W, w, s, t);
  assert(pair[0] == pair[1]);
  return pair[0];
}

Element tilde(const CoxeterSystem& W, Element w, Generator s, Generator t) {
  int m = bond_order(W, s, t);
  StringPosition pos = string_of(W, w, s, t);
  return pos.items[std::size_t(m - pos.index) - 1];
}

SubgroupContext::SubgroupContext(const CoxeterSystem& W, const WeightFunction& p, GenSet I)
    : par(W, I),
      weights(validate_weights(par.group(), [&] {
        std::vector<int> w;
        for (Generator s : I.members()) w.push_back(p[s]);
        return w;
      }())),
      kl(par.group(), weights),
      left(left_cells(kl)),
      right(right_cells(kl)) {}

AdmissiblePair delta_geq3(const CoxeterSystem& W, const WeightFunction& p, GenSet I) {
  auto mem = I.members();
  if (mem.size() != 2) fail(ErrorCode::WrongOrder, "pair subsets only");
  int m = bond_order(W, mem[0], mem[1]);
  if (m < 3) fail(ErrorCode::WrongOrder, "pair must have order at least 3");
  if (p[mem[0]] != p[mem[1]])
    fail(ErrorCode::WrongWeights, "this family needs equal weights on the pair");
  AdmissiblePair pair;
  pair.I = I;
  pair.family = DeltaFamily::EqualWeightDihedral;
  pair.ctx = std::make_shared<SubgroupContext>(W, p, I);
  const CoxeterSystem& sub = pair.ctx->par.group();
  pair.delta.resize(sub.order());
  pair.delta[CoxeterSystem::identity] = CoxeterSystem::identity;
  pair.delta[sub.longest_element()] = sub.longest_element();
  for (Generator a : {0, 1})
    for (int k = 1; k < m; ++k)
      pair.delta[alternating(sub, a, k)] = alternating(sub, a, m - k);
  return pair;
}

AdmissiblePair delta_pi(const CoxeterSystem& W, const WeightFunction& p, GenSet I) {
  auto mem = I.members();
  if (mem.size() != 2) fail(ErrorCode::WrongOrder, "pair subsets only");
  int m = bond_order(W, mem[0], mem[1]);
  if (m < 4 || m % 2 != 0) fail(ErrorCode::WrongOrder, "this family needs even order >= 4");
  if (p[mem[0]] == p[mem[1]])
    fail(ErrorCode::WrongWeights, "this family needs unequal weights on the pair");
  AdmissiblePair pair;
  pair.I = I;
  pair.family = DeltaFamily::UnequalWeightDihedral;
  pair.ctx = std::make_shared<SubgroupContext>(W, p, I);
  const CoxeterSystem& sub = pair.ctx->par.group();
  Generator sg = p[mem[0]] < p[mem[1]] ? 0 : 1;  // smaller weight starts "1_k"
  Generator tg = 1 - sg;
  auto one = [&](int k) { return alternating(sub, sg, k); };
  auto two = [&](int k) { return alternating(sub, tg, k); };
  pair.delta.resize(sub.order());
  pair.delta[one(0)] = one(0);
  pair.delta[one(1)] = one(1);
  pair.delta[two(m - 1)] = two(m - 1);
  pair.delta[two(m)] = two(m);
  for (int k = 1; k <= m - 2; ++k) {
    Element a = k % 2 == 1 ? two(k) : one(k);
    Element b = k % 2 == 1 ? two(k + 1) : one(k + 1);
    pair.delta[a] = b;
    pair.delta[b] = a;
  }
  return pair;
}

AdmissiblePair custom_pair(const CoxeterSystem& W, const WeightFunction& p, GenSet I,
                           std::vector<Element> delta) {
  AdmissiblePair pair;
  pair.I = I;
  pair.family = DeltaFamily::Custom;
  pair.ctx = std::make_shared<SubgroupContext>(W, p, I);
  if (delta.size() != pair.ctx->par.group().order())
    fail(ErrorCode::ConfigError, "delta table size does not match the subgroup order");
  pair.delta = std::move(delta);
  return pair;
}

AdmissibilityReport verify_admissible(AdmissiblePair& pair, bool strong) {
  SubgroupContext& ctx = *pair.ctx;
  AdmissibilityReport report;
  report.strong_checked = strong;
  for (int cb = 0; cb < ctx.left.block_count(); ++cb) {
    const auto& cell = ctx.left.blocks[cb];
    AdmissibilityReport::CellVerdict verdict;
    verdict.cell = cb;
    std::vector<Element> image;
    for (Element u : cell) image.push_back(pair.delta[u]);
    std::vector<Element> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    verdict.bijective_onto_cell =
        injective && sorted == ctx.left.blocks[ctx.left.block_of[image.front()]];
    if (verdict.bijective_onto_cell) {
      // compare the generator matrices in the bases (e_u) and (e_{delta(u)})
      auto ma = cell_module(ctx.kl, ctx.left, cell);
      auto mb = cell_module(ctx.kl, ctx.left, sorted, [&] {
        std::vector<Element> order;
        for (Element u : ma.basis) order.push_back(pair.delta[u]);
        return order;
      }());
      verdict.module_isomorphism = ma.action == mb.action;
    }
    report.cond1 = report.cond1 && verdict.bijective_onto_cell;
    report.cond2 = report.cond2 && verdict.module_isomorphism;
    report.cells.push_back(verdict);
  }
  if (strong) {
    const CoxeterSystem& sub = ctx.par.group();
    for (Element u = 0; u < sub.order(); ++u)
      if (!ctx.right.same_block(u, pair.delta[u])) {
        report.cond3 = false;
        break;
      }
  }
  pair.admissible = report.cond1 && report.cond2;
  pair.strongly_admissible = pair.admissible && strong && report.cond3;
  return report;
}

std::vector<Element> extend_delta(const AdmissiblePair& pair) {
  if (!pair.admissible)
    fail(ErrorCode::UnverifiedPair, "extend_delta needs a verified admissible pair");
  const CoxeterSystem& W = pair.ctx->par.parent();
  std::vector<Element> out(W.order());
  for (Element w = 0; w < W.order(); ++w) {
    auto [x, u] = W.parabolic_decompose(w, pair.I);
    Element du = pair.delta[pair.ctx->par.from_parent(u)];
    out[w] = W.product(x, pair.ctx->par.to_parent(du));
  }
  return out;
}

namespace {

// Deterministic partition refinement: split classes by signature until a
// full pass makes no change; class ids are renumbered by minimal element
// after every pass.
template <typename SigFn>
TauPartition refine_to_fixpoint(std::size_t n, std::vector<int> class_of, SigFn&& signature) {
  TauPartition part;
  auto renumber = [&](std::vector<int>& cls) {
    std::map<int, Element> min_of;
    for (Element w = 0; w < n; ++w)
      if (!min_of.count(cls[w])) min_of.emplace(cls[w], w);  // w ascending
    std::vector<std::pair<Element, int>> order;
    for (auto [c, mn] : min_of) order.emplace_back(mn, c);
    std::sort(order.begin(), order.end());
    std::map<int, int> renum;
    for (std::size_t i = 0; i < order.size(); ++i) renum[order[i].second] = int(i);
    for (Element w = 0; w < n; ++w) cls[w] = renum[cls[w]];
    return int(order.size());
  };
  int count = renumber(class_of);
  part.class_counts.push_back(count);
  for (;;) {
    std::map<std::vector<int>, int> groups;
    std::vector<int> next(n);
    for (Element w = 0; w < n; ++w) {
      std::vector<int> sig = signature(w, class_of);
      sig.push_back(class_of[w]);
      next[w] = groups.emplace(std::move(sig), int(groups.size())).first->second;
    }
    int next_count = renumber(next);
    if (next_count == count) break;
    class_of = std::move(next);
    count = next_count;
    ++part.rounds;
    part.class_counts.push_back(count);
  }
  part.class_of = std::move(class_of);
  part.classes.assign(count, {});
  for (Element w = 0; w < n; ++w) part.classes[part.class_of[w]].push_back(Element(w));
  return part;
}

}  // namespace

TauPartition vogan_tau_partition(const CoxeterSystem& W, const WeightFunction& p) {
  if (!p.equal_parameters())
    fail(ErrorCode::UnequalWeights, "the multiset invariant is defined for equal parameters");
  std::vector<std::pair<Generator, Generator>> pairs;
  for (Generator s = 0; s < W.rank(); ++s)
    for (Generator t = s + 1; t < W.rank(); ++t) {
      int m = W.matrix().order(s, t);
      if (m == 3 || m == 4) pairs.emplace_back(s, t);
    }
  // round 0: level sets of the right descent set
  std::map<std::uint32_t, int> rclasses;
  std::vector<int> initial(W.order());
  for (Element w = 0; w < W.order(); ++w)
    initial[w] =
        rclasses.emplace(W.right_descents(w).bits(), int(rclasses.size())).first->second;
  return refine_to_fixpoint(
      W.order(), std::move(initial), [&](Element w, const std::vector<int>& cls) {
        std::vector<int> sig;
        sig.reserve(pairs.size() * 2);
        for (auto [s, t] : pairs) {
          if (!in_dr(W, w, s, t)) {
            sig.push_back(-1);
            sig.push_back(-1);
            continue;
          }
          auto imgs = t_operator(W, w, s, t);
          int a = cls[imgs[0]], b = cls[imgs[1]];
          sig.push_back(std::min(a, b));
          sig.push_back(std::max(a, b));
        }
        return sig;
      });
}

TauPartition tau_delta_partition(const CoxeterSystem& W, const WeightFunction& p,
                                 const std::vector<AdmissiblePair>& delta,
                                 LambdaConvention lambda) {
  for (const auto& pair : delta)
    if (!pair.admissible)
      fail(ErrorCode::UnverifiedPair, "all pairs must be verified admissible");

  // round 0: the Lambda_I class of pr_I(w), over all pairs
  std::vector<std::vector<int>> colors(delta.size(), std::vector<int>(W.order()));
  for (std::size_t i = 0; i < delta.size(); ++i) {
    const auto& pair = delta[i];
    const CoxeterSystem& sub = pair.ctx->par.group();
    if (lambda == LambdaConvention::RPi) {
      std::map<EnhancedDescentSet, int> interned;
      std::vector<int> of_sub(sub.order());
      for (Element u = 0; u < sub.order(); ++u)
        of_sub[u] = interned.emplace(r_pi_set(sub, pair.ctx->weights, u), int(interned.size()))
                        .first->second;
      for (Element w = 0; w < W.order(); ++w)
        colors[i][w] = of_sub[pair.ctx->par.from_parent(W.pr(w, pair.I))];
    } else {
      for (Element w = 0; w < W.order(); ++w)
        colors[i][w] = pair.ctx->left.block_of[pair.ctx->par.from_parent(W.pr(w, pair.I))];
    }
  }
  std::map<std::vector<int>, int> groups;
  std::vector<int> initial(W.order());
  for (Element w = 0; w < W.order(); ++w) {
    std::vector<int> key;
    for (std::size_t i = 0; i < delta.size(); ++i) key.push_back(colors[i][w]);
    initial[w] = groups.emplace(std::move(key), int(groups.size())).first->second;
  }

  std::vector<std::vector<Element>> tables;
  for (const auto& pair : delta) tables.push_back(extend_delta(pair));

  return refine_to_fixpoint(W.order(), std::move(initial),
                            [&](Element w, const std::vector<int>& cls) {
                              std::vector<int> sig;
                              sig.reserve(tables.size());
                              for (const auto& table : tables) sig.push_back(cls[table[w]]);
                              return sig;
                            });
}

std::vector<AdmissiblePair> default_delta_collection(const CoxeterSystem& W,
                                                     const WeightFunction& p) {
  std::vector<AdmissiblePair> out;
  for (Generator s = 0; s < W.rank(); ++s)
    for (Generator t = s + 1; t < W.rank(); ++t) {
      int m = W.matrix().order(s, t);
      if (m < 3) continue;
      GenSet I = GenSet::pair(s, t);
      if (p[s] == p[t])
        out.push_back(delta_geq3(W, p, I));
      else if (m % 2 == 0)
        out.push_back(delta_pi(W, p, I));
      // unequal weights on an odd bond cannot pass weight validation
    }
  return out;
}

ConjectureReport conjecture_check(KLTable& kl, unsigned jobs) {
  const CoxeterSystem& W = kl.group();
  const WeightFunction& p = kl.weights();
  kl.fill(jobs);

  ConjectureReport report;
  CellPartition left = left_cells(kl);
  CellPartition two = two_sided_cells(kl);
  report.pairs = default_delta_collection(W, p);
  for (auto& pair : report.pairs) {
    verify_admissible(pair, true);
    if (!pair.admissible)
      fail(ErrorCode::UnverifiedPair, "a default pair failed admissibility verification");
  }
  report.tau = tau_delta_partition(W, p, report.pairs, LambdaConvention::RPi);

  // meet of the two-sided partition and the invariant partition
  std::map<std::pair<int, int>, int> groups;
  std::vector<int> meet(W.order());
  for (Element w = 0; w < W.order(); ++w)
    meet[w] = groups
                  .emplace(std::make_pair(two.block_of[w], report.tau.class_of[w]),
                           int(groups.size()))
                  .first->second;

  report.left_cell_count = left.block_count();
  report.two_sided_count = two.block_count();
  report.tau_class_count = report.tau.class_count();
  report.meet_class_count = int(groups.size());

  report.holds = true;
  for (Element x = 0; x < W.order() && report.holds; ++x)
    for (Element y = Element(x + 1); y < W.order(); ++y) {
      bool same_left = left.same_block(x, y);
      bool same_meet = meet[x] == meet[y];
      if (same_left != same_meet) {
        report.holds = false;
        report.witness = std::make_pair(x, y);
        break;
      }
    }
  return report;
}

}  // namespace cellkit
