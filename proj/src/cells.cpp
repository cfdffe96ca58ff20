#include "cellkit/cells.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace cellkit {

namespace {

// Edges y -> x for the elementary relation x <-_L y, self-loops dropped.
std::vector<std::vector<Element>> left_edges(KLTable& kl) {
  const CoxeterSystem& W = kl.group();
  std::vector<std::vector<Element>> adj(W.order());
  for (Element y = 0; y < W.order(); ++y) {
    for (Generator s = 0; s < W.rank(); ++s) {
      Element sy = W.left_mult(s, y);
      if (W.length(sy) < W.length(y)) continue;  // h_{s,y,.} hits only y itself
      adj[y].push_back(sy);
      for (const auto& [z, m] : kl.mu_row(s, y)) adj[y].push_back(z);
    }
    std::sort(adj[y].begin(), adj[y].end());
    adj[y].erase(std::unique(adj[y].begin(), adj[y].end()), adj[y].end());
  }
  return adj;
}

std::vector<std::vector<Element>> invert_edges(const CoxeterSystem& W,
                                               const std::vector<std::vector<Element>>& adj) {
  std::vector<std::vector<Element>> out(adj.size());
  for (Element y = 0; y < adj.size(); ++y) {
    Element yi = W.inverse(y);
    for (Element x : adj[y]) out[yi].push_back(W.inverse(x));
  }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

// Iterative Tarjan; emits components sinks-first (reverse topological order
// of the condensation).
std::vector<int> tarjan_scc(const std::vector<std::vector<Element>>& adj, int& comp_count) {
  const int n = int(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<Element> stack;
  std::vector<char> on_stack(n, 0);
  int next_index = 0;
  comp_count = 0;

  struct Frame {
    Element v;
    std::size_t child;
  };
  std::vector<Frame> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.push_back({Element(root), 0});
    index[root] = low[root] = next_index++;
    stack.push_back(Element(root));
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.v].size()) {
        Element w = adj[f.v][f.child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          for (;;) {
            Element w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = comp_count;
            if (w == f.v) break;
          }
          ++comp_count;
        }
        Element v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  return comp;
}

CellPartition partition_from_edges(const CoxeterSystem& W, Side side,
                                   const std::vector<std::vector<Element>>& adj) {
  int ncomp = 0;
  std::vector<int> comp = tarjan_scc(adj, ncomp);

  // renumber blocks by minimal element
  std::vector<Element> min_of(ncomp, Element(W.order()));
  for (Element w = 0; w < W.order(); ++w)
    min_of[comp[w]] = std::min(min_of[comp[w]], w);
  std::vector<int> order(ncomp);
  for (int i = 0; i < ncomp; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return min_of[a] < min_of[b]; });
  std::vector<int> renum(ncomp);
  for (int i = 0; i < ncomp; ++i) renum[order[i]] = i;

  CellPartition part;
  part.side = side;
  part.block_of.resize(W.order());
  part.blocks.assign(ncomp, {});
  for (Element w = 0; w < W.order(); ++w) {
    part.block_of[w] = renum[comp[w]];
    part.blocks[part.block_of[w]].push_back(w);
  }

  // condensation edges and reachability (Tarjan order is sinks-first, so
  // successors of a component carry smaller pre-renumber ids)
  std::set<std::pair<int, int>> edge_set;
  for (Element y = 0; y < W.order(); ++y)
    for (Element x : adj[y])
      if (comp[x] != comp[y]) edge_set.emplace(comp[y], comp[x]);

  part.reach = BitMatrix(ncomp);
  for (int c = 0; c < ncomp; ++c) part.reach.set(renum[c], renum[c]);
  for (int c = 0; c < ncomp; ++c)
    for (auto it = edge_set.lower_bound({c, 0}); it != edge_set.end() && it->first == c; ++it) {
      assert(it->second < c);
      part.reach.or_row(renum[c], renum[it->second]);
    }
  for (auto [from, to] : edge_set) part.edges.emplace_back(renum[from], renum[to]);
  std::sort(part.edges.begin(), part.edges.end());
  return part;
}

}  // namespace

CellPartition left_cells(KLTable& kl) {
  return partition_from_edges(kl.group(), Side::Left, left_edges(kl));
}

CellPartition right_cells(KLTable& kl) {
  return partition_from_edges(kl.group(), Side::Right, invert_edges(kl.group(), left_edges(kl)));
}

CellPartition two_sided_cells(KLTable& kl) {
  auto adj = left_edges(kl);
  auto radj = invert_edges(kl.group(), adj);
  for (Element y = 0; y < adj.size(); ++y) {
    adj[y].insert(adj[y].end(), radj[y].begin(), radj[y].end());
    std::sort(adj[y].begin(), adj[y].end());
    adj[y].erase(std::unique(adj[y].begin(), adj[y].end()), adj[y].end());
  }
  return partition_from_edges(kl.group(), Side::TwoSided, adj);
}

GenSet r_set(const CoxeterSystem& W, Element w) { return W.right_descents(w); }

std::string EnhancedDescentSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Generator s : descents.members()) {
    if (!first) os << ',';
    os << 's' << (s + 1);
    first = false;
  }
  for (auto [s, t] : pairs) {
    if (!first) os << ',';
    os << 's' << (s + 1) << 's' << (t + 1) << 's' << (s + 1);
    first = false;
  }
  os << '}';
  return os.str();
}

EnhancedDescentSet r_pi_set(const CoxeterSystem& W, const WeightFunction& p, Element w) {
  EnhancedDescentSet out;
  out.descents = W.right_descents(w);
  for (Generator s = 0; s < W.rank(); ++s)
    for (Generator t = 0; t < W.rank(); ++t) {
      if (s == t || W.matrix().order(s, t) == 2) continue;
      if (!(p[s] < p[t])) continue;
      Element wsts = W.right_mult(W.right_mult(W.right_mult(w, s), t), s);
      if (W.length(wsts) < W.length(w)) out.pairs.emplace_back(s, t);
    }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

bool check_closed(const CellPartition& left, const std::vector<Element>& gamma) {
  if (gamma.empty()) return false;
  const int nb = left.block_count();
  std::vector<char> in_gamma(nb, 0);
  std::vector<int> sizes(nb, 0);
  for (Element w : gamma) ++sizes[left.block_of[w]];
  std::set<Element> distinct(gamma.begin(), gamma.end());
  if (distinct.size() != gamma.size()) return false;
  for (int b = 0; b < nb; ++b)
    if (sizes[b] != 0) {
      if (sizes[b] != int(left.blocks[b].size())) return false;  // partial block
      in_gamma[b] = 1;
    }
  // every block between two gamma-blocks must itself lie in gamma
  for (int z = 0; z < nb; ++z) {
    if (in_gamma[z]) continue;
    bool above_some = false, below_some = false;
    for (int b = 0; b < nb && !(above_some && below_some); ++b) {
      if (!in_gamma[b]) continue;
      if (left.leq_blocks(b, z)) above_some = true;
      if (left.leq_blocks(z, b)) below_some = true;
    }
    if (above_some && below_some) return false;
  }
  return true;
}

CellModule cell_module(KLTable& kl, const CellPartition& left, std::vector<Element> gamma,
                       std::optional<std::vector<Element>> basis_order) {
  const CoxeterSystem& W = kl.group();
  if (!check_closed(left, gamma))
    fail(ErrorCode::NotClosed, "the given set is not closed with respect to <=_L");
  std::sort(gamma.begin(), gamma.end());
  CellModule mod;
  if (basis_order) {
    std::vector<Element> sorted = *basis_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != gamma)
      fail(ErrorCode::PreconditionViolated, "basis order must enumerate the closed set");
    mod.basis = std::move(*basis_order);
  } else {
    mod.basis = gamma;
  }
  const std::size_t k = mod.basis.size();
  std::vector<int> pos(W.order(), -1);
  for (std::size_t i = 0; i < k; ++i) pos[mod.basis[i]] = int(i);
  mod.action.assign(W.rank(), std::vector<std::vector<LaurentPoly>>(
                                  k, std::vector<LaurentPoly>(k)));
  for (Generator s = 0; s < W.rank(); ++s)
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& [y, h] : kl.h_left(s, mod.basis[j]))
        if (pos[y] >= 0) mod.action[s][pos[y]][j] = h;
  return mod;
}

InductionReport induction_check(KLTable& kl, GenSet I) {
  const CoxeterSystem& W = kl.group();
  InductionReport report;
  CellPartition left = left_cells(kl);
  if (I.empty()) return report;  // pr is constant; nothing to check

  ParabolicSubgroup par(W, I);
  KLTable sub_kl(par.group(), validate_weights(par.group(), [&] {
                   std::vector<int> w;
                   for (Generator s : I.members()) w.push_back(kl.weights()[s]);
                   return w;
                 }()));
  CellPartition sub_left = left_cells(sub_kl);

  auto pr_block = [&](Element w) {
    return sub_left.block_of[par.from_parent(W.pr(w, I))];
  };

  // (a) pr_I maps each left cell of W into a single left cell of W_I
  for (const auto& block : left.blocks) {
    int expected = pr_block(block.front());
    for (Element w : block)
      if (pr_block(w) != expected) {
        report.ok = false;
        report.violations.push_back("pr_I not constant on the left cell of " +
                                    W.name(block.front()));
        break;
      }
  }
  // (b) X_I * Gamma' is a union of left cells of W
  for (int sb = 0; sb < sub_left.block_count(); ++sb) {
    std::vector<char> hit(left.block_count(), 0);
    std::vector<char> member(W.order(), 0);
    for (Element w = 0; w < W.order(); ++w)
      if (pr_block(w) == sb) {
        hit[left.block_of[w]] = 1;
        member[w] = 1;
      }
    for (Element w = 0; w < W.order(); ++w)
      if (hit[left.block_of[w]] && !member[w]) {
        report.ok = false;
        report.violations.push_back("X_I Gamma' for sub-cell " + std::to_string(sb) +
                                    " is not a union of left cells");
        break;
      }
  }
  return report;
}

}  // namespace cellkit
