#include "trop/spectral.hpp"

#include <algorithm>
#include <string>

namespace trop {

namespace {

void require_square(const Mat& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw DimensionError(std::string(what) + ": matrix must be square and nonempty, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

/// Karp's bound for cycles reachable from source s:
///   max_v min_k (D_n(v) - D_k(v)) / (n - k)
/// over k with D_k(v) finite, where D_k(v) is the max weight of a k-edge
/// walk s -> v. Returns bottom if no cycle is reachable from s (cannot
/// happen for finite matrices, but the DP is written for the general case).
ExtRat karp_from_source(const Mat& a, Index s) {
  const Index n = a.rows();
  std::vector<ExtVec> d(static_cast<size_t>(n) + 1, ExtVec(n));  // d[k] defaults to bottom
  d[0](s) = ExtRat(Rat(0));
  for (Index k = 1; k <= n; ++k)
    for (Index v = 0; v < n; ++v) {
      ExtRat best;  // bottom
      for (Index u = 0; u < n; ++u) {
        ExtRat cand = d[static_cast<size_t>(k) - 1](u) + ExtRat(a(v, u));  // edge u -> v
        if (best < cand) best = cand;
      }
      d[static_cast<size_t>(k)](v) = best;
    }
  ExtRat result;  // bottom
  for (Index v = 0; v < n; ++v) {
    if (!d[static_cast<size_t>(n)](v).is_finite()) continue;
    bool have = false;
    Rat worst;
    for (Index k = 0; k < n; ++k) {
      if (!d[static_cast<size_t>(k)](v).is_finite()) continue;
      Rat ratio(d[static_cast<size_t>(n)](v).value() - d[static_cast<size_t>(k)](v).value());
      ratio /= Rat(n - k);
      if (!have || ratio < worst) {
        worst = ratio;
        have = true;
      }
    }
    if (have && result < ExtRat(worst)) result = ExtRat(worst);
  }
  return result;
}

}  // namespace

Rat max_cycle_mean(const Mat& a) {
  require_square(a, "max_cycle_mean");
  ExtRat best;
  for (Index s = 0; s < a.rows(); ++s) {
    ExtRat from_s = karp_from_source(a, s);
    if (best < from_s) best = from_s;
  }
  if (!best.is_finite())
    throw InternalCheckError("max_cycle_mean: finite matrix produced no cycle");
  return best.value();
}

Mat kleene_plus(const Mat& a) {
  require_square(a, "kleene_plus");
  Rat lambda = max_cycle_mean(a);
  if (lambda > 0)
    throw DivergenceError("kleene_plus diverges: maximum cycle mean " + rat_to_string(lambda) +
                          " is positive");
  // Floyd-Warshall max-plus relaxation. With no positive cycle every walk is
  // dominated by a walk whose intermediate vertices are distinct, and those
  // are exactly the walks enumerated here, so the result equals
  // A (+) A^2 (+) ... (+) A^n.
  Mat d = a;
  const Index n = a.rows();
  for (Index k = 0; k < n; ++k)
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        Rat through(d(i, k) + d(k, j));
        if (d(i, j) < through) d(i, j) = through;
      }
  return d;
}

Mat kleene_star(const Mat& a) {
  Mat s = kleene_plus(a);
  for (Index i = 0; i < s.rows(); ++i)
    if (s(i, i) < 0) s(i, i) = 0;
  return s;
}

CriticalStructure critical_structure(const Mat& a) {
  require_square(a, "critical_structure");
  CriticalStructure cs;
  cs.mcm = max_cycle_mean(a);
  Mat al = trop_scale(Rat(-cs.mcm), a);
  Mat p = kleene_plus(al);
  const Index n = a.rows();

  std::vector<bool> critical(static_cast<size_t>(n), false);
  for (Index i = 0; i < n; ++i)
    if (p(i, i) == 0) {
      critical[static_cast<size_t>(i)] = true;
      cs.critical_nodes.push_back(i);
    }
  if (cs.critical_nodes.empty())
    throw InternalCheckError("critical_structure: no critical node found");

  // Edge j -> i is critical iff it lies on a cycle of mean exactly mcm:
  // its weight plus the best return walk i -> j must vanish in A_lambda.
  std::vector<std::vector<Index>> succ(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (critical[static_cast<size_t>(j)] && critical[static_cast<size_t>(i)] &&
          Rat(al(i, j) + p(j, i)) == 0)
        succ[static_cast<size_t>(j)].push_back(i);

  // Kosaraju on the critical subgraph (tiny at desk scale).
  std::vector<std::vector<Index>> pred(static_cast<size_t>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i : succ[static_cast<size_t>(j)]) pred[static_cast<size_t>(i)].push_back(j);

  std::vector<bool> seen(static_cast<size_t>(n), false);
  std::vector<Index> order;
  for (Index start : cs.critical_nodes) {
    if (seen[static_cast<size_t>(start)]) continue;
    // Iterative post-order DFS.
    std::vector<std::pair<Index, size_t>> stack{{start, 0}};
    seen[static_cast<size_t>(start)] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < succ[static_cast<size_t>(v)].size()) {
        Index w = succ[static_cast<size_t>(v)][next++];
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  std::vector<bool> assigned(static_cast<size_t>(n), false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[static_cast<size_t>(*it)]) continue;
    std::vector<Index> comp{*it};
    assigned[static_cast<size_t>(*it)] = true;
    for (size_t head = 0; head < comp.size(); ++head)
      for (Index w : pred[static_cast<size_t>(comp[head])])
        if (!assigned[static_cast<size_t>(w)]) {
          assigned[static_cast<size_t>(w)] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    cs.classes.push_back(std::move(comp));
  }
  std::sort(cs.classes.begin(), cs.classes.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  for (const auto& c : cs.classes) cs.representatives.push_back(c.front());
  return cs;
}

SpectralReport eigenspace_basis(const Mat& a) {
  SpectralReport rep;
  rep.critical = critical_structure(a);
  Mat al = trop_scale(Rat(-rep.critical.mcm), a);
  rep.a_lambda_plus = kleene_plus(al);
  for (Index r : rep.critical.representatives) rep.eigenbasis.push_back(rep.a_lambda_plus.col(r));
  return rep;
}

}  // namespace trop
