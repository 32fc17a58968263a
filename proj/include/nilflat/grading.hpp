#pragma once

#include <functional>
#include <map>

#include "linear.hpp"

namespace nilflat {

/// Weight of a torus action: a rational vector of length rank, compared
/// lexicographically. Addition and equality are componentwise.
using Weight = RatVec;

struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const { return cmp(a, b) < 0; }
};

/// Layers of a grading, keyed by weight, each layer listing original basis
/// indices. Layers partition {1..n} and the bracket is graded.
struct Grading {
  DiagonalTorus torus;
  std::map<Weight, std::vector<int>, WeightLess> layers;

  int n() const { return torus.n; }
  Weight weight_of(int index) const { return torus.weight(index); }
  bool is_weight(const Weight& w) const { return layers.count(w) > 0; }
  int multiplicity(const Weight& w) const {
    auto it = layers.find(w);
    return it == layers.end() ? 0 : (int)it->second.size();
  }
};

inline Grading grading_from_torus(const LieAlgebra& L, const DiagonalTorus& t) {
  if (t.n != L.n) throw error("torus dimension mismatch");
  for (int k = 1; k <= L.n; ++k)
    for (int i = 1; i <= L.n; ++i)
      for (int j = i + 1; j <= L.n; ++j) {
        if (L.a(k, i, j).is_zero()) continue;
        if (cmp(t.weight(i) + t.weight(j), t.weight(k)) != 0)
          throw error("torus weight rows are not derivations of the algebra (triple " +
                      std::to_string(i) + "," + std::to_string(j) + " -> " + std::to_string(k) +
                      ")");
      }
  Grading g;
  g.torus = t;
  for (int i = 1; i <= L.n; ++i) g.layers[t.weight(i)].push_back(i);
  return g;
}

/// A choice of basis order with one weight per position; position p holds
/// e_{order[p-1]} with weight weights[p-1].
struct WeightSequence {
  std::vector<int> order;
  std::vector<Weight> weights;

  static WeightSequence from_order(const Grading& g, const std::vector<int>& order) {
    WeightSequence s;
    s.order = order;
    for (int idx : order) s.weights.push_back(g.weight_of(idx));
    return s;
  }
  std::string weights_str() const {
    std::string out;
    for (size_t i = 0; i < weights.size(); ++i) {
      if (i) out += ",";
      if (weights[i].size() == 1)
        out += weights[i][0].str();
      else
        out += str(weights[i]);
    }
    return out;
  }
  std::string basis_str() const {
    std::string out;
    for (size_t i = 0; i < order.size(); ++i) {
      if (i) out += ",";
      out += "e_" + std::to_string(order[i]);
    }
    return out;
  }
};

struct GradingCheck {
  bool ok = true;
  std::string condition;        // first violated: "G1".."G5"
  std::vector<int> witness;     // positions involved
  std::string message;
};

/// The five conditions a weight sequence must satisfy so that the antidiagonal
/// metric on an adapted basis can be made Ricci-flat:
///   G1  w_i + w_j = w_k with i != j forces i,j < k
///   G2  w_i + w_hat(i) = w_j forces j = n
///   G3  w_i + w_hat(i) = w_n with w_i != w_hat(i): one side has multiplicity >= 2
///   G4  w_i + w_hat(i) = w_n with w_i = w_hat(i): i = hat(i) or multiplicity > 2
///   G5  w_i + w_j and w_hat(i) + w_hat(j) both weights force w_j = w_hat(i), w_i = w_hat(j)
inline GradingCheck check_G_sequence(const Grading& g, const WeightSequence& s) {
  int n = (int)s.order.size();
  if (n != g.n()) throw error("sequence length mismatch");
  {
    std::map<Weight, int, WeightLess> count;
    for (auto& w : s.weights) count[w] += 1;
    for (auto& [w, c] : count)
      if (g.multiplicity(w) != c)
        throw error("sequence weights inconsistent with grading multiplicities");
  }
  auto fail = [&](std::string cond, std::vector<int> wit, std::string msg) {
    GradingCheck c;
    c.ok = false;
    c.condition = std::move(cond);
    c.witness = std::move(wit);
    c.message = std::move(msg);
    return c;
  };
  auto w = [&](int p) -> const Weight& { return s.weights[p - 1]; };
  auto hat = [&](int p) { return hat_index(n, p); };
  // G1
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Weight sum = w(i) + w(j);
      for (int k = 1; k <= n; ++k)
        if (cmp(w(k), sum) == 0 && !(i < k && j < k))
          return fail("G1", {i, j, k},
                      "w" + std::to_string(i) + "+w" + std::to_string(j) + "=w" +
                          std::to_string(k));
    }
  // G2
  for (int i = 1; i <= n; ++i) {
    Weight sum = w(i) + w(hat(i));
    for (int j = 1; j <= n; ++j)
      if (cmp(w(j), sum) == 0 && j != n)
        return fail("G2", {i, hat(i), j},
                    "w" + std::to_string(i) + "+w" + std::to_string(hat(i)) + "=w" +
                        std::to_string(j));
  }
  // G3 / G4
  for (int i = 1; i <= n; ++i) {
    Weight sum = w(i) + w(hat(i));
    if (cmp(sum, w(n)) != 0) continue;
    if (cmp(w(i), w(hat(i))) != 0) {
      if (g.multiplicity(w(i)) < 2 && g.multiplicity(w(hat(i))) < 2)
        return fail("G3", {i, hat(i)}, "both sides have multiplicity one");
    } else if (i != hat(i) && g.multiplicity(w(i)) <= 2) {
      return fail("G4", {i, hat(i)}, "multiplicity not greater than two");
    }
  }
  // G5
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!g.is_weight(w(i) + w(j))) continue;
      if (!g.is_weight(w(hat(i)) + w(hat(j)))) continue;
      if (cmp(w(j), w(hat(i))) != 0 || cmp(w(i), w(hat(j))) != 0)
        return fail("G5", {i, j, hat(i), hat(j)},
                    "w" + std::to_string(i) + "+w" + std::to_string(j) + " and partners");
    }
  return {};
}

/// A sum relation w(u) + w(u') = w(v) between basis indices; the precedence it
/// forces can make the enumeration empty.
struct SumRelation {
  int u, v, target;
  std::string str() const {
    return "w(e" + std::to_string(u) + ")+w(e" + std::to_string(v) + ")=w(e" +
           std::to_string(target) + ")";
  }
};

/// Sum relations whose forced precedences are cyclic (so no order can satisfy
/// G1). Empty when the precedence relation is acyclic.
inline std::vector<SumRelation> g1_obstructions(const Grading& g) {
  int n = g.n();
  std::vector<SumRelation> relations;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      Weight sum = g.weight_of(u) + g.weight_of(v);
      for (int t = 1; t <= n; ++t)
        if (cmp(g.weight_of(t), sum) == 0) relations.push_back({u, v, t});
    }
  // precedence: u -> target, v -> target; self-targets are immediate obstructions
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<SumRelation> out;
  for (auto& r : relations) {
    if (r.target == r.u || r.target == r.v) {
      out.push_back(r);
      continue;
    }
    adj[r.u].push_back(r.target);
    adj[r.v].push_back(r.target);
  }
  // indices on a cycle: reachable from themselves
  std::vector<bool> on_cycle(n + 1, false);
  for (int s = 1; s <= n; ++s) {
    std::vector<bool> seen(n + 1, false);
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (y == s) on_cycle[s] = true;
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  for (auto& r : relations)
    if (r.target != r.u && r.target != r.v && on_cycle[r.target] &&
        (on_cycle[r.u] || on_cycle[r.v]))
      out.push_back(r);
  return out;
}

/// Enumerates the weight sequences passing all five conditions, inserting one
/// position at a time in (weight key, original index) order and pruning
/// insertions whose weight is still a sum involving an unplaced index. The
/// callback returns false to stop. Returns true if the enumeration ran to
/// completion.
inline bool enumerate_g_sequences(const Grading& g,
                                  const std::function<bool(const WeightSequence&)>& emit) {
  int n = g.n();
  std::vector<int> candidates;  // all indices, sorted by (weight, index)
  for (int i = 1; i <= n; ++i) candidates.push_back(i);
  std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
    int c = cmp(g.weight_of(a), g.weight_of(b));
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<bool> placed(n + 1, false);
  std::vector<int> order;
  bool complete = true;

  std::function<bool()> rec = [&]() -> bool {
    if ((int)order.size() == n) {
      WeightSequence s = WeightSequence::from_order(g, order);
      if (check_G_sequence(g, s).ok)
        if (!emit(s)) {
          complete = false;
          return false;
        }
      return true;
    }
    for (int v : candidates) {
      if (placed[v]) continue;
      Weight wv = g.weight_of(v);
      // G1 prune: no remaining index (other than v) may combine with any index
      // into the weight being inserted, and no other index may have weight 0
      // (v's own slot would then be the target of a sum involving itself)
      bool blocked = false;
      for (int s = 1; s <= n && !blocked; ++s) {
        if (s == v) continue;
        if (is_zero(g.weight_of(s))) blocked = true;
        if (placed[s]) continue;
        for (int t = 1; t <= n && !blocked; ++t) {
          if (t == s) continue;
          if (cmp(g.weight_of(s) + g.weight_of(t), wv) == 0) blocked = true;
        }
      }
      if (blocked) continue;
      placed[v] = true;
      order.push_back(v);
      bool go_on = rec();
      order.pop_back();
      placed[v] = false;
      if (!go_on) return false;
    }
    return true;
  };
  rec();
  return complete;
}

inline std::optional<WeightSequence> first_g_sequence(const Grading& g) {
  std::optional<WeightSequence> out;
  enumerate_g_sequences(g, [&](const WeightSequence& s) {
    out = s;
    return false;
  });
  return out;
}

}  // namespace nilflat
