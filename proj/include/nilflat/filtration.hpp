#pragma once

#include <functional>

#include "linear.hpp"

namespace nilflat {

/// Orders eligible to carry a positive filtration adapted to the basis:
/// reorderings where contractions only point forward and each pair
/// (E_i, E_{n+1-i}) brackets into the last line.
using AdmissibleOrder = std::vector<int>;  // position -> original index

namespace detail {

/// i must come before k whenever de^k involves e_i.
inline std::vector<std::vector<bool>> precedence(const LieAlgebra& L) {
  int n = L.n;
  std::vector<std::vector<bool>> before(n + 1, std::vector<bool>(n + 1, false));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i) {
      if (i == k) continue;
      if (!is_zero(L.contraction(i, k))) before[i][k] = true;
    }
  return before;
}

inline bool pair_condition(const LieAlgebra& L, const std::vector<int>& order) {
  int n = L.n;
  int last = order[n - 1];
  for (int p = 1; p <= n; ++p) {
    RatVec v = L.bracket(order[p - 1], order[hat_index(n, p) - 1]);
    for (int k = 1; k <= n; ++k)
      if (k != last && !v[k - 1].is_zero()) return false;
  }
  return true;
}

}  // namespace detail

/// Emits admissible orders in lexicographic order (by original index). The
/// callback returns false to stop early. Throws if the precedence relation is
/// cyclic, which cannot happen for a nilpotent algebra.
inline void admissible_orders(const LieAlgebra& L,
                              const std::function<bool(const AdmissibleOrder&)>& emit) {
  int n = L.n;
  auto before = detail::precedence(L);
  for (int i = 1; i <= n; ++i)
    if (before[i][i]) throw error("contraction precedence is cyclic: algebra not nilpotent");
  {
    // Kahn check for longer cycles
    std::vector<int> indeg(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k)
        if (before[i][k]) ++indeg[k];
    std::vector<int> q;
    std::vector<bool> done(n + 1, false);
    int cnt = 0;
    for (bool progress = true; progress;) {
      progress = false;
      for (int i = 1; i <= n; ++i)
        if (!done[i] && indeg[i] == 0) {
          done[i] = true;
          ++cnt;
          progress = true;
          for (int k = 1; k <= n; ++k)
            if (before[i][k]) --indeg[k];
        }
    }
    if (cnt != n) throw error("contraction precedence is cyclic: algebra not nilpotent");
  }
  std::vector<int> order;
  std::vector<bool> placed(n + 1, false);
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if ((int)order.size() == n) {
      if (detail::pair_condition(L, order))
        if (!emit(order)) stop = true;
      return;
    }
    for (int v = 1; v <= n && !stop; ++v) {
      if (placed[v]) continue;
      bool ready = true;
      for (int u = 1; u <= n && ready; ++u)
        if (!placed[u] && u != v && before[u][v]) ready = false;
      if (!ready) continue;
      placed[v] = true;
      order.push_back(v);
      rec();
      order.pop_back();
      placed[v] = false;
    }
  };
  rec();
}

inline std::vector<AdmissibleOrder> all_admissible_orders(const LieAlgebra& L) {
  std::vector<AdmissibleOrder> out;
  admissible_orders(L, [&](const AdmissibleOrder& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

struct FiltrationCheck {
  bool ok = true;
  std::string condition;  // "positivity", "compat", "F1".."F4"
  std::vector<int> witness;
  std::string message;
};

/// Verifies that positive weights on a reordered basis define a positive
/// filtration with the four multiplicity conditions:
///   compat  w_i + w_j <= w_k whenever dE^k(E_i, E_j) != 0
///   F1      0 < w_1 <= ... <= w_n
///   F2      w_i + w_hat(i) >= w_n and > w_{n-1}
///   F3      w_i + w_hat(i) = w_n, w_i != w_hat(i): one side has multiplicity >= 2
///   F4      w_i + w_hat(i) = w_n, w_i = w_hat(i): i = hat(i) or multiplicity > 2
inline FiltrationCheck check_F_assignment(const LieAlgebra& L, const AdmissibleOrder& order,
                                          const RatVec& w) {
  int n = L.n;
  if ((int)order.size() != n || (int)w.size() != n) throw error("assignment arity mismatch");
  auto fail = [&](std::string cond, std::vector<int> wit, std::string msg) {
    FiltrationCheck c;
    c.ok = false;
    c.condition = std::move(cond);
    c.witness = std::move(wit);
    c.message = std::move(msg);
    return c;
  };
  for (int i = 0; i < n; ++i)
    if (!(w[i] > Rat(0))) return fail("positivity", {i + 1}, "weights must be positive");
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) return fail("F1", {i + 1, i + 2}, "weights not nondecreasing");
  LieAlgebra re = reorder_basis(L, order);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!re.a(k, i, j).is_zero() && w[i - 1] + w[j - 1] > w[k - 1])
          return fail("compat", {i, j, k},
                      "w" + std::to_string(i) + "+w" + std::to_string(j) + " > w" +
                          std::to_string(k));
  auto mult = [&](const Rat& v) {
    int c = 0;
    for (auto& x : w)
      if (x == v) ++c;
    return c;
  };
  for (int i = 1; i <= n; ++i) {
    int h = hat_index(n, i);
    Rat s = w[i - 1] + w[h - 1];
    if (s < w[n - 1]) return fail("F2", {i, h}, "pair sum below the top weight");
    if (n >= 2 && !(s > w[n - 2])) return fail("F2", {i, h}, "pair sum not above w_{n-1}");
    if (s == w[n - 1]) {
      if (w[i - 1] != w[h - 1]) {
        if (mult(w[i - 1]) < 2 && mult(w[h - 1]) < 2)
          return fail("F3", {i, h}, "both sides have multiplicity one");
      } else if (i != h && mult(w[i - 1]) <= 2) {
        return fail("F4", {i, h}, "multiplicity not greater than two");
      }
    }
  }
  return {};
}

struct FiltrationWitness {
  AdmissibleOrder order;
  RatVec weights;  // positive integers

  std::string weights_str() const {
    std::string s;
    for (size_t i = 0; i < weights.size(); ++i) {
      if (i) s += ",";
      s += weights[i].str();
    }
    return s;
  }
  std::string basis_str() const {
    std::string s;
    for (size_t i = 0; i < order.size(); ++i) {
      if (i) s += ",";
      s += "e_" + std::to_string(order[i]);
    }
    return s;
  }
};

/// Scales a positive rational vector to coprime positive integers.
inline RatVec integerize_weights(const RatVec& w) {
  Rat f = integerizing_factor(w);
  mpz_class g = 0;
  for (auto& x : w) {
    mpz_class v = (x * f).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) f /= Rat(g);
  RatVec out(w.size());
  for (size_t i = 0; i < w.size(); ++i) out[i] = w[i] * f;
  return out;
}

namespace detail {

inline std::vector<unsigned> masks_by_popcount(int bits) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << bits); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return masks;
}

}  // namespace detail

/// Searches a positive integer filtration witness over all admissible orders.
/// Per order, the weight-equality pattern of adjacent positions and the
/// "pair sum equals / exceeds the top weight" choices are branched finitely;
/// the multiplicity conditions become combinatorial checks and the rest is an
/// exact linear feasibility query. First witness in deterministic order
/// (orders lexicographic, patterns by number of equalities, then pair masks),
/// or nothing after the exhaustive sweep.
inline std::optional<FiltrationWitness> search_filtration(const LieAlgebra& L) {
  int n = L.n;
  std::optional<FiltrationWitness> found;
  auto patterns = detail::masks_by_popcount(n - 1);
  auto pair_masks = detail::masks_by_popcount(n / 2);

  admissible_orders(L, [&](const AdmissibleOrder& order) {
    LieAlgebra re = reorder_basis(L, order);
    std::vector<std::tuple<int, int, int>> sum_rows;
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!re.a(k, i, j).is_zero()) sum_rows.emplace_back(i, j, k);

    for (unsigned pattern : patterns) {
      // value class of each position under the equality pattern
      std::vector<int> cls(n);
      for (int p = 1; p < n; ++p) cls[p] = cls[p - 1] + ((pattern >> (p - 1)) & 1u ? 0 : 1);
      std::vector<int> runlen(cls[n - 1] + 1, 0);
      for (int p = 0; p < n; ++p) runlen[cls[p]] += 1;

      for (unsigned pm : pair_masks) {
        bool reject = false;
        for (int i = 1; i <= n / 2 && !reject; ++i) {
          if (!((pm >> (i - 1)) & 1u)) continue;  // strict branch: conditions vacuous
          int h = hat_index(n, i);
          if (cls[i - 1] != cls[h - 1]) {
            if (runlen[cls[i - 1]] < 2 && runlen[cls[h - 1]] < 2) reject = true;
          } else if (runlen[cls[i - 1]] <= 2) {
            reject = true;
          }
        }
        if (reject) continue;

        ConstraintSystem sys;
        sys.variables = n;
        auto row = [&](std::initializer_list<std::pair<int, int>> terms, Rel rel) {
          RatVec c(n);
          for (auto& [pos, coef] : terms) c[pos - 1] += Rat(coef);
          sys.add(std::move(c), Rat(0), rel);
        };
        row({{1, 1}}, Rel::Gt);  // w_1 > 0
        for (int p = 1; p < n; ++p)
          row({{p + 1, 1}, {p, -1}}, (pattern >> (p - 1)) & 1u ? Rel::Eq : Rel::Gt);
        for (auto& [i, j, k] : sum_rows) row({{k, 1}, {i, -1}, {j, -1}}, Rel::Ge);
        for (int i = 1; i <= n / 2; ++i) {
          int h = hat_index(n, i);
          row({{i, 1}, {h, 1}, {n, -1}}, (pm >> (i - 1)) & 1u ? Rel::Eq : Rel::Gt);
          row({{i, 1}, {h, 1}, {n - 1, -1}}, Rel::Gt);
        }
        if (n % 2 == 1) {
          int mid = (n + 1) / 2;
          row({{mid, 2}, {n, -1}}, Rel::Ge);
          row({{mid, 2}, {n - 1, -1}}, Rel::Gt);
        }

        auto res = fm_feasible(sys);
        if (!res.feasible) continue;
        FiltrationWitness w{order, integerize_weights(res.witness)};
        auto check = check_F_assignment(L, w.order, w.weights);
        if (!check.ok)
          throw error("search produced an invalid witness (internal): " + check.condition);
        found = std::move(w);
        return false;  // stop at the first witness
      }
    }
    return true;
  });
  return found;
}

}  // namespace nilflat
