#pragma once

#include <optional>
#include <set>

#include "lie_algebra.hpp"

namespace nilflat {

struct DerivationSpace {
  std::vector<Mat> basis;
  int dim() const { return (int)basis.size(); }
};

/// Does D satisfy D[x,y] = [Dx,y] + [x,Dy] on all basis pairs?
inline bool is_derivation(const LieAlgebra& L, const Mat& d) {
  int n = L.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      RatVec lhs = d.apply(L.bracket(i, j));
      RatVec rhs(n);
      for (int p = 1; p <= n; ++p) {
        if (!d(p - 1, i - 1).is_zero()) {
          RatVec br = L.bracket(p, j);
          for (int t = 0; t < n; ++t) rhs[t] += d(p - 1, i - 1) * br[t];
        }
        if (!d(p - 1, j - 1).is_zero()) {
          RatVec br = L.bracket(i, p);
          for (int t = 0; t < n; ++t) rhs[t] += d(p - 1, j - 1) * br[t];
        }
      }
      for (int t = 0; t < n; ++t)
        if (lhs[t] != rhs[t]) return false;
    }
  return true;
}

/// All matrices with D[e_i,e_j] = [De_i,e_j] + [e_i,De_j], as the kernel of the
/// n^2-variable linear system. Variable (p,q) is entry D(p,q), column-major in q.
inline DerivationSpace derivation_space(const LieAlgebra& L) {
  int n = L.n;
  auto var = [n](int p, int q) { return (q - 1) * n + (p - 1); };  // 1-based indices
  std::vector<RatVec> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      RatVec cij = L.bracket(i, j);
      for (int m = 1; m <= n; ++m) {
        RatVec row(n * n);
        for (int k = 1; k <= n; ++k)
          if (!cij[k - 1].is_zero()) row[var(m, k)] += cij[k - 1];
        for (int p = 1; p <= n; ++p) {
          Rat bpj = L.bracket(p, j)[m - 1];
          if (!bpj.is_zero()) row[var(p, i)] -= bpj;
          Rat bip = L.bracket(i, p)[m - 1];
          if (!bip.is_zero()) row[var(p, j)] -= bip;
        }
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  DerivationSpace out;
  if (rows.empty()) {
    for (int q = 1; q <= n; ++q)
      for (int p = 1; p <= n; ++p) {
        Mat d(n, n);
        d(p - 1, q - 1) = Rat(1);
        out.basis.push_back(d);
      }
    return out;
  }
  Mat sys((int)rows.size(), n * n);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  for (auto& v : sys.kernel_basis()) {
    Mat d(n, n);
    for (int q = 1; q <= n; ++q)
      for (int p = 1; p <= n; ++p) d(p - 1, q - 1) = v[var(p, q)];
    out.basis.push_back(d);
  }
  return out;
}

/// The split torus of derivations diagonal in the given basis. Row i of
/// weight_rows is the weight functional of e_i in the canonical (reduced row
/// echelon) basis of the solution space of w_i + w_j = w_k over nonzero a^k_{ij}.
struct DiagonalTorus {
  int n = 0;
  int rank = 0;
  Mat weight_rows;  // n x rank
  RatVec weight(int i) const { return weight_rows.row(i - 1); }
  /// The generating diagonal derivations (columns of weight_rows, as diag matrices).
  std::vector<Mat> generators() const {
    std::vector<Mat> gens;
    for (int c = 0; c < rank; ++c) {
      Mat d(n, n);
      for (int i = 0; i < n; ++i) d(i, i) = weight_rows(i, c);
      gens.push_back(d);
    }
    return gens;
  }
};

inline DiagonalTorus diagonal_derivations(const LieAlgebra& L) {
  int n = L.n;
  std::set<std::tuple<int, int, int>> triples;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!L.a(k, i, j).is_zero()) triples.insert({i, j, k});
  DiagonalTorus t;
  t.n = n;
  if (triples.empty()) {
    t.rank = n;
    t.weight_rows = Mat::identity(n);
    return t;
  }
  Mat sys((int)triples.size(), n);
  int r = 0;
  for (auto& [i, j, k] : triples) {
    sys(r, i - 1) += Rat(1);
    sys(r, j - 1) += Rat(1);
    sys(r, k - 1) -= Rat(1);
    ++r;
  }
  auto kern = sys.kernel_basis();
  t.rank = (int)kern.size();
  t.weight_rows = Mat(n, t.rank);
  for (int c = 0; c < t.rank; ++c)
    for (int i = 0; i < n; ++i) t.weight_rows(i, c) = kern[c][i];
  return t;
}

// ---------------------------------------------------------------------------
// Linear feasibility over the rationals: Fourier-Motzkin with equality
// substitution, exact witness by midpoint back-substitution.

enum class Rel { Ge, Gt, Eq };

struct Constraint {
  RatVec coeffs;
  Rat constant;  // coeffs . w  rel  constant
  Rel rel = Rel::Ge;
};

struct ConstraintSystem {
  int variables = 0;
  std::vector<Constraint> constraints;

  void add(RatVec coeffs, Rat constant, Rel rel) {
    constraints.push_back({std::move(coeffs), std::move(constant), rel});
  }
  std::string str(const std::string& var = "w") const {
    std::string out;
    for (auto& c : constraints) {
      std::string lhs;
      for (int i = 0; i < variables; ++i) {
        if (c.coeffs[i].is_zero()) continue;
        Rat v = c.coeffs[i];
        if (lhs.empty()) {
          if (v == Rat(-1)) lhs += "-";
          else if (!v.is_one()) lhs += v.str() + "*";
        } else {
          lhs += v.sign() > 0 ? " + " : " - ";
          Rat av = v.abs();
          if (!av.is_one()) lhs += av.str() + "*";
        }
        lhs += var + std::to_string(i + 1);
      }
      if (lhs.empty()) lhs = "0";
      out += lhs + (c.rel == Rel::Ge ? " >= " : c.rel == Rel::Gt ? " > " : " = ") +
             c.constant.str() + "\n";
    }
    return out;
  }
};

struct FmResult {
  bool feasible = false;
  RatVec witness;
  // On infeasibility: the contradictory derived constraint and its expression
  // as a combination of input rows (multipliers on inequality rows are >= 0).
  Constraint contradiction;
  RatVec combination;
};

namespace detail {

struct FmRow {
  RatVec c;
  Rat b;
  Rel rel;
  RatVec combo;  // multipliers over original rows
};

inline void scale_primitive(FmRow& r) {
  // scale by positive rational so coefficients are coprime integers
  RatVec all = r.c;
  all.push_back(r.b);
  Rat f = integerizing_factor(all);
  mpz_class g = 0;
  for (auto& x : all) {
    mpz_class v = (x * f).num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1) f /= Rat(g);
  if (f.is_one()) return;
  for (auto& x : r.c) x *= f;
  r.b *= f;
  for (auto& x : r.combo) x *= f;
}

inline std::string row_key(const FmRow& r) {
  std::string k;
  for (auto& x : r.c) k += x.str() + ",";
  k += r.b.str();
  k += r.rel == Rel::Ge ? ">=" : r.rel == Rel::Gt ? ">" : "=";
  return k;
}

}  // namespace detail

/// Decides feasibility of a mixed strict/non-strict rational linear system and
/// produces an exact witness. Equalities are substituted out first; variables
/// are then eliminated last index first; the witness is reconstructed by
/// taking midpoints of the residual intervals (non-strict finite endpoints are
/// taken as-is when one-sided, strict ones are shifted by 1).
inline FmResult fm_feasible(const ConstraintSystem& sys) {
  using detail::FmRow;
  int m = sys.variables;
  if (m < 1) throw error("fm_feasible needs at least one variable");
  size_t norig = sys.constraints.size();
  std::vector<FmRow> rows;
  for (size_t i = 0; i < norig; ++i) {
    FmRow r{sys.constraints[i].coeffs, sys.constraints[i].constant, sys.constraints[i].rel,
            RatVec(norig)};
    if ((int)r.c.size() != m) throw error("constraint arity mismatch");
    r.combo[i] = Rat(1);
    rows.push_back(std::move(r));
  }

  FmResult res;
  auto contradiction_from = [&](const FmRow& r) {
    res.feasible = false;
    res.contradiction = {r.c, r.b, r.rel};
    res.combination = r.combo;
  };

  // substitution record: variable -> expression over remaining variables
  struct Subst {
    int var;
    RatVec expr_coeffs;  // w[var] = expr_coeffs . w + expr_const
    Rat expr_const;
  };
  std::vector<Subst> substitutions;

  // eliminate equalities by substitution
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t idx = 0; idx < rows.size(); ++idx) {
      if (rows[idx].rel != Rel::Eq) continue;
      FmRow eq = rows[idx];
      int pivot = -1;
      for (int v = m - 1; v >= 0; --v)
        if (!eq.c[v].is_zero()) {
          pivot = v;
          break;
        }
      if (pivot < 0) {
        if (!eq.b.is_zero()) {
          contradiction_from(eq);
          return res;
        }
        rows.erase(rows.begin() + idx);
        changed = true;
        break;
      }
      // w[pivot] = (b - rest)/c_pivot
      Rat cp = eq.c[pivot];
      Subst s;
      s.var = pivot;
      s.expr_coeffs.assign(m, Rat(0));
      for (int v = 0; v < m; ++v)
        if (v != pivot && !eq.c[v].is_zero()) s.expr_coeffs[v] = -(eq.c[v] / cp);
      s.expr_const = eq.b / cp;
      rows.erase(rows.begin() + idx);
      for (auto& r : rows) {
        if (r.c[pivot].is_zero()) continue;
        Rat f = r.c[pivot] / cp;  // r -= f * eq
        for (int v = 0; v < m; ++v) r.c[v] -= f * eq.c[v];
        r.b -= f * eq.b;
        for (size_t t = 0; t < norig; ++t) r.combo[t] -= f * eq.combo[t];
      }
      substitutions.push_back(std::move(s));
      changed = true;
      break;
    }
  }

  // elimination, highest variable index first
  struct Step {
    int var;
    std::vector<FmRow> lowers, uppers;  // bounds in solved form
  };
  std::vector<Step> steps;
  std::vector<bool> eliminated(m, false);
  for (auto& s : substitutions) eliminated[s.var] = true;

  for (int v = m - 1; v >= 0; --v) {
    if (eliminated[v]) continue;
    Step step;
    step.var = v;
    std::vector<FmRow> keep;
    std::vector<FmRow> lowers, uppers;
    for (auto& r : rows) {
      if (r.c[v].is_zero()) {
        keep.push_back(r);
      } else if (r.c[v].sign() > 0) {
        lowers.push_back(r);  // c_v w_v >= b - rest  ->  lower bound
      } else {
        uppers.push_back(r);
      }
    }
    std::set<std::string> seen;
    for (auto& k : keep) seen.insert(detail::row_key(k));
    for (auto& lo : lowers)
      for (auto& up : uppers) {
        // combine with positive multipliers 1/lo.c[v] and -1/up.c[v]
        Rat a = lo.c[v].inv();
        Rat b = -(up.c[v].inv());
        FmRow nr;
        nr.c.assign(m, Rat(0));
        for (int t = 0; t < m; ++t) nr.c[t] = a * lo.c[t] + b * up.c[t];
        nr.b = a * lo.b + b * up.b;
        nr.rel = (lo.rel == Rel::Gt || up.rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
        nr.combo.assign(norig, Rat(0));
        for (size_t t = 0; t < norig; ++t) nr.combo[t] = a * lo.combo[t] + b * up.combo[t];
        bool constant_row = true;
        for (auto& x : nr.c)
          if (!x.is_zero()) {
            constant_row = false;
            break;
          }
        if (constant_row) {
          bool ok = nr.rel == Rel::Gt ? (Rat(0) > nr.b) : (Rat(0) >= nr.b);
          if (!ok) {
            contradiction_from(nr);
            return res;
          }
          continue;
        }
        detail::scale_primitive(nr);
        if (seen.insert(detail::row_key(nr)).second) keep.push_back(std::move(nr));
      }
    step.lowers = std::move(lowers);
    step.uppers = std::move(uppers);
    steps.push_back(std::move(step));
    rows = std::move(keep);
    eliminated[v] = true;
  }

  // whatever is left is constant
  for (auto& r : rows) {
    bool ok = r.rel == Rel::Gt   ? (Rat(0) > r.b)
              : r.rel == Rel::Ge ? (Rat(0) >= r.b)
                                 : r.b.is_zero();
    if (!ok) {
      contradiction_from(r);
      return res;
    }
  }

  // back-substitute, reverse elimination order
  RatVec w(m);
  auto eval_bound = [&](const FmRow& r, int v) {
    // r.c[v] w_v rel b - sum_{t != v} c_t w_t  (solved form)
    Rat rest = r.b;
    for (int t = 0; t < m; ++t)
      if (t != v && !r.c[t].is_zero()) rest -= r.c[t] * w[t];
    return rest / r.c[v];
  };
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    int v = it->var;
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (auto& r : it->lowers) {
      Rat b = eval_bound(r, v);
      bool strict = r.rel == Rel::Gt;
      if (!has_lo || b > lo || (b == lo && strict)) {
        lo = b;
        lo_strict = strict;
        has_lo = true;
      }
    }
    for (auto& r : it->uppers) {
      Rat b = eval_bound(r, v);  // negative leading coefficient flips to upper bound
      bool strict = r.rel == Rel::Gt;
      if (!has_hi || b < hi || (b == hi && strict)) {
        hi = b;
        hi_strict = strict;
        has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      if (lo > hi || (lo == hi && (lo_strict || hi_strict)))
        throw error("fm_feasible: empty interval after feasible elimination");
      w[v] = lo == hi ? lo : (lo + hi) / Rat(2);
    } else if (has_lo) {
      w[v] = lo_strict ? lo + Rat(1) : lo;
    } else if (has_hi) {
      w[v] = hi_strict ? hi - Rat(1) : hi;
    } else {
      w[v] = Rat(0);
    }
  }
  for (auto it = substitutions.rbegin(); it != substitutions.rend(); ++it) {
    Rat val = it->expr_const;
    for (int t = 0; t < m; ++t)
      if (!it->expr_coeffs[t].is_zero()) val += it->expr_coeffs[t] * w[t];
    w[it->var] = val;
  }

  // exact verification of the witness
  for (auto& c : sys.constraints) {
    Rat lhs;
    for (int t = 0; t < m; ++t)
      if (!c.coeffs[t].is_zero()) lhs += c.coeffs[t] * w[t];
    bool ok = c.rel == Rel::Gt ? (lhs > c.constant)
              : c.rel == Rel::Ge ? (lhs >= c.constant)
                                 : (lhs == c.constant);
    if (!ok) throw error("fm_feasible: witness fails a constraint (internal error)");
  }
  res.feasible = true;
  res.witness = std::move(w);
  return res;
}

}  // namespace nilflat
