#pragma once

#include "filtration.hpp"
#include "grading.hpp"

namespace nilflat {

/// Gram matrix of sum e^i (x) e^{n+1-i}.
inline Mat antidiagonal_gram(int n) {
  Mat g(n, n);
  for (int i = 0; i < n; ++i) g(i, n - 1 - i) = Rat(1);
  return g;
}

/// Induced pairing of two-forms: g(a^b, c^d) = g*(a,c)g*(b,d) - g*(a,d)g*(b,c),
/// extended bilinearly. F1, F2 are skew coefficient matrices.
inline Rat two_form_pairing(const Mat& gstar, const Mat& f1, const Mat& f2) {
  int n = gstar.rows();
  Rat out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (f1(i, j).is_zero()) continue;
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (f2(k, l).is_zero()) continue;
          out += f1(i, j) * f2(k, l) *
                 (gstar(i, k) * gstar(j, l) - gstar(i, l) * gstar(j, k));
        }
    }
  return out;
}

/// Pairing on g* (x) g: g(a (x) x, b (x) y) = g*(a,b) g(x,y). A(j,k) is the
/// coefficient of e^j (x) e_k.
inline Rat endomorphism_pairing(const Mat& gstar, const Mat& g, const Mat& a, const Mat& b) {
  int n = g.rows();
  Rat out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (a(j, k).is_zero()) continue;
      for (int j2 = 0; j2 < n; ++j2)
        for (int k2 = 0; k2 < n; ++k2) {
          if (b(j2, k2).is_zero()) continue;
          out += a(j, k) * b(j2, k2) * gstar(j, j2) * g(k, k2);
        }
    }
  return out;
}

struct MetricSpec {
  enum Kind { Explicit, Antidiagonal, SigmaDiagonal };
  Kind kind = Explicit;
  Mat g;  // symmetric, original basis

  // Antidiagonal provenance: position p of the adapted frame holds the column
  // basis_change[:,p-1] in original coordinates; pulling g back along it gives
  // exactly the antidiagonal Gram matrix.
  std::vector<int> order;
  Mat basis_change;

  // SigmaDiagonal provenance
  std::vector<int> sigma;
  RatVec sigma_params;

  static MetricSpec explicit_metric(Mat gram) {
    if (gram.det().is_zero()) throw error("metric is degenerate");
    MetricSpec m;
    m.kind = Explicit;
    m.g = std::move(gram);
    return m;
  }
};

/// sum g_i e^i (x) e^{sigma(i)} for an involution sigma with nonzero
/// sigma-invariant parameters.
inline MetricSpec sigma_diagonal_metric(int n, const std::vector<int>& sigma,
                                        const RatVec& params) {
  if ((int)sigma.size() != n || (int)params.size() != n)
    throw error("sigma metric arity mismatch");
  for (int i = 1; i <= n; ++i) {
    int s = sigma[i - 1];
    if (s < 1 || s > n || sigma[s - 1] != i)
      throw error("sigma is not an order two permutation");
    if (params[i - 1].is_zero()) throw error("sigma metric parameter g" + std::to_string(i) + " is zero");
    if (params[i - 1] != params[s - 1])
      throw error("sigma metric parameters are not sigma-invariant");
  }
  MetricSpec m;
  m.kind = MetricSpec::SigmaDiagonal;
  m.sigma = sigma;
  m.sigma_params = params;
  m.g = Mat(n, n);
  for (int i = 1; i <= n; ++i) m.g(i - 1, sigma[i - 1] - 1) = params[i - 1];
  return m;
}

/// "e^2 . e^6 + e^1 (x) e^1" style rendering of a symmetric matrix, with the
/// symmetric product for off-diagonal terms.
inline std::string metric_human(const Mat& g) {
  std::string out;
  int n = g.rows();
  auto coef_str = [](const Rat& c, bool lead) {
    std::string s;
    if (c == Rat(1)) return std::string(lead ? "" : "+");
    if (c == Rat(-1)) return std::string("-");
    s = (c.sign() > 0 && !lead ? "+" : "") + c.str() + "*";
    return s;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (g(i, j).is_zero()) continue;
      out += coef_str(g(i, j), out.empty());
      out += "e^" + std::to_string(i + 1) + (i == j ? "⊗" : "⊙") +
             "e^" + std::to_string(j + 1);
    }
  return out.empty() ? "0" : out;
}

namespace detail {

/// Rank-zero-trace-square normal forms for an endomorphism pairing of rank r
/// in dimension k: the rank-1 elementary form, the rank-2 rotation-like form,
/// the cyclic form for r >= 3.
inline Mat pairing_normal_form(int k, int r) {
  Mat m(k, k);
  if (r == 0) return m;
  if (r == 1) {
    if (k < 2) throw error("rank one pairing on a line cannot be made isotropic");
    m(0, 1) = Rat(1);
    return m;
  }
  if (r == 2) {
    m(0, 0) = Rat(1);
    m(0, 1) = Rat(1);
    m(1, 0) = Rat(-1);
    m(1, 1) = Rat(1);
    return m;
  }
  for (int s = 0; s < r; ++s) m(s, (s + 1) % r) = Rat(1);
  return m;
}

/// Invertible A, B with A^T M B = target (rank(target) must equal rank(M)).
inline std::pair<Mat, Mat> congruence_to_target(const Mat& m, const Mat& target) {
  int k = m.rows();
  Mat red = m;
  auto pivots = red.rref();
  int r = (int)pivots.size();
  if (r == 0) {
    if (!target.is_zero()) throw error("congruence_to_target rank mismatch");
    return {Mat::identity(k), Mat::identity(k)};
  }
  Mat redt = target;
  auto pivots_t = redt.rref();
  if ((int)pivots_t.size() != r) throw error("congruence_to_target rank mismatch");

  auto factor = [&](const Mat& mat, const std::vector<int>& piv, Mat& red_rows) {
    // mat = X * Y with X = pivot columns, Y = nonzero rref rows
    Mat x(k, r);
    for (int s = 0; s < r; ++s) x.set_col(s, mat.col(piv[s]));
    Mat y(r, k);
    for (int s = 0; s < r; ++s)
      for (int j = 0; j < k; ++j) y(s, j) = red_rows(s, j);
    return std::pair{x, y};
  };
  auto [x, y] = factor(m, pivots, red);
  auto [xt, yt] = factor(target, pivots_t, redt);

  Mat xc = complete_to_basis(x);
  Mat xtc = complete_to_basis(xt);
  Mat at = xtc * *xc.inverse();  // A^T X = X'
  Mat a = at.transpose();
  Mat yc = complete_to_basis(y.transpose()).transpose();
  Mat ytc = complete_to_basis(yt.transpose()).transpose();
  Mat b = *yc.inverse() * ytc;  // Y B = Y'
  if (!(at * m * b == target)) throw error("congruence_to_target failed (internal)");
  return {a, b};
}

/// Darboux canonical form of a skew matrix S: returns a basis (columns) whose
/// first 2r vectors pair as S(x_s, y_s) = 1 in (x_1, y_1, x_2, y_2, ...) order
/// and whose remaining vectors span the kernel, plus the rank r.
inline std::pair<Mat, int> darboux_basis(const Mat& s) {
  int m = s.rows();
  std::vector<RatVec> pool;
  for (int i = 0; i < m; ++i) {
    RatVec u(m);
    u[i] = Rat(1);
    pool.push_back(u);
  }
  auto pair_val = [&](const RatVec& a, const RatVec& b) {
    Rat v;
    for (int i = 0; i < m; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!s(i, j).is_zero() && !b[j].is_zero()) v += a[i] * s(i, j) * b[j];
    }
    return v;
  };
  std::vector<RatVec> symplectic, kernel;
  while (!pool.empty()) {
    int bi = -1, bj = -1;
    for (size_t i = 0; i < pool.size() && bi < 0; ++i)
      for (size_t j = i + 1; j < pool.size(); ++j)
        if (!pair_val(pool[i], pool[j]).is_zero()) {
          bi = (int)i;
          bj = (int)j;
          break;
        }
    if (bi < 0) {
      for (auto& v : pool) kernel.push_back(v);
      break;
    }
    RatVec x = pool[bi], y = pool[bj];
    Rat c = pair_val(x, y).inv();
    for (int t = 0; t < m; ++t) y[t] *= c;  // S(x, y) = 1
    std::vector<RatVec> rest;
    for (size_t t = 0; t < pool.size(); ++t) {
      if ((int)t == bi || (int)t == bj) continue;
      RatVec v = pool[t];
      Rat a = pair_val(x, v), b = pair_val(y, v);
      // v -> v - S(x,v) y + S(y,v) x  kills both pairings
      for (int q = 0; q < m; ++q) v[q] = v[q] - a * y[q] + b * x[q];
      rest.push_back(std::move(v));
    }
    symplectic.push_back(x);
    symplectic.push_back(y);
    pool = std::move(rest);
  }
  int r = (int)symplectic.size() / 2;
  std::vector<RatVec> cols = symplectic;
  for (auto& v : kernel) cols.push_back(v);
  // drop dependent kernel vectors (pool reductions can create them)
  Mat full = from_columns(cols, m);
  if (full.rank() != m) {
    std::vector<RatVec> indep = symplectic;
    for (auto& v : kernel) {
      auto trial = indep;
      trial.push_back(v);
      if (from_columns(trial, m).rank() == (int)trial.size()) indep.push_back(v);
    }
    cols = indep;
  }
  if ((int)cols.size() != m) throw error("darboux_basis lost rank (internal)");
  return {from_columns(cols, m), r};
}

}  // namespace detail

/// Bases of U and W (columns of the returned matrices, in the input
/// coordinates of U and W) such that the split pairing g(u_s, w_t) = delta_st
/// with U, W isotropic makes F isotropic. F is a skew matrix on U (+) W with
/// U = coordinates 0..m-1, W = m..2m-1, and must lie in U* ^ W*.
struct SplitBases {
  Mat u, w;
  int rank = 0;
  Mat realized;  // F(u_s, w_t) in the new bases: the zero-trace-square normal form
};

inline SplitBases isotropic_split_metric(const Mat& f, int m) {
  if (f.rows() != 2 * m) throw error("isotropic_split_metric shape mismatch");
  for (int i = 0; i < 2 * m; ++i)
    for (int j = i + 1; j < 2 * m; ++j)
      if (!f(i, j).is_zero() && (i < m) == (j < m))
        throw error("two-form has components outside U* ^ W*");
  Mat pairing(m, m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) pairing(s, t) = f(s, m + t);
  int r = pairing.rank();
  if (r == 1 && m == 1)
    throw error("rank one pairing on a line cannot be made isotropic");
  Mat normal = detail::pairing_normal_form(m, r);
  auto [a, b] = detail::congruence_to_target(pairing, normal);
  return {a, b, r, normal};
}

/// Basis (columns) of a space of dimension other than two in which the
/// antidiagonal metric of that dimension makes the given two-form isotropic.
/// Splits off a Darboux half-pairing and delegates to the U (+) W case; in
/// dimension three the form becomes a multiple of the top-left wedge, whose
/// mirror slot stays empty.
inline Mat isotropic_any_basis(const Mat& f) {
  int m = f.rows();
  if (f.is_zero()) return Mat::identity(m);
  if (m == 2)
    throw error("a nonzero two-form on a plane cannot be isotropic for a split pairing");
  auto [dar, r] = detail::darboux_basis(f);
  if (m == 3) return dar;  // x, y, kernel: form is a multiple of e^{12}
  int k = m / 2;
  // columns of dar are x_1, y_1, ..., x_r, y_r then the kernel
  std::vector<RatVec> uprime, wprime;
  for (int s = 0; s < r; ++s) {
    uprime.push_back(dar.col(2 * s));
    wprime.push_back(dar.col(2 * s + 1));
  }
  int z = 2 * r;
  while ((int)uprime.size() < k) uprime.push_back(dar.col(z++));
  while ((int)wprime.size() < k) wprime.push_back(dar.col(z++));
  auto pair_val = [&](const RatVec& a, const RatVec& b) {
    Rat v;
    for (int i = 0; i < m; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < m; ++j)
        if (!f(i, j).is_zero() && !b[j].is_zero()) v += a[i] * f(i, j) * b[j];
    }
    return v;
  };
  Mat split(2 * k, 2 * k);
  for (int s = 0; s < k; ++s)
    for (int t = 0; t < k; ++t) {
      Rat v = pair_val(uprime[s], wprime[t]);
      split(s, k + t) = v;
      split(k + t, s) = -v;
    }
  auto sb = isotropic_split_metric(split, k);
  Mat u = from_columns(uprime, m) * sb.u;
  Mat w = from_columns(wprime, m) * sb.w;
  // slots 1..k hold the U part, their mirrors the W part, the middle a kernel vector
  std::vector<RatVec> cols(m);
  for (int s = 0; s < k; ++s) {
    cols[s] = u.col(s);
    cols[m - 1 - s] = w.col(s);
  }
  if (m % 2) cols[k] = dar.col(m - 1);
  Mat change = from_columns(cols, m);
  Mat check = change.transpose() * f * change;
  if (!two_form_pairing(antidiagonal_gram(m), check, check).is_zero())
    throw error("isotropic_any_basis failed (internal)");
  return change;
}

/// Change of basis (columns, block-diagonal over the layers of `weights`)
/// making the two-form F isotropic for the antidiagonal metric of the new
/// basis. F must lie in the sum of V_alpha ^ V_beta over alpha + beta =
/// target. Positions are paired p <-> n+1-p.
inline Mat adapt_basis_isotropic(const std::vector<Weight>& weights, const Mat& f,
                                 const Weight& target) {
  int n = (int)weights.size();
  auto wt = [&](int p) -> const Weight& { return weights[p - 1]; };  // 1-based
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!f(i - 1, j - 1).is_zero() && cmp(wt(i) + wt(j), target) != 0)
        throw error("two-form has a component off the target weight");

  std::map<Weight, std::vector<int>, WeightLess> layers;
  for (int p = 1; p <= n; ++p) layers[wt(p)].push_back(p);

  Mat change = Mat::identity(n);
  // writes layer-coordinate vectors (over the positions `pos`) into `change`
  auto assign = [&](const std::vector<int>& pos, const std::vector<std::pair<int, RatVec>>& cols) {
    for (auto& [target_pos, v] : cols) {
      RatVec col(n);
      for (size_t t = 0; t < pos.size(); ++t) col[pos[t] - 1] = v[t];
      change.set_col(target_pos - 1, col);
    }
  };
  auto layer_form = [&](const std::vector<int>& pos) {
    Mat s((int)pos.size(), (int)pos.size());
    for (size_t a = 0; a < pos.size(); ++a)
      for (size_t b = 0; b < pos.size(); ++b) s((int)a, (int)b) = f(pos[a] - 1, pos[b] - 1);
    return s;
  };
  auto unit = [](int m, int i) {
    RatVec v(m);
    v[i] = Rat(1);
    return v;
  };
  // complete `fixed` to a basis of Q^m and hand the completion to `spots`
  auto fill_complement = [&](const std::vector<int>& pos, std::vector<RatVec> fixed,
                             const std::vector<int>& spots) {
    int m = (int)pos.size();
    Mat comp = complete_to_basis(from_columns(fixed, m));
    std::vector<std::pair<int, RatVec>> cols;
    for (size_t t = 0; t < spots.size(); ++t)
      cols.emplace_back(spots[t], comp.col((int)fixed.size() + (int)t));
    assign(pos, cols);
  };

  std::set<std::string> processed;
  auto key_of = [](const Weight& w) { return str(w); };

  for (auto& [alpha, pos_alpha] : layers) {
    if (processed.count(key_of(alpha))) continue;
    Weight beta = target - alpha;
    auto itb = layers.find(beta);
    if (itb == layers.end()) {
      processed.insert(key_of(alpha));
      continue;
    }
    if (cmp(alpha, beta) == 0) {
      processed.insert(key_of(alpha));
      // pairing stays inside the layer
      const auto& pos = pos_alpha;
      int m = (int)pos.size();
      std::vector<int> matched, loose;
      for (int p : pos)
        ((cmp(wt(hat_index(n, p)), alpha) == 0) ? matched : loose).push_back(p);
      int mi = (int)matched.size();
      if (mi <= 1) continue;
      Mat s = layer_form(pos);
      auto idx_of = [&](int p) {
        return (int)(std::find(pos.begin(), pos.end(), p) - pos.begin());
      };
      if (mi == 2) {
        if (s.is_zero()) continue;
        if (m < 3)
          throw error("pair (" + std::to_string(matched[0]) + "," + std::to_string(matched[1]) +
                      "): weight needs multiplicity greater than two");
        // a two-dimensional subspace on which the form vanishes
        RatVec v1(m), v2(m);
        auto kern = s.kernel_basis();
        if (!kern.empty()) {
          v1 = kern[0];
          for (int e = 0; e < m; ++e) {
            std::vector<RatVec> trial = {v1, unit(m, e)};
            if (from_columns(trial, m).rank() == 2) {
              v2 = unit(m, e);
              break;
            }
          }
        } else {
          v1 = unit(m, 0);
          Mat row(1, m);
          for (int j = 0; j < m; ++j) row(0, j) = s(0, j);
          for (auto& kv : row.kernel_basis()) {
            std::vector<RatVec> trial = {v1, kv};
            if (from_columns(trial, m).rank() == 2) {
              v2 = kv;
              break;
            }
          }
        }
        if (is_zero(v2)) throw error("isotropic plane construction failed (internal)");
        assign(pos, {{matched[0], v1}, {matched[1], v2}});
        fill_complement(pos, {v1, v2}, loose);
        continue;
      }
      // matched block of size >= 3: the positions are hat-closed, so the
      // sorted block inherits the antidiagonal pairing of its own dimension
      Mat sm(mi, mi);
      for (int a = 0; a < mi; ++a)
        for (int b = 0; b < mi; ++b) sm(a, b) = f(matched[a] - 1, matched[b] - 1);
      Mat cb = isotropic_any_basis(sm);
      std::vector<std::pair<int, RatVec>> cols;
      std::vector<RatVec> used;
      for (int s2 = 0; s2 < mi; ++s2) {
        RatVec v(m);
        for (int t = 0; t < mi; ++t)
          if (!cb(t, s2).is_zero()) v[idx_of(matched[t])] += cb(t, s2);
        cols.emplace_back(matched[s2], v);
        used.push_back(v);
      }
      assign(pos, cols);
      fill_complement(pos, used, loose);
      continue;
    }
    // alpha != beta
    processed.insert(key_of(alpha));
    processed.insert(key_of(beta));
    const auto& pos_beta = itb->second;
    std::vector<int> matched;
    for (int p : pos_alpha)
      if (cmp(wt(hat_index(n, p)), beta) == 0) matched.push_back(p);
    if (matched.empty()) continue;
    int ma = (int)pos_alpha.size(), mb = (int)pos_beta.size();
    auto aidx = [&](int p) {
      return (int)(std::find(pos_alpha.begin(), pos_alpha.end(), p) - pos_alpha.begin());
    };
    auto bidx = [&](int p) {
      return (int)(std::find(pos_beta.begin(), pos_beta.end(), p) - pos_beta.begin());
    };
    if (matched.size() == 1) {
      int p = matched[0], ph = hat_index(n, p);
      if (f(p - 1, ph - 1).is_zero()) continue;
      if (ma >= 2) {
        Mat row(1, ma);
        for (int t = 0; t < ma; ++t) row(0, t) = f(pos_alpha[t] - 1, ph - 1);
        auto kern = row.kernel_basis();
        RatVec v = kern.at(0);
        std::vector<int> others;
        for (int q : pos_alpha)
          if (q != p) others.push_back(q);
        assign(pos_alpha, {{p, v}});
        fill_complement(pos_alpha, {v}, others);
      } else if (mb >= 2) {
        Mat row(1, mb);
        for (int t = 0; t < mb; ++t) row(0, t) = f(p - 1, pos_beta[t] - 1);
        auto kern = row.kernel_basis();
        RatVec v = kern.at(0);
        std::vector<int> others;
        for (int q : pos_beta)
          if (q != ph) others.push_back(q);
        assign(pos_beta, {{ph, v}});
        fill_complement(pos_beta, {v}, others);
      } else {
        throw error("pair (" + std::to_string(p) + "," + std::to_string(ph) +
                    "): both weights have multiplicity one with nonzero pairing");
      }
      continue;
    }
    // matched block of size >= 2 across the two layers
    int mi = (int)matched.size();
    Mat split(2 * mi, 2 * mi);
    for (int s = 0; s < mi; ++s)
      for (int t = 0; t < mi; ++t) {
        Rat v = f(matched[s] - 1, hat_index(n, matched[t]) - 1);
        split(s, mi + t) = v;
        split(mi + t, s) = -v;
      }
    if (split.is_zero()) continue;
    auto sb = isotropic_split_metric(split, mi);
    std::vector<std::pair<int, RatVec>> cols_a, cols_b;
    std::vector<RatVec> used_a, used_b;
    for (int s = 0; s < mi; ++s) {
      RatVec va(ma), vb(mb);
      for (int t = 0; t < mi; ++t) {
        if (!sb.u(t, s).is_zero()) va[aidx(matched[t])] += sb.u(t, s);
        if (!sb.w(t, s).is_zero()) vb[bidx(hat_index(n, matched[t]))] += sb.w(t, s);
      }
      cols_a.emplace_back(matched[s], va);
      cols_b.emplace_back(hat_index(n, matched[s]), vb);
      used_a.push_back(va);
      used_b.push_back(vb);
    }
    std::vector<int> loose_a, loose_b;
    for (int q : pos_alpha)
      if (std::find(matched.begin(), matched.end(), q) == matched.end()) loose_a.push_back(q);
    for (int q : pos_beta) {
      bool is_matched = false;
      for (int p : matched) is_matched |= q == hat_index(n, p);
      if (!is_matched) loose_b.push_back(q);
    }
    assign(pos_alpha, cols_a);
    assign(pos_beta, cols_b);
    fill_complement(pos_alpha, used_a, loose_a);
    fill_complement(pos_beta, used_b, loose_b);
  }

  // exact isotropy of F for the antidiagonal metric of the new basis
  Mat fnew = change.transpose() * f * change;
  Mat anti = antidiagonal_gram(n);
  if (!two_form_pairing(anti, fnew, fnew).is_zero())
    throw error("adapted basis does not make the two-form isotropic "
                "(multiplicity hypotheses violated)");
  return change;
}

namespace detail {

inline MetricSpec antidiagonal_metric_from(const LieAlgebra& L, const std::vector<int>& order,
                                           const std::vector<Weight>& pos_weights, const Mat& f) {
  int n = L.n;
  Mat block = adapt_basis_isotropic(pos_weights, f, pos_weights[n - 1]);
  Mat perm(n, n);
  for (int p = 1; p <= n; ++p) perm(order[p - 1] - 1, p - 1) = Rat(1);
  Mat frame = perm * block;  // adapted frame in original coordinates
  Mat frame_inv = *frame.inverse();
  MetricSpec m;
  m.kind = MetricSpec::Antidiagonal;
  m.order = order;
  m.basis_change = frame;
  m.g = frame_inv.transpose() * antidiagonal_gram(n) * frame_inv;
  return m;
}

}  // namespace detail

/// Ricci-flat metric from a weight sequence satisfying the grading conditions:
/// reorder, make the top differential isotropic layer by layer, pull the
/// antidiagonal metric back to the original basis.
inline MetricSpec build_grading_metric(const LieAlgebra& L, const Grading& g,
                                       const WeightSequence& s) {
  auto check = check_G_sequence(g, s);
  if (!check.ok)
    throw error("weight sequence fails " + check.condition + ": " + check.message);
  LieAlgebra re = reorder_basis(L, s.order);
  int n = L.n;
  Mat f(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      f(i - 1, j - 1) = re.a(n, i, j);
      f(j - 1, i - 1) = -re.a(n, i, j);
    }
  return detail::antidiagonal_metric_from(L, s.order, s.weights, f);
}

/// Ricci-flat metric from a filtration witness: project the top differential
/// onto the components whose weights sum to the top weight (the part living in
/// the induced vector-space grading), then adapt as in the graded case. The
/// components below the top weight sum cannot pair with anything in any
/// adapted basis; keeping the full top-weight part is what makes the
/// layer-by-layer construction sound, since basis changes inside a layer move
/// coefficients between mirror-matched and unmatched slots of equal weight.
inline MetricSpec build_filtration_metric(const LieAlgebra& L, const FiltrationWitness& w) {
  auto check = check_F_assignment(L, w.order, w.weights);
  if (!check.ok)
    throw error("filtration weights fail " + check.condition + ": " + check.message);
  LieAlgebra re = reorder_basis(L, w.order);
  int n = L.n;
  std::vector<Weight> pw;
  for (auto& x : w.weights) pw.push_back({x});
  Mat f(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (re.a(n, i, j).is_zero()) continue;
      if (w.weights[i - 1] + w.weights[j - 1] != w.weights[n - 1]) continue;
      f(i - 1, j - 1) = re.a(n, i, j);
      f(j - 1, i - 1) = -re.a(n, i, j);
    }
  return detail::antidiagonal_metric_from(L, w.order, pw, f);
}

}  // namespace nilflat
