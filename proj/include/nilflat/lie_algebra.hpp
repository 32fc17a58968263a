#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>

#include "matrix.hpp"

namespace nilflat {

struct parse_error : error {
  size_t position;
  parse_error(const std::string& msg, size_t pos)
      : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

inline int hat_index(int n, int i) { return n + 1 - i; }

/// Nilpotent Lie algebra given by the differentials of a coframe:
/// de^k = sum_{i<j} a^k_{ij} e^i ^ e^j. Convention da(x,y) = -a([x,y]),
/// so [e_i,e_j] = -sum_k a^k_{ij} e_k.
struct LieAlgebra {
  int n = 0;
  std::vector<Mat> diff;             // diff[k-1] is n x n skew, entry (i-1,j-1) = a^k_{ij}
  std::map<std::string, Rat> params; // substitutions applied while parsing

  const Rat& a(int k, int i, int j) const { return diff[k - 1](i - 1, j - 1); }

  /// Coordinates of [e_i, e_j]; component k is -a^k_{ij} (skew in i,j).
  RatVec bracket(int i, int j) const {
    if (i < 1 || i > n || j < 1 || j > n) throw error("bracket index out of range");
    RatVec v(n);
    if (i == j) return v;
    for (int k = 1; k <= n; ++k) v[k - 1] = -a(k, i, j);
    return v;
  }

  /// e_i interior product de^j, as coframe coordinates.
  RatVec contraction(int i, int j) const {
    RatVec v(n);
    for (int m = 1; m <= n; ++m) v[m - 1] = a(j, i, m);
    return v;
  }
};

namespace detail {

inline bool term_key_less(std::pair<int, int> a, std::pair<int, int> b) { return a < b; }

struct Lexer {
  std::string s;
  size_t pos = 0;
  explicit Lexer(std::string_view raw) {
    // normalize UTF-8 minus to '-'
    for (size_t i = 0; i < raw.size(); ++i) {
      unsigned char c = raw[i];
      if (c == 0xe2 && i + 2 < raw.size() && (unsigned char)raw[i + 1] == 0x88 &&
          (unsigned char)raw[i + 2] == 0x92) {
        s.push_back('-');
        i += 2;
      } else {
        s.push_back((char)c);
      }
    }
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
};

}  // namespace detail

/// Parses a comma-separated list of differentials in the coframe notation used
/// for nilpotent Lie algebras: each entry is "0" or a sum of terms
/// "[coef] e^{ij}" (single-digit indices; "e^{i,j}" for n >= 10). Coefficients
/// are rational literals or declared parameter names, substituted from `subst`
/// (default value 2 when missing).
inline LieAlgebra parse_algebra(std::string_view text,
                                const std::map<std::string, Rat>& subst = {}) {
  detail::Lexer lx(text);
  // split on top-level commas is entangled with e^{i,j}; parse term-by-term instead.
  std::vector<std::vector<std::tuple<Rat, int, int>>> entries;  // (coef, i, j)
  std::map<std::string, Rat> used_params;

  // the braces hold either exactly two digits or two comma-separated integers
  auto parse_wedge_indices = [&](size_t epos) -> std::pair<int, int> {
    auto close = lx.s.find('}', lx.pos);
    if (close == std::string::npos) throw parse_error("expected '}'", epos);
    std::string body = lx.s.substr(lx.pos, close - lx.pos);
    lx.pos = close + 1;
    auto digits = [&](const std::string& t) {
      if (t.empty()) throw parse_error("expected index", epos);
      for (char c : t)
        if (!std::isdigit((unsigned char)c)) throw parse_error("expected index digit", epos);
      return std::atoi(t.c_str());
    };
    if (auto comma = body.find(','); comma != std::string::npos)
      return {digits(body.substr(0, comma)), digits(body.substr(comma + 1))};
    if (body.size() != 2)
      throw parse_error("indexes above 9 need the e^{i,j} form", epos);
    return {digits(body.substr(0, 1)), digits(body.substr(1, 1))};
  };

  auto parse_entry = [&]() {
    std::vector<std::tuple<Rat, int, int>> terms;
    lx.skip_ws();
    if (lx.peek() == '0') {
      ++lx.pos;
      lx.skip_ws();
      if (lx.peek() != ',' && lx.peek() != '\0')
        throw parse_error("unexpected input after 0", lx.pos);
      entries.push_back(terms);
      return;
    }
    bool first = true;
    while (true) {
      lx.skip_ws();
      Rat coef(1);
      bool neg = false;
      if (lx.eat('+')) {
      } else if (lx.eat('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      first = false;
      lx.skip_ws();
      // optional numeric coefficient
      if (lx.pos < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.pos])) {
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isdigit((unsigned char)lx.s[lx.pos]) || lx.s[lx.pos] == '/'))
          ++lx.pos;
        coef = Rat::parse(lx.s.substr(start, lx.pos - start));
        lx.eat('*');
      }
      lx.skip_ws();
      // optional parameter name (identifier not followed by '^')
      if (lx.pos < lx.s.size() && std::isalpha((unsigned char)lx.s[lx.pos]) &&
          !(lx.s[lx.pos] == 'e' && lx.pos + 1 < lx.s.size() && lx.s[lx.pos + 1] == '^')) {
        size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isalnum((unsigned char)lx.s[lx.pos]) || lx.s[lx.pos] == '_'))
          ++lx.pos;
        std::string name = lx.s.substr(start, lx.pos - start);
        Rat val(2);  // default substitution for declared parameters
        if (auto it = subst.find(name); it != subst.end()) val = it->second;
        used_params[name] = val;
        coef *= val;
        lx.eat('*');
      }
      lx.skip_ws();
      size_t epos = lx.pos;
      if (!(lx.eat('e') && lx.eat('^') && lx.eat('{')))
        throw parse_error("expected e^{..} wedge term", epos);
      auto [i, j] = parse_wedge_indices(epos);
      if (i == j) throw parse_error("repeated index in wedge e^{" + std::to_string(i) +
                                        std::to_string(j) + "}",
                                    epos);
      if (neg) coef = -coef;
      if (i > j) {
        std::swap(i, j);
        coef = -coef;
      }
      terms.emplace_back(coef, i, j);
    }
    entries.push_back(terms);
  };

  parse_entry();
  while (lx.eat(',')) parse_entry();
  lx.skip_ws();
  if (lx.pos != lx.s.size()) throw parse_error("trailing input", lx.pos);

  int n = (int)entries.size();
  if (n < 2 || n > 16) throw error("dimension " + std::to_string(n) + " out of range [2,16]");
  LieAlgebra L;
  L.n = n;
  L.diff.assign(n, Mat(n, n));
  L.params = used_params;
  for (int k = 1; k <= n; ++k)
    for (auto& [coef, i, j] : entries[k - 1]) {
      if (i < 1 || i > n || j < 1 || j > n)
        throw error("index " + std::to_string(std::max(i, j)) + " exceeds n=" + std::to_string(n));
      L.diff[k - 1](i - 1, j - 1) += coef;
      L.diff[k - 1](j - 1, i - 1) -= coef;
    }
  return L;
}

/// Canonical form: terms ordered by (i,j), reduced coefficients, 1 omitted,
/// -1 printed as "-". Uses e^{i,j} when n >= 10.
inline std::string serialize(const LieAlgebra& L) {
  std::string out;
  for (int k = 1; k <= L.n; ++k) {
    if (k > 1) out += ",";
    std::string entry;
    for (int i = 1; i <= L.n; ++i)
      for (int j = i + 1; j <= L.n; ++j) {
        const Rat& c = L.a(k, i, j);
        if (c.is_zero()) continue;
        std::string coef;
        if (c == Rat(-1))
          coef = "-";
        else if (!c.is_one())
          coef = c.str() + "*";
        if (!entry.empty() && coef.rfind('-', 0) != 0) entry += "+";
        entry += coef + "e^{" + std::to_string(i) +
                 (L.n >= 10 ? "," : "") + std::to_string(j) + "}";
      }
    out += entry.empty() ? "0" : entry;
  }
  return out;
}

struct JacobiViolation {
  int k;          // d^2 e^k != 0
  int p, q, r;    // coordinates of the offending 3-form component
  Rat coefficient;
};

/// d^2 = 0 check via de^k -> sum a^k_{ij} (de^i ^ e^j - e^i ^ de^j).
inline std::vector<JacobiViolation> jacobi_check(const LieAlgebra& L) {
  std::vector<JacobiViolation> out;
  int n = L.n;
  for (int k = 1; k <= n; ++k) {
    std::map<std::tuple<int, int, int>, Rat> cube;
    auto add = [&](Rat c, int p, int q, int r) {
      if (p == q || p == r || q == r || c.is_zero()) return;
      // sort (p,q,r) with sign
      if (p > q) { std::swap(p, q); c = -c; }
      if (q > r) { std::swap(q, r); c = -c; }
      if (p > q) { std::swap(p, q); c = -c; }
      cube[{p, q, r}] += c;
    };
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        const Rat& akij = L.a(k, i, j);
        if (akij.is_zero()) continue;
        for (int p = 1; p <= n; ++p)
          for (int q = p + 1; q <= n; ++q) {
            const Rat& aipq = L.a(i, p, q);
            if (!aipq.is_zero()) add(akij * aipq, p, q, j);
            const Rat& ajpq = L.a(j, p, q);
            if (!ajpq.is_zero()) add(-(akij * ajpq), i, p, q);
          }
      }
    for (auto& [key, c] : cube)
      if (!c.is_zero())
        out.push_back({k, std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
  }
  return out;
}

struct NiceViolation {
  enum Kind { BracketNotOnLine, ContractionNotOnLine } kind;
  int i, j;
};

struct NiceReport {
  bool is_nice = true;
  std::vector<NiceViolation> violations;
};

/// A basis is nice when every [e_i,e_j] lies on a single basis line and every
/// e_i -| de^j lies on a single coframe line.
inline NiceReport is_nice_basis(const LieAlgebra& L) {
  NiceReport rep;
  auto count_nonzero = [](const RatVec& v) {
    int c = 0;
    for (auto& x : v)
      if (!x.is_zero()) ++c;
    return c;
  };
  for (int i = 1; i <= L.n; ++i)
    for (int j = i + 1; j <= L.n; ++j)
      if (count_nonzero(L.bracket(i, j)) > 1)
        rep.violations.push_back({NiceViolation::BracketNotOnLine, i, j});
  for (int i = 1; i <= L.n; ++i)
    for (int j = 1; j <= L.n; ++j)
      if (count_nonzero(L.contraction(i, j)) > 1)
        rep.violations.push_back({NiceViolation::ContractionNotOnLine, i, j});
  rep.is_nice = rep.violations.empty();
  return rep;
}

/// Rewrites L in the frame E_j = sum_i M(i,j) e_i. Columns of M are the new
/// frame in the old basis.
inline LieAlgebra change_basis(const LieAlgebra& L, const Mat& m) {
  if (m.rows() != L.n || m.cols() != L.n) throw error("basis change shape mismatch");
  auto minv = m.inverse();
  if (!minv) throw error("basis change matrix is singular");
  int n = L.n;
  LieAlgebra out;
  out.n = n;
  out.diff.assign(n, Mat(n, n));
  out.params = L.params;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      // [E_i, E_j] in old coordinates
      RatVec v(n);
      for (int p = 1; p <= n; ++p) {
        if (m(p - 1, i - 1).is_zero()) continue;
        for (int q = 1; q <= n; ++q) {
          if (m(q - 1, j - 1).is_zero()) continue;
          Rat c = m(p - 1, i - 1) * m(q - 1, j - 1);
          RatVec br = L.bracket(p, q);
          for (int t = 0; t < n; ++t) v[t] += c * br[t];
        }
      }
      RatVec w = minv->apply(v);  // new coordinates
      for (int k = 1; k <= n; ++k) {
        out.diff[k - 1](i - 1, j - 1) = -w[k - 1];
        out.diff[k - 1](j - 1, i - 1) = w[k - 1];
      }
    }
  return out;
}

/// Reorders the basis: position p holds e_{order[p-1]}.
inline LieAlgebra reorder_basis(const LieAlgebra& L, const std::vector<int>& order) {
  Mat perm(L.n, L.n);
  for (int p = 1; p <= L.n; ++p) perm(order[p - 1] - 1, p - 1) = Rat(1);
  return change_basis(L, perm);
}

/// Lower central series reaches zero.
inline bool is_nilpotent(const LieAlgebra& L) {
  int n = L.n;
  // current term spanned by columns of S
  Mat s = Mat::identity(n);
  int dim = n;
  while (dim > 0) {
    std::vector<RatVec> gens;
    for (int i = 1; i <= n; ++i)
      for (int c = 0; c < s.cols(); ++c) {
        RatVec v(n);
        for (int q = 1; q <= n; ++q) {
          if (s(q - 1, c).is_zero()) continue;
          RatVec br = L.bracket(i, q);
          for (int t = 0; t < n; ++t) v[t] += s(q - 1, c) * br[t];
        }
        if (!is_zero(v)) gens.push_back(v);
      }
    if (gens.empty()) return true;
    Mat next = from_columns(gens, n);
    int next_dim = next.rank();
    if (next_dim >= dim) return false;
    // reduce to a basis
    Mat rr = next.transpose();
    rr.rref();
    std::vector<RatVec> basis;
    for (int i = 0; i < rr.rows(); ++i) {
      RatVec row = rr.row(i);
      if (!is_zero(row)) basis.push_back(row);
    }
    s = from_columns(basis, n);
    dim = next_dim;
  }
  return true;
}

}  // namespace nilflat
