#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nilflat {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Always stored reduced, denominator >= 1.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}
  Rat(long num, long den) {
    if (den == 0) throw error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rat(const mpz_class& n) : v_(n) {}

  /// Accepts "p", "p/q", optional leading sign, ASCII '-' or UTF-8 minus.
  static Rat parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  Rat abs() const { Rat r; r.v_ = ::abs(v_); return r; }
  Rat inv() const {
    if (is_zero()) throw error("inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
  }

  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

private:
  mpq_class v_;
};

inline Rat Rat::parse(std::string_view s) {
  std::string t;
  t.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    unsigned char c = s[i];
    if (c == ' ' || c == '\t') continue;
    // UTF-8 minus sign U+2212
    if (c == 0xe2 && i + 2 < s.size() && (unsigned char)s[i + 1] == 0x88 &&
        (unsigned char)s[i + 2] == 0x92) {
      t.push_back('-');
      i += 2;
      continue;
    }
    t.push_back((char)c);
  }
  if (t.empty()) throw error("empty rational literal");
  bool neg = false;
  size_t pos = 0;
  if (t[pos] == '+' || t[pos] == '-') neg = t[pos++] == '-';
  auto digits = [&](std::string& out) {
    size_t start = pos;
    while (pos < t.size() && std::isdigit((unsigned char)t[pos])) ++pos;
    if (pos == start) throw error("bad rational literal '" + std::string(s) + "'");
    out = t.substr(start, pos - start);
  };
  std::string ns, ds = "1";
  digits(ns);
  if (pos < t.size() && t[pos] == '/') {
    ++pos;
    digits(ds);
  }
  if (pos != t.size()) throw error("bad rational literal '" + std::string(s) + "'");
  mpq_class q{mpz_class(ns), mpz_class(ds)};
  if (q.get_den() == 0) throw error("rational with zero denominator");
  q.canonicalize();
  Rat r(q);
  return neg ? -r : r;
}

using RatVec = std::vector<Rat>;

inline int cmp(const Rat& a, const Rat& b) { return ::cmp(a.raw(), b.raw()); }

inline int cmp(const RatVec& a, const RatVec& b) {
  size_t m = std::min(a.size(), b.size());
  for (size_t i = 0; i < m; ++i)
    if (int c = cmp(a[i], b[i]); c != 0) return c;
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

inline bool is_zero(const RatVec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline std::string str(const RatVec& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

/// Smallest positive scalar turning all entries into integers (lcm of denominators).
inline Rat integerizing_factor(const RatVec& v) {
  mpz_class l = 1;
  for (auto& x : v) {
    mpz_class d = x.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return Rat(l);
}

}  // namespace nilflat
