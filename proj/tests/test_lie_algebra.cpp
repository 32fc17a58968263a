#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nilflat/lie_algebra.hpp>
#include <random>

#include "fixtures.hpp"

using namespace nilflat;

TEST_CASE("parse the Heisenberg coframe") {
  auto L = parse_algebra("0,0,e^{12}");
  CHECK(L.n == 3);
  CHECK(L.a(3, 1, 2) == Rat(1));
  CHECK(L.a(3, 2, 1) == Rat(-1));
  CHECK(L.a(1, 1, 2).is_zero());
}

TEST_CASE("parse the abelian plane") {
  auto L = parse_algebra("0,0");
  CHECK(L.n == 2);
  for (int k = 1; k <= 2; ++k) CHECK(L.diff[k - 1].is_zero());
}

TEST_CASE("parse a two-term differential") {
  auto L = parse_algebra(fixtures::dim6_graded);
  CHECK(L.n == 6);
  CHECK(L.a(6, 2, 5) == Rat(1));
  CHECK(L.a(6, 1, 4) == Rat(1));
  CHECK(L.a(6, 1, 2).is_zero());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_algebra("0,e^{13}"), "index 3 exceeds n=2", error);
  CHECK_THROWS_AS(parse_algebra("0,0,e^{11}"), parse_error);
  CHECK_THROWS_AS(parse_algebra("0,0,e^{1"), parse_error);
  CHECK_THROWS_AS(parse_algebra("0,0,+"), parse_error);
  CHECK_THROWS_AS(parse_algebra("0"), error);  // dimension too small
}

TEST_CASE("parameters substitute, defaulting to 2") {
  auto L = parse_algebra("0,0,l*e^{12}", {{"l", Rat(5)}});
  CHECK(L.a(3, 1, 2) == Rat(5));
  CHECK(L.params.at("l") == Rat(5));
  auto M = parse_algebra("0,0,l*e^{12}");
  CHECK(M.a(3, 1, 2) == Rat(2));
}

TEST_CASE("coefficients, signs, unicode minus") {
  auto L = parse_algebra("0,0,-e^{12},3/2*e^{13},−e^{23}+2e^{13}");
  CHECK(L.a(3, 1, 2) == Rat(-1));
  CHECK(L.a(4, 1, 3) == Rat(3, 2));
  CHECK(L.a(5, 2, 3) == Rat(-1));
  CHECK(L.a(5, 1, 3) == Rat(2));
  // reversed index order flips the sign
  auto M = parse_algebra("0,0,e^{21}");
  CHECK(M.a(3, 1, 2) == Rat(-1));
}

TEST_CASE("serialize is canonical and parse round-trips it") {
  for (auto s : fixtures::cross_oracle_pool) {
    auto L = parse_algebra(s);
    auto round = parse_algebra(serialize(L));
    CHECK(round.n == L.n);
    for (int k = 0; k < L.n; ++k) CHECK(round.diff[k] == L.diff[k]);
  }
  CHECK(serialize(parse_algebra("0,0,e^{12}")) == "0,0,e^{12}");
  CHECK(serialize(parse_algebra("0,0,-e^{12}+3/2*e^{13},0")) == "0,0,-e^{12}+3/2*e^{13},0");
}

TEST_CASE("bracket follows the sign convention") {
  auto heis = parse_algebra(fixtures::heisenberg);
  RatVec b = heis.bracket(1, 2);
  CHECK(b == RatVec{Rat(0), Rat(0), Rat(-1)});
  CHECK(heis.bracket(2, 1) == RatVec{Rat(0), Rat(0), Rat(1)});
  CHECK(is_zero(heis.bracket(2, 2)));
  CHECK_THROWS_AS(heis.bracket(0, 1), error);

  auto abelian = parse_algebra("0,0,0,0");
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) CHECK(is_zero(abelian.bracket(i, j)));

  auto L = parse_algebra(fixtures::dim6_graded);
  RatVec v = L.bracket(2, 5);
  for (int k = 1; k <= 6; ++k) CHECK(v[k - 1] == (k == 6 ? Rat(-1) : Rat(0)));
}

TEST_CASE("jacobi check accepts the fixture algebras") {
  CHECK(jacobi_check(parse_algebra(fixtures::heisenberg)).empty());
  CHECK(jacobi_check(parse_algebra(fixtures::dim6_graded)).empty());
  for (auto& s : fixtures::no_filtration) CHECK(jacobi_check(parse_algebra(s)).empty());
  CHECK(jacobi_check(parse_algebra(fixtures::dim9_obstructed_a)).empty());
  CHECK(jacobi_check(parse_algebra(fixtures::dim9_obstructed_b)).empty());
}

TEST_CASE("jacobi check reports d^2 e^6 != 0") {
  auto bad = parse_algebra("0,0,0,e^{12},e^{13},e^{45}");
  auto violations = jacobi_check(bad);
  REQUIRE(!violations.empty());
  for (auto& v : violations) CHECK(v.k == 6);
  // d(e^45) = e^{12}^e^5 - e^4^e^{13}
  bool saw125 = false, saw134 = false;
  for (auto& v : violations) {
    if (v.p == 1 && v.q == 2 && v.r == 5) {
      saw125 = true;
      CHECK(v.coefficient == Rat(1));
    }
    if (v.p == 1 && v.q == 3 && v.r == 4) {
      saw134 = true;
      CHECK(v.coefficient == Rat(-1));
    }
  }
  CHECK(saw125);
  CHECK(saw134);
}

TEST_CASE("jacobi check agrees with the cyclic bracket sum") {
  auto jacobi_by_brackets = [](const LieAlgebra& L) {
    for (int i = 1; i <= L.n; ++i)
      for (int j = i + 1; j <= L.n; ++j)
        for (int k = j + 1; k <= L.n; ++k) {
          RatVec sum(L.n);
          auto acc = [&](int a, int b, int c) {
            RatVec inner = L.bracket(a, b);
            for (int p = 1; p <= L.n; ++p) {
              if (inner[p - 1].is_zero()) continue;
              RatVec outer = L.bracket(p, c);
              for (int t = 0; t < L.n; ++t) sum[t] += inner[p - 1] * outer[t];
            }
          };
          acc(i, j, k);
          acc(j, k, i);
          acc(k, i, j);
          if (!is_zero(sum)) return false;
        }
    return true;
  };
  for (auto& s : fixtures::cross_oracle_pool) {
    auto L = parse_algebra(s);
    CHECK(jacobi_by_brackets(L) == jacobi_check(L).empty());
  }
  auto bad = parse_algebra("0,0,0,e^{12},e^{13},e^{45}");
  CHECK(jacobi_by_brackets(bad) == jacobi_check(bad).empty());
}

TEST_CASE("nice basis recognition") {
  CHECK(is_nice_basis(parse_algebra(fixtures::heisenberg)).is_nice);
  CHECK(is_nice_basis(parse_algebra(fixtures::dim6_graded)).is_nice);
  auto rep = is_nice_basis(parse_algebra(fixtures::dim6_nonnice));
  CHECK(!rep.is_nice);
  bool contraction_2_6 = false;
  for (auto& v : rep.violations)
    if (v.kind == NiceViolation::ContractionNotOnLine && v.i == 2 && v.j == 6)
      contraction_2_6 = true;
  CHECK(contraction_2_6);  // e_2 -| de^6 = e^3 + e^4
}

TEST_CASE("change_basis: identity, swap, inverse round-trip") {
  auto heis = parse_algebra(fixtures::heisenberg);
  CHECK(serialize(change_basis(heis, Mat::identity(3))) == serialize(heis));

  Mat swap(3, 3);
  swap(1, 0) = Rat(1);  // E_1 = e_2
  swap(0, 1) = Rat(1);  // E_2 = e_1
  swap(2, 2) = Rat(1);
  CHECK(serialize(change_basis(heis, swap)) == "0,0,-e^{12}");

  auto L = parse_algebra(fixtures::dim6_graded);
  Mat m(6, 6);
  std::mt19937_64 rng(99);
  do {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) m(i, j) = Rat((long)(rng() % 7) - 3);
  } while (m.det().is_zero());
  auto moved = change_basis(L, m);
  CHECK(jacobi_check(moved).empty());
  auto back = change_basis(moved, *m.inverse());
  for (int k = 0; k < 6; ++k) CHECK(back.diff[k] == L.diff[k]);

  Mat singular(3, 3);
  CHECK_THROWS_AS(change_basis(heis, singular), error);
}

TEST_CASE("appendix frames turn the two six-dimensional algebras nice") {
  auto to_cols = [](std::vector<std::vector<long>> cols, long den = 1) {
    Mat m((int)cols[0].size(), (int)cols.size());
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < m.rows(); ++i) m(i, j) = Rat(cols[j][i], den);
    return m;
  };
  {
    auto L = parse_algebra(fixtures::appendix6_a_src);
    // E1=e1+e2, E2=e1-e2, E3=-2e3, E4=-2(e4+e5), E5=-2(e4-e5), E6=-4e6
    Mat m = to_cols({{1, 1, 0, 0, 0, 0},
                     {1, -1, 0, 0, 0, 0},
                     {0, 0, -2, 0, 0, 0},
                     {0, 0, 0, -2, -2, 0},
                     {0, 0, 0, -2, 2, 0},
                     {0, 0, 0, 0, 0, -4}});
    CHECK(serialize(change_basis(L, m)) == fixtures::appendix6_a_dst);
    CHECK(is_nice_basis(change_basis(L, m)).is_nice);
  }
  {
    auto L = parse_algebra(fixtures::appendix6_b_src);
    // (e2, e1+e3, e1-e3, -e4+e5, -e4-e5, -2e6)
    Mat m = to_cols({{0, 1, 0, 0, 0, 0},
                     {1, 0, 1, 0, 0, 0},
                     {1, 0, -1, 0, 0, 0},
                     {0, 0, 0, -1, 1, 0},
                     {0, 0, 0, -1, -1, 0},
                     {0, 0, 0, 0, 0, -2}});
    CHECK(serialize(change_basis(L, m)) == fixtures::appendix6_b_dst);
  }
}

TEST_CASE("nilpotency detection") {
  for (auto& s : fixtures::cross_oracle_pool) CHECK(is_nilpotent(parse_algebra(s)));
  // sol(2): de^2 = e^{12} means [e_1,e_2] = -e_2, not nilpotent
  CHECK(!is_nilpotent(parse_algebra("0,e^{12}")));
}

TEST_CASE("two-digit indices need the comma form") {
  std::string entries = "0";
  for (int k = 2; k <= 9; ++k) entries += ",0";
  auto L = parse_algebra(entries + ",e^{1,10}");
  CHECK(L.n == 10);
  CHECK(L.a(10, 1, 10) == Rat(1));
  CHECK(serialize(L).find("e^{1,10}") != std::string::npos);
  CHECK_THROWS_AS(parse_algebra("0,0,e^{123}"), parse_error);
}

TEST_CASE("dimension bounds 2..16 are enforced") {
  auto zeros = [](int n) {
    std::string s = "0";
    for (int k = 2; k <= n; ++k) s += ",0";
    return s;
  };
  CHECK(parse_algebra(zeros(16)).n == 16);
  CHECK_THROWS_AS(parse_algebra(zeros(17)), error);
  CHECK_THROWS_AS(parse_algebra("0"), error);
}

TEST_CASE("hat index is an involution with hat(n) = 1") {
  for (int n : {2, 7, 16}) {
    CHECK(hat_index(n, n) == 1);
    CHECK(hat_index(n, 1) == n);
    for (int i = 1; i <= n; ++i) CHECK(hat_index(n, hat_index(n, i)) == i);
  }
  CHECK(hat_index(7, 4) == 4);
}
