#pragma once

// Shared fixture data for the test suites: low-dimensional nilpotent Lie
// algebras in coframe notation, regression tables of weight sequences and
// filtrations, and sigma-diagonal metrics.

#include <string>
#include <vector>

namespace fixtures {

inline const char* heisenberg = "0,0,e^{12}";
inline const char* abelian3 = "0,0,0";
inline const char* dim6_graded = "0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}";     // unique grading
inline const char* dim6_nonnice = "0,0,0,e^{12},e^{14},e^{15}+e^{23}+e^{24}";  // rank-one torus

// appendix basis-change pairs (dimension 6)
inline const char* appendix6_a_src = "0,0,e^{12},e^{13},e^{23},e^{14}-e^{25}";
inline const char* appendix6_a_dst = "0,0,e^{12},e^{13},e^{23},e^{15}+e^{24}";
inline const char* appendix6_b_src = "0,0,0,e^{12},e^{23},e^{14}+e^{35}";
inline const char* appendix6_b_dst = "0,0,0,e^{12},e^{13},e^{25}+e^{34}";

// dimension-9 algebras whose gradings admit no sequence (cyclic sum relations)
inline const char* dim9_obstructed_a =
    "0,0,0,0,-e^{12},e^{15},e^{25}+e^{34},e^{16},e^{56}+e^{28}+e^{13}";
inline const char* dim9_obstructed_b =
    "0,0,0,-e^{12},e^{14},e^{15}-e^{23},e^{34}-e^{16},e^{35}+e^{17},e^{47}+e^{56}+e^{28}+e^{13}";

// filiform/friends with no adapted filtration in any basis order
inline const std::vector<std::string> no_filtration = {
    "0,0,-e^{12},e^{13},e^{14},e^{25}+e^{34}",
    "0,0,-e^{12},e^{13},e^{14}+e^{23},e^{25}+e^{34}",
    "0,0,-e^{12},-e^{13},e^{14},e^{15},e^{16},e^{27}+e^{36}+e^{45}",
    "0,0,-e^{12},-e^{13},e^{14},e^{15},e^{16}+e^{23},e^{27}+e^{36}+e^{45}",
    "0,0,-e^{12},e^{13},e^{14},-e^{15}+e^{23},e^{16}+e^{24},e^{27}+e^{36}+e^{45}",
    "0,0,-e^{12},-e^{13},3/2*e^{14}-1/2*e^{23},e^{15}+1/2*e^{24},e^{16}+e^{25}+e^{34},"
    "e^{27}+e^{36}+e^{45}",
    "0,0,0,-e^{12},e^{13},e^{15}+e^{24},e^{14}+e^{35},e^{26}+e^{37}+e^{45}",
};

// dimension-7 algebras with a unique grading that admits no sequence
inline const std::vector<std::string> dim7_no_sequence = {
    "0,0,e^{12},e^{13},e^{14},e^{23},e^{16}+e^{24}+e^{25}-e^{34}",
    "0,0,e^{12},e^{13},e^{23},e^{15}+e^{24},e^{14}+e^{16}+e^{34}",
    "0,0,e^{12},e^{13},0,e^{14}+e^{25},e^{16}+e^{25}+e^{35}",
    "0,0,0,e^{12},e^{14}+e^{23},e^{15}-e^{34},e^{16}+e^{23}-e^{35}",
    "0,0,0,e^{12},e^{13},e^{14}+e^{24}-e^{35},e^{25}+e^{34}",
};

// non-nice dimension-7 regression: algebra + adapted basis order carrying a
// weight sequence that passes the grading conditions
struct GradedRow {
  std::string algebra;
  std::vector<int> order;
};
inline const std::vector<GradedRow> graded_table = {
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},0", {2, 1, 3, 5, 4, 6, 7}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},e^{23}", {2, 1, 3, 4, 5, 7, 6}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{25}-e^{34},e^{23}", {2, 1, 3, 4, 5, 7, 6}},
    {"0,0,e^{12},e^{13},e^{14},0,e^{15}+e^{23}+e^{26}", {1, 2, 3, 6, 4, 5, 7}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},0,e^{15}+e^{24}+e^{26}", {1, 2, 3, 4, 6, 5, 7}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{16}+e^{24}+e^{35}", {1, 2, 3, 5, 4, 6, 7}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{26}-e^{34}", {2, 1, 3, 5, 4, 6, 7}},
    {"0,0,e^{12},e^{13},0,e^{23}+e^{25},e^{14}", {2, 1, 3, 5, 4, 6, 7}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23},e^{23}+e^{25}", {1, 2, 3, 5, 4, 6, 7}},
    {"0,0,e^{12},0,e^{13},e^{23}+e^{24},e^{15}+e^{16}+e^{25}+l*e^{26}+e^{34}",
     {1, 2, 3, 4, 5, 6, 7}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{15}", {2, 1, 3, 5, 4, 7, 6}},
    {"0,0,0,e^{12},e^{14}+e^{23},e^{23},e^{15}-e^{34}", {1, 2, 4, 3, 5, 6, 7}},
    {"0,0,e^{12},0,e^{23},e^{14},e^{16}+e^{25}+e^{26}-e^{34}", {1, 2, 3, 4, 5, 6, 7}},
    {"0,0,e^{12},0,e^{13}+e^{24},e^{14},e^{15}+e^{23}+1/2*e^{26}+1/2*e^{34}",
     {1, 2, 4, 3, 6, 5, 7}},
    {"0,0,e^{12},0,e^{13}+e^{24},e^{14},e^{15}+l*e^{23}+e^{34}+e^{46}", {1, 2, 4, 3, 6, 5, 7}},
    {"0,0,0,e^{12},e^{13},e^{15}+e^{35},e^{25}+e^{34}", {1, 3, 5, 2, 4, 6, 7}},
    {"0,0,0,e^{12},e^{23},-e^{13},e^{15}+e^{16}+e^{26}-2*e^{34}", {3, 1, 2, 5, 4, 6, 7}},
    {"0,0,0,e^{12},e^{23},-e^{13},-l*e^{16}+l*e^{25}+2*e^{26}-2*e^{34}", {1, 2, 4, 3, 5, 6, 7}},
    {"0,0,0,e^{12},e^{14}+e^{23},0,e^{15}-e^{34}+e^{36}", {1, 2, 3, 4, 6, 5, 7}},
    {"0,0,0,e^{12},e^{14}+e^{23},0,e^{15}+e^{24}-e^{34}+e^{36}", {1, 2, 3, 4, 6, 5, 7}},
    {"0,0,e^{12},0,0,e^{13}+e^{14},e^{15}+e^{23}", {5, 2, 1, 3, 4, 7, 6}},
    {"0,0,e^{12},0,0,2*e^{13}+e^{14}+e^{25},e^{15}+2*e^{23}-e^{24}", {1, 2, 3, 4, 5, 6, 7}},
};

// non-nice dimension-7 filtration regression: algebra + adapted order + weights
struct FilteredRow {
  std::string algebra;
  std::vector<int> order;
  std::vector<long> weights;
};
inline const std::vector<FilteredRow> filtered_table = {
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},0",
     {1, 2, 3, 4, 5, 6, 7}, {2, 3, 8, 11, 12, 16, 18}},
    {"0,0,e^{12},e^{13},e^{14},e^{15}+e^{23},e^{16}+e^{23}+e^{24}",
     {1, 2, 3, 4, 5, 6, 7}, {32, 92, 144, 226, 273, 320, 392}},
    {"0,0,e^{12},e^{13},e^{14},e^{15}+e^{23},e^{16}+e^{24}+e^{25}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {48, 138, 212, 315, 390, 464, 576}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},e^{16}+e^{23}+e^{25}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 13, 28, 37, 46, 56, 64}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},-e^{16}+e^{23}-e^{25}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 4, 10, 13, 16, 21, 24}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24},e^{23}",
     {1, 2, 3, 4, 5, 6, 7}, {16, 32, 72, 103, 128, 176, 188}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},e^{25}-e^{34},e^{23}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 8, 16, 41, 54, 64, 68}},
    {"0,0,e^{12},e^{13},e^{14},e^{23},e^{16}+e^{24}+e^{25}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {1, 6, 8, 14, 17, 20, 24}},
    {"0,0,e^{12},e^{13},e^{14},e^{23},e^{15}+e^{25}+e^{26}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 8, 26, 47, 63, 72, 80}},
    {"0,0,e^{12},e^{13},e^{23},e^{15}+e^{24},e^{14}+e^{16}+e^{25}+e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 10, 16, 39, 50, 56, 64}},
    {"0,0,e^{12},e^{13},e^{23},e^{15}+e^{24},e^{14}+e^{16}-e^{25}+e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 10, 16, 39, 50, 56, 64}},
    {"0,0,e^{12},e^{13},e^{23},e^{15}+e^{24},e^{14}+e^{16}+e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 10, 16, 39, 50, 56, 64}},
    {"0,0,e^{12},e^{13},e^{23},e^{15}+e^{24},e^{14}+e^{16}+l*e^{25}+e^{26}+e^{34}-e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 5, 8, 8, 11, 13}},
    {"0,0,e^{12},e^{13},e^{23},-e^{14}-e^{25},e^{16}+e^{25}-e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {1, 4, 8, 16, 16, 22, 24}},
    {"0,0,e^{12},e^{13},e^{23},-e^{14}-e^{25},e^{15}+e^{16}+e^{24}+l*e^{25}-e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 14, 31, 48, 48, 68, 79}},
    {"0,0,e^{12},e^{13},e^{14},0,e^{15}+e^{23}+e^{26}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 8, 38, 51, 64, 84, 92}},
    {"0,0,e^{12},e^{13},e^{14}+e^{23},0,e^{15}+e^{24}+e^{26}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 8, 38, 51, 64, 84, 92}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{25},e^{16}+e^{25}+e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {1, 4, 8, 16, 16, 22, 24}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{16}+e^{24}+e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {1, 8, 14, 16, 16, 28, 30}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{26}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 4, 12, 21, 26, 32, 36}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{15}+e^{26}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 8, 26, 47, 59, 72, 80}},
    {"0,0,0,e^{12},e^{14}+e^{23},e^{15}-e^{34},e^{16}+e^{23}-e^{35}",
     {1, 2, 3, 4, 5, 6, 7}, {1, 4, 4, 12, 16, 18, 20}},
    {"0,0,e^{12},e^{13},0,e^{23}+e^{25},e^{14}",
     {1, 2, 3, 4, 5, 6, 7}, {12, 21, 64, 81, 86, 112, 128}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23},e^{23}+e^{25}",
     {1, 2, 3, 4, 5, 6, 7}, {6, 28, 40, 58, 63, 80, 96}},
    {"0,0,e^{12},0,e^{13},e^{23}+e^{24},e^{15}+e^{16}+e^{25}+l*e^{26}+e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 6, 9, 12, 14, 16}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},0",
     {1, 2, 3, 4, 5, 6, 7}, {12, 56, 112, 130, 133, 192, 224}},
    {"0,0,e^{12},e^{13},0,e^{14}+e^{23}+e^{25},e^{15}",
     {1, 2, 3, 4, 5, 6, 7}, {12, 21, 64, 81, 86, 112, 128}},
    {"0,0,0,e^{12},e^{14}+e^{23},e^{23},e^{15}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 5, 8, 11, 16, 18, 20}},
    {"0,0,e^{12},0,e^{23},e^{14},e^{16}+e^{25}+e^{26}-e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 6, 9, 12, 14, 16}},
    {"0,0,e^{12},0,e^{13}+e^{24},e^{14},e^{15}+e^{23}+1/2*e^{26}+1/2*e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 6, 9, 12, 14, 16}},
    {"0,0,e^{12},0,e^{13}+e^{24},e^{14},e^{15}+l*e^{23}+e^{34}+e^{46}",
     {1, 2, 4, 3, 5, 6, 7}, {4, 4, 4, 17, 24, 24, 28}},
    {"0,0,0,e^{12},e^{13},e^{14}+e^{24}-e^{35},e^{25}+e^{34}",
     {2, 1, 3, 4, 5, 7, 6}, {1, 4, 4, 15, 20, 22, 24}},
    {"0,0,0,e^{12},e^{13},e^{15}+e^{35},e^{25}+e^{34}",
     {1, 2, 3, 5, 4, 6, 7}, {4, 8, 8, 21, 28, 32, 36}},
    {"0,0,0,e^{12},e^{23},-e^{13},e^{15}+e^{16}+e^{26}-2*e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 4, 7, 9, 10, 12}},
    {"0,0,0,e^{12},e^{23},-e^{13},-l*e^{16}+l*e^{25}+2*e^{26}-2*e^{34}",
     {1, 2, 3, 4, 5, 6, 7}, {2, 2, 4, 7, 9, 10, 12}},
    {"0,0,0,e^{12},e^{14}+e^{23},0,e^{15}-e^{34}+e^{36}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 4, 4, 11, 16, 16, 20}},
    {"0,0,0,e^{12},e^{14}+e^{23},0,e^{15}+e^{24}-e^{34}+e^{36}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 4, 4, 17, 24, 24, 28}},
    {"0,0,e^{12},0,0,e^{13}+e^{14},e^{15}+e^{23}",
     {1, 2, 3, 4, 5, 6, 7}, {8, 15, 28, 34, 39, 48, 58}},
    {"0,0,e^{12},0,0,2*e^{13}+e^{14}+e^{25},e^{15}+2*e^{23}-e^{24}",
     {1, 2, 3, 4, 5, 6, 7}, {4, 8, 16, 17, 18, 28, 32}},
};

// sigma-diagonal Ricci-flat metrics on the dimension-8 algebras without a
// filtration. `printed` is the involution as published; `corrected` is the
// involution that actually makes the Ricci tensor vanish for every
// sigma-invariant parameter choice (exact recomputation; the published
// strings are off by one token on rows 1, 3 and 5 and all rows agree at unit
// parameters). Row 4 is flat exactly on a quadric in the parameters; see the
// in-test relation.
struct SigmaRow {
  std::string algebra;
  std::vector<std::pair<int, int>> printed;
  std::vector<std::pair<int, int>> corrected;
  bool any_parameters;  // corrected sigma is flat for every parameter choice
};
inline const std::vector<SigmaRow> sigma_table = {
    {"0,0,-e^{12},-e^{13},e^{14},e^{15},e^{16},e^{27}+e^{36}+e^{45}",
     {{1, 8}, {3, 5}},
     {{1, 8}, {3, 5}, {6, 7}},
     true},
    {"0,0,-e^{12},-e^{13},e^{14},e^{15},e^{16}+e^{23},e^{27}+e^{36}+e^{45}",
     {{1, 7}, {2, 8}, {3, 5}},
     {{1, 7}, {2, 8}, {3, 5}},
     true},
    {"0,0,-e^{12},e^{13},e^{14},-e^{15}+e^{23},e^{16}+e^{24},e^{27}+e^{36}+e^{45}",
     {{1, 8}, {2, 6}, {3, 7}},
     {{1, 8}, {2, 6}, {3, 5}, {4, 7}},
     true},
    {"0,0,-e^{12},-e^{13},3/2*e^{14}-1/2*e^{23},e^{15}+1/2*e^{24},e^{16}+e^{25}+e^{34},"
     "e^{27}+e^{36}+e^{45}",
     {{1, 8}, {2, 6}, {3, 7}},
     {{1, 8}, {2, 6}, {3, 7}},
     false},
    {"0,0,0,-e^{12},e^{13},e^{15}+e^{24},e^{14}+e^{35},e^{26}+e^{37}+e^{45}",
     {{4, 7}, {5, 6}},
     {{1, 8}, {4, 7}, {5, 6}},
     true},
};

// ten nilpotent fixtures of dimension <= 6 for randomized cross-oracle runs
inline const std::vector<std::string> cross_oracle_pool = {
    "0,0,0",
    "0,0,e^{12}",
    "0,0,0,e^{12}",
    "0,0,e^{12},e^{13}",
    "0,0,e^{12},e^{13},e^{14}",
    "0,0,e^{12},e^{13},e^{23}",
    "0,0,e^{12},e^{13},e^{23},e^{25}+e^{14}",
    "0,0,0,e^{12},e^{14},e^{15}+e^{23}+e^{24}",
    "0,0,e^{12},e^{13},e^{23},e^{14}-e^{25}",
    "0,0,-e^{12},e^{13},e^{14},e^{25}+e^{34}",
};

inline std::vector<int> sigma_from_swaps(int n, const std::vector<std::pair<int, int>>& swaps) {
  std::vector<int> s(n);
  for (int i = 1; i <= n; ++i) s[i - 1] = i;
  for (auto& [a, b] : swaps) {
    s[a - 1] = b;
    s[b - 1] = a;
  }
  return s;
}

}  // namespace fixtures
