#pragma once

#include <string>
#include <vector>

#include "qtrace/matrix.hpp"
#include "qtrace/snake.hpp"

namespace qtrace {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass;
  std::string detail;
};

// The left or right turn matrix of a triangle entered through side 0.
TorusMatrix triangle_turn_matrix(int n, Turn turn);
// The same matrix with its determinant normalization D^{-1/n} set to 1.
TorusMatrix unnormalized_turn_matrix(int n, Turn turn);

std::vector<CheckResult> verify_matrices(int n);
std::vector<CheckResult> verify_skein(int n);
std::vector<CheckResult> verify_duality(int n);
std::vector<CheckResult> verify_move_suite();

// suite is one of matrices, moves, skein, duality, all; throws Error on an
// unknown suite or an unsupported n.
std::vector<CheckResult> run_suite(const std::string& suite, int n);
std::string format_report(const std::vector<CheckResult>& results);

}  // namespace qtrace
