#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtrace/matrix.hpp"

namespace qtrace {

// Evaluates a displayed matrix entry such as "q^{-1/3} A1 c1 - q^{-4/3} D1 b1"
// or "(q-q^{-1})(e1 a1 - a1 e1)". Juxtaposition multiplies left to right;
// q^{r} is a rational power of q, names are looked up in `symbols`.
TorusElement parse_display(const std::string& text, const std::map<std::string, TorusElement>& symbols,
                           const SpecPtr& spec);

// Row-major list of entries, one string per entry.
TorusMatrix parse_display_matrix(int rows, int cols, const std::vector<std::string>& entries,
                                 const std::map<std::string, TorusElement>& symbols, const SpecPtr& spec);

struct MoveResult {
  std::string name;
  bool pass;
  std::string detail;
};

// All oriented good-position moves at n = 3.
std::vector<MoveResult> verify_moves();

}  // namespace qtrace
