#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lefschetz {

/// One row of a zeta table for S^m x S^n: a label for the admissible sign
/// patterns it covers and the common zeta function in factored form.
struct ZetaTableRow {
  std::string label;
  /// (a, b) pairs; the degree is a * b.
  std::vector<std::pair<int, int>> sign_patterns;
  std::string zeta;
};

struct ZetaTable {
  int number = 0;
  bool m_even = false;
  bool n_even = false;
  std::string caption;
  std::vector<ZetaTableRow> rows;
};

/// The four parity cases of S^m x S^n with m != n, in the order
/// (even, even), (odd, odd), (even, odd), (odd, even). The zeta strings are
/// computed from the homology models, not hard-coded.
std::vector<ZetaTable> product_sphere_tables();

std::string render_markdown(const std::vector<ZetaTable>& tables);

}  // namespace lefschetz
