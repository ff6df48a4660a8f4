#include "lefschetz/tables.hpp"

#include "lefschetz/expression.hpp"
#include "lefschetz/homology.hpp"
#include "lefschetz/lefschetz.hpp"

#include <sstream>
#include <stdexcept>

namespace lefschetz {

namespace {

struct Layout {
  bool m_even, n_even;
  int m, n;  // representative dimensions with these parities
  const char* caption;
  std::vector<std::pair<const char*, std::vector<std::pair<int, int>>>> rows;
};

const std::vector<Layout>& layouts() {
  static const std::vector<Layout> all = {
      {true, true, 2, 4, "m and n even",
       {{"a=b=d=1", {{1, 1}}}, {"{a, b, d} = {-1, 1} with ab=d", {{1, -1}, {-1, 1}, {-1, -1}}}}},
      {false, false, 1, 3, "m and n odd",
       {{"a=b=d=1", {{1, 1}}}, {"a=b=-1, d=1", {{-1, -1}}}, {"{a, b} = {-1, 1}, d=-1", {{1, -1}, {-1, 1}}}}},
      {true, false, 2, 3, "m even, n odd",
       {{"a=b=d=1", {{1, 1}}}, {"b=d=-1, a=1", {{1, -1}}}, {"{b, d} = {-1, 1}, a=-1", {{-1, 1}, {-1, -1}}}}},
      {false, true, 3, 2, "m odd, n even",
       {{"a=b=d=1", {{1, 1}}}, {"a=d=-1, b=1", {{-1, 1}}}, {"{a, d} = {-1, 1}, b=-1", {{1, -1}, {-1, -1}}}}},
  };
  return all;
}

}  // namespace

std::vector<ZetaTable> product_sphere_tables() {
  std::vector<ZetaTable> tables;
  int number = 1;
  for (const auto& layout : layouts()) {
    ZetaTable t;
    t.number = number++;
    t.m_even = layout.m_even;
    t.n_even = layout.n_even;
    t.caption = std::string("Z_f(t) on S^m x S^n, m != n, ") + layout.caption;
    for (const auto& [label, patterns] : layout.rows) {
      ZetaTableRow row{label, patterns, {}};
      const auto& [a0, b0] = patterns.front();
      const CycloVector zeta = zeta_from_homology(product_model(layout.m, layout.n, a0, b0));
      for (const auto& [a, b] : patterns)
        if (zeta_from_homology(product_model(layout.m, layout.n, a, b)) != zeta)
          throw std::logic_error(std::string("table row '") + label + "' mixes different zeta functions");
      row.zeta = format_zeta(zeta);
      t.rows.push_back(std::move(row));
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

std::string render_markdown(const std::vector<ZetaTable>& tables) {
  std::ostringstream os;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    const auto& t = tables[i];
    if (i) os << "\n";
    os << "### Table " << t.number << ": " << t.caption << "\n\n";
    os << "| Values for a, b, d | Z_f(t) |\n";
    os << "|---|---|\n";
    for (const auto& row : t.rows) os << "| " << row.label << " | " << row.zeta << " |\n";
  }
  return os.str();
}

}  // namespace lefschetz
