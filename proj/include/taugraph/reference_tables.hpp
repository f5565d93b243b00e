#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace taugraph {

/// Published 1/tau values for the normalized families. Cells hold x where the
/// printed entry reads 1/x; missing cells are empty.
struct ReferenceTable {
  std::string_view family;  // "hex", "mm", "tt13", "tt14"
  std::string_view row_name;
  std::string_view col_name;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  std::vector<std::vector<std::optional<double>>> reciprocal;

  std::optional<double> lookup(std::size_t row, std::size_t col) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] != row) continue;
      for (std::size_t j = 0; j < cols.size(); ++j)
        if (cols[j] == col) return reciprocal[i][j];
    }
    return std::nullopt;
  }
};

/// H^N(n-1, m-1) indexed by (n, m). Cell (50, 50) is printed with the (5, 50) value.
inline const ReferenceTable& hex_reference_table() {
  static const ReferenceTable t{
      "hex", "n", "m", {5, 50, 100, 150, 165}, {5, 50, 100, 150, 165},
      {{57.21661, 86.28266, 88.80202, 89.67482, 89.83536},
       {86.28266, 86.28266, 106.93826, 107.22594, 107.27841},
       {88.80202, 106.93826, 107.44199, 107.61066, 107.64154},
       {89.67482, 107.22594, 107.61066, 107.73206, 107.75424},
       {89.83536, 107.27841, 107.64154, 107.75424, 107.77473}}};
  return t;
}

/// MM(a, b) indexed by (a, b). Cell (116, 116) is blank in print.
inline const ReferenceTable& mm_reference_table() {
  static const ReferenceTable t{
      "mm", "a", "b", {5, 50, 100, 110, 116}, {5, 50, 100, 110, 116},
      {{72.89444, 94.18968, 95.74330, 95.88708, 95.96162},
       {100.30286, 107.12515, 107.46364, 107.49452, 107.51050},
       {102.43605, 107.51720, 107.70897, 107.72642, 107.73545},
       {102.63448, 107.55209, 107.72935, 107.74546, 107.75379},
       {102.73742, 107.57013, 107.73979, 107.75520, std::nullopt}}};
  return t;
}

/// TT(13, b, c) indexed by (b, c).
inline const ReferenceTable& tt13_reference_table() {
  static const ReferenceTable t{
      "tt13", "b", "c", {2049, 1025, 513, 257, 129}, {514, 258, 130, 66, 34, 18},
      {{107.49402, 107.59561, 107.61874, 107.62882, 107.63435, 107.60193},
       {107.44445, 107.60114, 107.63523, 107.64677, 107.66068, 107.66957},
       {106.99123, 107.52468, 107.62509, 107.64779, 107.66312, 107.68059},
       {107.42122, 107.06822, 107.54748, 107.63829, 107.66162, 107.68262},
       {107.59886, 107.44635, 107.10759, 107.56565, 107.63960, 107.65636}}};
  return t;
}

/// TT(14, b, c) indexed by (b, c).
inline const ReferenceTable& tt14_reference_table() {
  static const ReferenceTable t{
      "tt14", "b", "c", {1025, 513, 257, 129}, {130, 66, 34, 18},
      {{107.75856, 107.76736, 107.78212, 107.79897},
       {107.74639, 107.76764, 107.78342, 107.80269},
       {107.67083, 107.75703, 107.77943, 107.80147},
       {107.23574, 107.68350, 107.75311, 107.76898}}};
  return t;
}

inline const ReferenceTable* tt_reference_table(std::size_t a) {
  if (a == 13) return &tt13_reference_table();
  if (a == 14) return &tt14_reference_table();
  return nullptr;
}

}  // namespace taugraph
