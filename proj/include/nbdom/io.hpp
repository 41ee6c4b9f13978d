#pragma once

// Text formats: coefficient files for generating functions, CSV count
// tables and SVG drawings of placements.
//
// gf file grammar, one record per nonzero coefficient:
//   record := kind SP int SP int SP int SP int NL
//   kind   := 'a' (numerator) | 'b' (denominator)
// fields: kind, columns c, x-exponent i, y-exponent j, coefficient.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nbdom/bigint.hpp"
#include "nbdom/counting.hpp"
#include "nbdom/rational_gf.hpp"

namespace nbdom::io {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct GfFileRecord {
  char kind = 'a';
  int cols = 0;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
  Integer coeff;

  friend bool operator==(const GfFileRecord&, const GfFileRecord&) = default;
};

struct GfFile {
  int cols = 0;
  poly::RationalGF gf;
};

/// Records in file order: all 'a' then all 'b', each by ascending i then j.
/// Throws std::invalid_argument unless gf is normalized.
std::vector<GfFileRecord> gf_records(const poly::RationalGF& gf, int cols);
std::string write_gf_file(const poly::RationalGF& gf, int cols);

/// Order-insensitive; tolerates runs of blanks and blank lines. Throws
/// FormatError for malformed lines, mixed column counts, duplicate
/// (kind, i, j), or a missing constant term on either side.
GfFile read_gf_file(std::string_view text);

/// "gf<c>"
std::string gf_file_name(int cols);

/// Header r,d0,d1,...; row r lists D(r, c, 0..d-bar) with no trailing cells.
std::string write_table_csv(const counting::CountTable& t);
/// Inverse of write_table_csv; the column count is not stored in the file.
counting::CountTable read_table_csv(std::string_view text, int cols);

/// Square size, grid stroke width and domino inset of the drawing.
inline constexpr int kCellSize = 20;
inline constexpr int kGridStroke = 1;
inline constexpr int kDominoInset = 2;

/// Grid of unit squares with one filled rectangle per domino. Throws
/// std::invalid_argument if the placement is not non-bonding on its board.
std::string render_svg(const counting::PlacementSet& p);

/// Recovers the placement from a document produced by render_svg.
counting::PlacementSet parse_svg(std::string_view svg);

/// "board_<r>x<c>_d<d>_<k>.svg"
std::string board_file_name(int rows, int cols, int dominoes, std::size_t index);

}  // namespace nbdom::io
