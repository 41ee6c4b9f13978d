#include "nbdom/io.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <tuple>

namespace nbdom::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

std::vector<std::string_view> split_blanks(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

template <class T>
T parse_small(std::string_view s, std::size_t line, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw FormatError(std::string("bad ") + what + " '" + std::string(s) + "'", line);
  return v;
}

}  // namespace

std::vector<GfFileRecord> gf_records(const poly::RationalGF& gf, int cols) {
  if (!gf.is_normalized()) throw std::invalid_argument("gf file needs constant terms +1 in numerator and denominator");
  std::vector<GfFileRecord> out;
  for (const auto& t : gf.num().terms()) out.push_back({'a', cols, t.i, t.j, t.coeff});
  for (const auto& t : gf.den().terms()) out.push_back({'b', cols, t.i, t.j, t.coeff});
  return out;
}

std::string write_gf_file(const poly::RationalGF& gf, int cols) {
  std::ostringstream os;
  for (const GfFileRecord& r : gf_records(gf, cols)) {
    os << r.kind << ' ' << r.cols << ' ' << r.i << ' ' << r.j << ' ' << r.coeff << '\n';
  }
  return os.str();
}

GfFile read_gf_file(std::string_view text) {
  std::vector<poly::Term> num;
  std::vector<poly::Term> den;
  std::set<std::tuple<char, std::uint32_t, std::uint32_t>> seen;
  std::optional<int> cols;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    const auto fields = split_blanks(lines[n]);
    if (fields.empty()) continue;
    if (fields.size() != 5) throw FormatError("expected 5 fields, got " + std::to_string(fields.size()), line_no);
    if (fields[0] != "a" && fields[0] != "b") throw FormatError("kind must be 'a' or 'b'", line_no);
    const char kind = fields[0][0];
    const int c = parse_small<int>(fields[1], line_no, "column count");
    if (c < 1) throw FormatError("column count must be positive", line_no);
    if (cols && *cols != c) throw FormatError("inconsistent column count " + std::to_string(c), line_no);
    cols = c;
    const auto i = parse_small<std::uint32_t>(fields[2], line_no, "x exponent");
    const auto j = parse_small<std::uint32_t>(fields[3], line_no, "y exponent");
    Integer v;
    try {
      v = parse_integer(fields[4]);
    } catch (const std::invalid_argument&) {
      throw FormatError("bad coefficient '" + std::string(fields[4]) + "'", line_no);
    }
    if (!seen.insert({kind, i, j}).second) throw FormatError("duplicate record", line_no);
    (kind == 'a' ? num : den).push_back({i, j, v});
  }
  if (!cols) throw FormatError("no records", lines.size());
  GfFile out;
  out.cols = *cols;
  const poly::BiPoly p = poly::BiPoly::from_terms(std::move(num));
  const poly::BiPoly q = poly::BiPoly::from_terms(std::move(den));
  if (p.constant_term() == 0) throw FormatError("numerator has no constant term", lines.size());
  if (q.constant_term() == 0) throw FormatError("denominator has no constant term", lines.size());
  out.gf = poly::RationalGF(p, q);
  return out;
}

std::string gf_file_name(int cols) { return "gf" + std::to_string(cols); }

std::string write_table_csv(const counting::CountTable& t) {
  int widest = 0;
  for (int r = 0; r <= t.rows_max(); ++r) widest = std::max(widest, t.max_fill(r));
  std::ostringstream os;
  os << 'r';
  for (int d = 0; d <= widest; ++d) os << ",d" << d;
  os << '\n';
  for (int r = 0; r <= t.rows_max(); ++r) {
    os << r;
    for (const Integer& v : t.row(r)) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

counting::CountTable read_table_csv(std::string_view text, int cols) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0].substr(0, 1) != "r") throw FormatError("missing header", 1);
  std::vector<std::vector<Integer>> rows;
  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    std::vector<std::string_view> cells;
    std::string_view rest = lines[n];
    while (true) {
      const std::size_t comma = rest.find(',');
      cells.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const int r = parse_small<int>(cells[0], n + 1, "row index");
    if (r != static_cast<int>(rows.size())) throw FormatError("rows out of order", n + 1);
    std::vector<Integer> row;
    for (std::size_t k = 1; k < cells.size(); ++k) {
      if (cells[k].empty()) break;
      try {
        row.push_back(parse_integer(cells[k]));
      } catch (const std::invalid_argument&) {
        throw FormatError("bad count '" + std::string(cells[k]) + "'", n + 1);
      }
    }
    rows.push_back(std::move(row));
  }
  const int rows_max = static_cast<int>(rows.size()) - 1;
  return counting::CountTable(cols, rows_max, std::move(rows), std::nullopt);
}

std::string render_svg(const counting::PlacementSet& p) {
  if (p.rows < 1 || p.cols < 1) throw std::invalid_argument("empty board");
  if (!counting::is_non_bonding(p)) throw std::invalid_argument("placement is not non-bonding on its board");
  const int w = p.cols * kCellSize;
  const int h = p.rows * kCellSize;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
     << w << ' ' << h << "\">\n";
  os << "<g class=\"grid\" fill=\"none\" stroke=\"#000\" stroke-width=\"" << kGridStroke << "\">\n";
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      os << "<rect x=\"" << c * kCellSize << "\" y=\"" << r * kCellSize << "\" width=\"" << kCellSize
         << "\" height=\"" << kCellSize << "\"/>\n";
    }
  }
  os << "</g>\n<g class=\"dominoes\" fill=\"#444\">\n";
  for (const counting::Domino& d : p.dominoes) {
    const bool horizontal = d.orientation == counting::Orientation::Horizontal;
    os << "<rect class=\"domino\" x=\"" << d.anchor.col * kCellSize + kDominoInset << "\" y=\""
       << d.anchor.row * kCellSize + kDominoInset << "\" width=\""
       << (horizontal ? 2 : 1) * kCellSize - 2 * kDominoInset << "\" height=\""
       << (horizontal ? 1 : 2) * kCellSize - 2 * kDominoInset << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

counting::PlacementSet parse_svg(std::string_view svg) {
  const std::string text(svg);
  static const std::regex size_re(R"re(<svg[^>]*width="(\d+)" height="(\d+)")re");
  static const std::regex domino_re(
      R"re(<rect class="domino" x="(\d+)" y="(\d+)" width="(\d+)" height="(\d+)"/>)re");
  std::smatch m;
  if (!std::regex_search(text, m, size_re)) throw std::invalid_argument("not a board drawing");
  counting::PlacementSet p;
  p.cols = std::stoi(m[1]) / kCellSize;
  p.rows = std::stoi(m[2]) / kCellSize;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), domino_re); it != std::sregex_iterator(); ++it) {
    const int x = std::stoi((*it)[1]) - kDominoInset;
    const int y = std::stoi((*it)[2]) - kDominoInset;
    const int width = std::stoi((*it)[3]) + 2 * kDominoInset;
    const int height = std::stoi((*it)[4]) + 2 * kDominoInset;
    if (x % kCellSize != 0 || y % kCellSize != 0) throw std::invalid_argument("domino off the grid");
    counting::Domino d;
    d.anchor = {y / kCellSize, x / kCellSize};
    if (width == 2 * kCellSize && height == kCellSize) {
      d.orientation = counting::Orientation::Horizontal;
    } else if (width == kCellSize && height == 2 * kCellSize) {
      d.orientation = counting::Orientation::Vertical;
    } else {
      throw std::invalid_argument("rectangle is not a domino");
    }
    p.dominoes.push_back(d);
  }
  std::sort(p.dominoes.begin(), p.dominoes.end());
  return p;
}

std::string board_file_name(int rows, int cols, int dominoes, std::size_t index) {
  return "board_" + std::to_string(rows) + "x" + std::to_string(cols) + "_d" + std::to_string(dominoes) + "_" +
         std::to_string(index) + ".svg";
}

}  // namespace nbdom::io
