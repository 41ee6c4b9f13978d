// Command-line front end: counts, tables, generating functions, checks and exports.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nbdom/analysis.hpp"
#include "nbdom/counting.hpp"
#include "nbdom/gf_engine.hpp"
#include "nbdom/io.hpp"
#include "nbdom/word_model.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace nbdom;

namespace {

constexpr const char* kGfGrammar =
    "gf record grammar (one line per nonzero coefficient):\n"
    "  record := kind SP int SP int SP int SP int NL\n"
    "  kind   := 'a' (numerator) | 'b' (denominator)\n"
    "  fields: kind, columns c, x-exponent i, y-exponent j, coefficient";

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string text_table(const counting::CountTable& t) {
  int widest = 0;
  std::size_t width = 2;
  for (int r = 0; r <= t.rows_max(); ++r) {
    widest = std::max(widest, t.max_fill(r));
    for (const Integer& v : t.row(r)) width = std::max(width, v.get_str().size());
  }
  std::ostringstream os;
  os << std::setw(4) << "r\\d";
  for (int d = 0; d <= widest; ++d) os << ' ' << std::setw(static_cast<int>(width)) << d;
  os << '\n';
  for (int r = 0; r <= t.rows_max(); ++r) {
    os << std::setw(4) << r;
    for (const Integer& v : t.row(r)) os << ' ' << std::setw(static_cast<int>(width)) << v.get_str();
    os << '\n';
  }
  return os.str();
}

json gf_json(const poly::RationalGF& gf, int cols) {
  json j;
  j["cols"] = cols;
  j["numerator"] = gf.num().str();
  j["denominator"] = gf.den().str();
  json records = json::array();
  for (const auto& r : io::gf_records(gf, cols)) {
    records.push_back({{"kind", std::string(1, r.kind)}, {"i", r.i}, {"j", r.j}, {"coeff", r.coeff.get_str()}});
  }
  j["records"] = records;
  return j;
}

struct Entry {
  std::string suite;
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Entry> run_verify(const std::string& suite, int rows_max, int cols_max) {
  std::vector<Entry> out;
  const bool all = suite == "all";
  if (all || suite == "tables") {
    const int r_lim = std::min(rows_max, 6);
    const int c_lim = std::min(cols_max, 6);
    for (int c = 1; c <= c_lim; ++c) {
      for (int r = 1; r <= r_lim; ++r) {
        const auto brute = counting::brute_force_counts(r, c);
        const auto t = counting::count_table(c, r);
        bool ok = static_cast<int>(brute.size()) == t.max_fill(r) + 1;
        for (std::size_t d = 0; ok && d < brute.size(); ++d) ok = t.at(r, static_cast<int>(d)) == brute[d];
        out.push_back({"tables", "brute force " + std::to_string(r) + "x" + std::to_string(c), ok, ""});
      }
    }
    for (int c = 1; c <= cols_max; ++c) {
      for (int c2 = c + 1; c2 <= std::min(cols_max, rows_max); ++c2) {
        out.push_back({"tables", "symmetry " + std::to_string(c) + "/" + std::to_string(c2),
                       counting::symmetry_check(c, c2, rows_max), ""});
      }
    }
    for (const auto& rep : {analysis::check_d0_closed_form(rows_max, cols_max),
                            analysis::check_d1_closed_form(rows_max, cols_max)}) {
      out.push_back({"tables", rep.name, rep.passed(), rep.status()});
    }
  }
  if (all || suite == "gfs") {
    for (int c = 1; c <= std::min(cols_max, 6); ++c) {
      const gf::VerifyReport rep = gf::verify_gf(c);
      for (const auto& e : rep.checks) out.push_back({"gfs", "c=" + std::to_string(c) + " " + e.name, e.passed, e.detail});
    }
  }
  if (all || suite == "conjectures") {
    std::vector<analysis::ConjectureReport> reps;
    if (rows_max >= 3 && cols_max >= 3) reps.push_back(analysis::check_d2_formula(rows_max, cols_max));
    for (auto& r : analysis::check_maxfill_conjectures(rows_max, cols_max)) reps.push_back(std::move(r));
    for (auto& r : analysis::check_narrow_maxfill(rows_max)) reps.push_back(std::move(r));
    for (const auto& rep : reps) out.push_back({"conjectures", rep.name, rep.passed(), rep.status()});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-bonding domino placements: exact counts and generating functions"};
  app.footer(kGfGrammar);
  app.require_subcommand(1);

  int cols = 0;
  int rows = 0;
  int rows_max = 12;
  int cols_max = 12;
  int dominoes = 0;
  std::string format;
  std::string engine = "eliminate";
  std::string out_path;
  std::string suite = "all";
  std::string report = "text";
  std::size_t limit = 0;

  auto* states = app.add_subcommand("states", "Row words in order and their number");
  states->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, words::kMaxStateCols));
  states->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");

  auto* count = app.add_subcommand("count", "D(r,c,d) for all d");
  count->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, words::kMaxStateCols));
  count->add_option("--rows", rows, "Rows")->required()->check(CLI::NonNegativeNumber);

  auto* table = app.add_subcommand("table", "Count table for one column count");
  table->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, words::kMaxStateCols));
  table->add_option("--rows-max", rows_max, "Largest row count")->check(CLI::NonNegativeNumber);
  table->add_option("--format", format, "csv or text")->check(CLI::IsMember({"csv", "text"}))->default_val("text");

  auto* maxfill = app.add_subcommand("maxfill", "Maximum number of dominoes per board size");
  maxfill->add_option("--rows-max", rows_max, "Largest row count")->check(CLI::PositiveNumber);
  maxfill->add_option("--cols-max", cols_max, "Largest column count")->check(CLI::Range(1, words::kMaxStateCols));

  auto* enumerate = app.add_subcommand("enumerate", "List every placement");
  enumerate->add_option("--rows", rows, "Rows")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--cols", cols, "Columns")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--dominoes", dominoes, "Dominoes")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--out", out_path, "Directory for placements.txt");

  auto* gfc = app.add_subcommand("gf", "Bivariate generating function for c columns");
  gfc->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, 8));
  gfc->add_option("--engine", engine, "eliminate, fit or both")->check(CLI::IsMember({"eliminate", "fit", "both"}));
  gfc->add_option("--format", format, "paper-gf, json or pretty")
      ->check(CLI::IsMember({"paper-gf", "json", "pretty"}))
      ->default_val("pretty");
  std::optional<int> x_bound;
  std::optional<int> y_bound;
  gfc->add_option("--x-bound", x_bound, "x-degree bound for the fit");
  gfc->add_option("--y-bound", y_bound, "y-degree bound for the fit");

  auto* verify = app.add_subcommand("verify", "Run consistency checks; nonzero exit on failure");
  verify->add_option("--suite", suite, "all, tables, gfs or conjectures")
      ->check(CLI::IsMember({"all", "tables", "gfs", "conjectures"}));
  verify->add_option("--rows-max", rows_max, "Largest row count")->check(CLI::PositiveNumber);
  verify->add_option("--cols-max", cols_max, "Largest column count")->check(CLI::Range(1, words::kMaxStateCols));
  verify->add_option("--report", report, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* export_gf = app.add_subcommand("export-gf", "Write the gf coefficient file");
  export_gf->footer(kGfGrammar);
  export_gf->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, 8));
  export_gf->add_option("--out", out_path, "Output file or directory (default gf<c>)");

  auto* export_table = app.add_subcommand("export-table", "Write a count table as CSV");
  export_table->add_option("--cols", cols, "Columns")->required()->check(CLI::Range(1, words::kMaxStateCols));
  export_table->add_option("--rows-max", rows_max, "Largest row count")->check(CLI::NonNegativeNumber);
  export_table->add_option("--out", out_path, "Output file")->required();

  auto* render = app.add_subcommand("render", "Draw placements as SVG files");
  render->add_option("--rows", rows, "Rows")->required()->check(CLI::PositiveNumber);
  render->add_option("--cols", cols, "Columns")->required()->check(CLI::PositiveNumber);
  render->add_option("--dominoes", dominoes, "Dominoes")->required()->check(CLI::NonNegativeNumber);
  render->add_option("--out", out_path, "Output directory")->required();
  render->add_option("--limit", limit, "Draw at most this many (0 = all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*states) {
      const words::StateSpace space(cols);
      if (format == "json") {
        json words = json::array();
        for (const auto& w : space.words()) words.push_back(w.str());
        std::cout << json{{"cols", cols}, {"count", space.size()}, {"words", words}}.dump(2) << '\n';
      } else {
        std::cout << "s_" << cols << " = " << space.size() << '\n';
        for (const auto& w : space.words()) std::cout << w.str() << '\n';
      }
    } else if (*count) {
      const auto t = counting::count_table(cols, rows);
      for (int d = 0; d <= t.max_fill(rows); ++d) std::cout << d << ' ' << t.at(rows, d) << '\n';
    } else if (*table) {
      const auto t = counting::count_table(cols, rows_max);
      std::cout << (format == "csv" ? io::write_table_csv(t) : text_table(t));
    } else if (*maxfill) {
      const auto mf = counting::max_fill_table(rows_max, cols_max);
      std::cout << std::setw(4) << "r\\c";
      for (int c = 1; c <= cols_max; ++c) std::cout << std::setw(4) << c;
      std::cout << '\n';
      for (int r = 1; r <= rows_max; ++r) {
        std::cout << std::setw(4) << r;
        for (int c = 1; c <= cols_max; ++c) std::cout << std::setw(4) << mf.at(r, c);
        std::cout << '\n';
      }
    } else if (*enumerate) {
      const auto all = counting::brute_force_enumerate(rows, cols, dominoes);
      std::ostringstream os;
      for (const auto& p : all) {
        bool first = true;
        for (const auto& d : p.dominoes) {
          const auto s = d.second();
          os << (first ? "" : " ") << '(' << d.anchor.row << ',' << d.anchor.col << ")-(" << s.row << ',' << s.col
             << ')';
          first = false;
        }
        os << '\n';
      }
      if (out_path.empty()) {
        std::cout << os.str();
      } else {
        write_file(fs::path(out_path) / "placements.txt", os.str());
      }
      std::cerr << all.size() << " placements\n";
    } else if (*gfc) {
      std::vector<std::pair<std::string, poly::RationalGF>> results;
      if (engine == "eliminate" || engine == "both") results.emplace_back("eliminate", gf::gf_by_elimination(cols));
      if (engine == "fit" || engine == "both") {
        std::optional<gf::FitBounds> bounds;
        if (x_bound || y_bound) {
          bounds = gf::default_fit_bounds(cols);
          if (x_bound) bounds->x_degree = *x_bound;
          if (y_bound) bounds->y_degree = *y_bound;
        }
        const auto fit = gf::gf_by_series_fit(cols, bounds);
        results.emplace_back("fit", fit.gf);
        std::cerr << "fit: " << fit.terms_used << " terms, " << fit.held_out << " held out, nullity " << fit.nullity
                  << '\n';
      }
      const bool agree = results.size() < 2 || results[0].second.same_function(results[1].second);
      if (results.size() == 2) std::cerr << "engines " << (agree ? "agree" : "DISAGREE") << '\n';
      if (format == "json") {
        json j = json::array();
        for (const auto& [label, g] : results) {
          j.push_back(gf_json(g, cols));
          j.back()["engine"] = label;
        }
        std::cout << (results.size() == 1 ? j[0] : j).dump(2) << '\n';
      } else if (format == "paper-gf") {
        std::cout << io::write_gf_file(results.front().second, cols);
      } else {
        for (const auto& [label, g] : results) {
          std::cout << label << ":\n  num = " << g.num().str() << "\n  den = " << g.den().str() << '\n';
        }
      }
      return agree ? 0 : 1;
    } else if (*verify) {
      const auto entries = run_verify(suite, rows_max, cols_max);
      bool ok = true;
      json j = json::array();
      for (const auto& e : entries) {
        ok = ok && e.passed;
        if (report == "json") {
          j.push_back({{"suite", e.suite}, {"check", e.name}, {"passed", e.passed}, {"detail", e.detail}});
        } else {
          std::cout << (e.passed ? "PASS " : "FAIL ") << e.suite << ": " << e.name
                    << (e.detail.empty() ? "" : " [" + e.detail + "]") << '\n';
        }
      }
      if (report == "json") std::cout << j.dump(2) << '\n';
      return ok ? 0 : 1;
    } else if (*export_gf) {
      fs::path path = out_path.empty() ? fs::path(io::gf_file_name(cols)) : fs::path(out_path);
      if (fs::is_directory(path) || !path.has_filename()) path /= io::gf_file_name(cols);
      write_file(path, io::write_gf_file(gf::gf_by_elimination(cols), cols));
    } else if (*export_table) {
      write_file(out_path, io::write_table_csv(counting::count_table(cols, rows_max)));
    } else if (*render) {
      const auto all = counting::brute_force_enumerate(rows, cols, dominoes);
      const std::size_t n = limit == 0 ? all.size() : std::min(limit, all.size());
      for (std::size_t k = 0; k < n; ++k) {
        write_file(fs::path(out_path) / io::board_file_name(rows, cols, dominoes, k), io::render_svg(all[k]));
      }
      std::cerr << n << " drawings\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
