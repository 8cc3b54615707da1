#include "confexcess/formats.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "confexcess/errors.hpp"

namespace confexcess::formats {
namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + what);
}

// Splits on single spaces; reports the 1-based column of each token.
std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& text) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    out.emplace_back(text.substr(start, i - start), start + 1);
  }
  return out;
}

}  // namespace

void write_matrix(std::ostream& os, const confmat::SignedMatrix& w) {
  const std::size_t n = w.order();
  os << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) os << ' ';
      os << static_cast<int>(w(i, j));
    }
    os << '\n';
  }
}

std::string matrix_to_string(const confmat::SignedMatrix& w) {
  std::ostringstream os;
  write_matrix(os, w);
  return os.str();
}

confmat::SignedMatrix read_matrix(std::istream& is) {
  const std::string text{std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  if (text.empty()) parse_fail(1, 1, "empty input");
  if (text.back() != '\n') {
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
    parse_fail(lines, text.size() - text.rfind('\n'), "missing trailing newline");
  }

  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }

  const auto header = tokens(lines[0]);
  if (header.size() != 1) parse_fail(1, 1, "expected the matrix order alone on the first line");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    const long long value = std::stoll(header[0].first, &used);
    if (used != header[0].first.size() || value < 1) throw std::invalid_argument("order");
    n = static_cast<std::size_t>(value);
  } catch (const std::exception&) {
    parse_fail(1, header[0].second, "order must be a positive integer");
  }
  if (lines.size() < n + 1) {
    parse_fail(lines.size() + 1, 1, "expected " + std::to_string(n) + " rows, found " +
                                        std::to_string(lines.size() - 1));
  }
  if (lines.size() > n + 1) parse_fail(n + 2, 1, "unexpected content after the last row");

  std::vector<std::int8_t> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = tokens(lines[i + 1]);
    for (std::size_t j = 0; j < row.size() && j <= n; ++j) {
      if (j == n) parse_fail(i + 2, row[j].second, "too many entries");
      const std::string& tok = row[j].first;
      if (tok == "1") {
        entries.push_back(1);
      } else if (tok == "0") {
        entries.push_back(0);
      } else if (tok == "-1") {
        entries.push_back(-1);
      } else {
        parse_fail(i + 2, row[j].second, "entry '" + tok + "' is not -1, 0 or 1");
      }
    }
    if (row.size() < n) {
      parse_fail(i + 2, lines[i + 1].size() + 1,
                 "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
    }
  }
  return confmat::SignedMatrix(n, std::move(entries));
}

confmat::SignedMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return read_matrix(in);
}

std::string_view to_string(pipeline::CheckStatus status) {
  switch (status) {
    case pipeline::CheckStatus::Pass: return "pass";
    case pipeline::CheckStatus::Fail: return "fail";
    case pipeline::CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

nlohmann::ordered_json report_to_json(const pipeline::ConstructionReport& report,
                                      bool include_timings) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["q"] = report.params.q;
  j["p"] = report.params.p;
  j["r"] = report.params.r;
  j["m"] = report.params.m;
  j["field"] = ordered_json{{"modulus", report.modulus},
                            {"omega", report.omega_coeffs},
                            {"omega_index", report.omega_index}};
  j["jacobi"] = ordered_json{{"a", report.jacobi.a}, {"b", report.jacobi.b}};
  j["signs"] = ordered_json{{"epsilon", report.signs.epsilon}, {"delta", report.signs.delta}};
  j["pair"] = ordered_json{{"h", report.pair.h}, {"ell", report.pair.ell}};
  if (!report.all_pairs.empty()) {
    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.all_pairs) pairs.push_back(ordered_json{{"h", p.h}, {"ell", p.ell}});
    j["admissible_pairs"] = std::move(pairs);
  }
  j["two_intersection"] = ordered_json{{"j", report.j},
                                       {"alpha", report.alpha},
                                       {"beta", report.beta},
                                       {"D", report.d},
                                       {"D_alpha_perp", report.d_alpha_perp},
                                       {"D_beta_perp", report.d_beta_perp}};
  ordered_json hist = ordered_json::array();
  for (const auto& [sum, count] : report.row_sum_histogram) {
    hist.push_back(ordered_json{{"row_sum", sum}, {"count", count}});
  }
  j["matrix"] = ordered_json{{"order", report.order},
                             {"k", report.k},
                             {"excess", report.excess},
                             {"bound", ordered_json{{"numerator", report.bound.num},
                                                    {"denominator", report.bound.den}}},
                             {"a_count", report.a_count},
                             {"row_sum_histogram", std::move(hist)},
                             {"attains_bound", report.attains_bound()}};
  ordered_json checks = ordered_json::object();
  for (const auto& c : report.checks) checks[c.name] = to_string(c.status);
  j["checks"] = std::move(checks);
  j["all_passed"] = report.all_passed();
  if (include_timings) {
    ordered_json timings = ordered_json::object();
    for (const auto& t : report.timings) timings[t.stage] = t.milliseconds;
    j["timings_ms"] = std::move(timings);
  }
  return j;
}

std::string render_report(const pipeline::ConstructionReport& report, bool include_timings) {
  return report_to_json(report, include_timings).dump(2) + "\n";
}

}  // namespace confexcess::formats
