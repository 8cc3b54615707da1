#pragma once

// Plain-text matrix files and the JSON construction report.
//
// Matrix file: first line is the order n, then n lines of n space-separated
// values from {-1, 0, 1}; every line ends with '\n'; nothing else.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "confexcess/confmat.hpp"
#include "confexcess/pipeline.hpp"

namespace confexcess::formats {

void write_matrix(std::ostream& os, const confmat::SignedMatrix& w);
std::string matrix_to_string(const confmat::SignedMatrix& w);

/// Throws ParseError naming the line and column of the first problem.
confmat::SignedMatrix read_matrix(std::istream& is);
confmat::SignedMatrix read_matrix_file(const std::string& path);

/// Keys appear in a fixed order; timings are included only on request so the
/// default document is byte-for-byte reproducible.
nlohmann::ordered_json report_to_json(const pipeline::ConstructionReport& report,
                                      bool include_timings = false);

std::string render_report(const pipeline::ConstructionReport& report,
                          bool include_timings = false);

std::string_view to_string(pipeline::CheckStatus status);

}  // namespace confexcess::formats
