#include "confexcess/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "confexcess/confmat.hpp"
#include "confexcess/formats.hpp"
#include "confexcess/numtheory.hpp"
#include "confexcess/oracle.hpp"
#include "confexcess/pipeline.hpp"

namespace confexcess::commands {
namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  os << content;
  if (!os.flush()) throw Error(ErrorCode::IoError, "write to " + path + " failed");
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParameter:
    case ErrorCode::BadQ:
    case ErrorCode::NotPrime:
    case ErrorCode::DegreeTooLarge:
      return kBadParameter;
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return kIoError;
    default:
      return kCertificationFailed;
  }
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("CONFEXCESS_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // unparseable override: keep the built-in default
    }
  }
  return oracle::kDefaultBudget;
}

int run_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  try {
    pipeline::ConstructOptions options;
    options.enumerate_pairs = args.enumerate_pairs;
    options.budget = args.budget != 0 ? args.budget : default_budget();
    const auto result = pipeline::construct(args.q, options);
    const std::string report = formats::render_report(result.report, args.timings);
    const std::string matrix = formats::matrix_to_string(result.matrix);

    if (args.out) {
      switch (args.format) {
        case OutputFormat::Matrix: write_file(*args.out, matrix); break;
        case OutputFormat::Report: write_file(*args.out, report); break;
        case OutputFormat::Both:
          write_file(*args.out, matrix);
          write_file(*args.out + ".report.json", report);
          break;
      }
    } else {
      out << (args.format == OutputFormat::Matrix ? matrix : report);
    }

    if (!result.report.all_passed()) {
      err << "certification failed for q = " << args.q << "\n";
      return kCertificationFailed;
    }
    return kSuccess;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

int run_verify(const std::string& matrix_path, std::ostream& out, std::ostream& err) {
  confmat::SignedMatrix w;
  try {
    w = formats::read_matrix_file(matrix_path);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }

  const std::size_t n = w.order();
  const auto check = confmat::verify_conference(w);
  const std::int64_t e = confmat::excess(w);
  out << "order: " << n << "\n";
  out << "conference: " << (check.ok ? "PASS" : "FAIL");
  if (!check.ok) out << " (" << check.detail << ")";
  out << "\n";
  out << "excess: " << e << "\n";

  bool attained = false;
  if (n >= 2 && n % 2 == 0) {
    const auto bound = confmat::excess_bound(n);
    out << "bound: " << bound.bound.num << "/" << bound.bound.den << " (k = " << bound.k << ")\n";
    attained = bound.bound.equals(e);
  } else {
    out << "bound: n/a (odd order)\n";
  }
  out << "row sums:";
  for (const auto& [sum, count] : confmat::row_sum_spectrum(w)) out << " " << sum << ":" << count;
  out << "\n";
  out << "attainment: " << (check.ok && attained ? "PASS" : "FAIL") << "\n";
  return check.ok && attained ? kSuccess : kAttainmentFailure;
}

int run_table(std::uint64_t max_m, std::uint64_t budget, std::ostream& out, std::ostream& err) {
  if (max_m < 1) {
    err << "BadParameter: --max-m must be at least 1\n";
    return kBadParameter;
  }
  out << std::left << std::setw(8) << "q" << std::setw(5) << "m" << std::setw(7) << "|D|"
      << std::setw(12) << "(a,b)" << std::setw(7) << "n" << std::setw(5) << "k" << std::setw(10)
      << "bound" << std::setw(10) << "excess" << "status\n";
  int code = kSuccess;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    const std::uint64_t q = 4 * m * m + 1;
    const auto pp = as_prime_power(q);
    if (!pp || pp->p % 4 != 1) continue;
    pipeline::ConstructOptions options;
    options.budget = budget != 0 ? budget : default_budget();
    out << std::setw(8) << q << std::setw(5) << m;
    try {
      const auto result = pipeline::construct(q, options);
      const auto& r = result.report;
      const std::string ab = "(" + std::to_string(r.alpha) + "," + std::to_string(r.beta) + ")";
      std::string bound = std::to_string(r.bound.num);
      if (r.bound.den != 1) bound += "/" + std::to_string(r.bound.den);
      const bool pass = r.all_passed() && r.attains_bound();
      out << std::setw(7) << r.j << std::setw(12) << ab << std::setw(7) << r.order << std::setw(5)
          << r.k << std::setw(10) << bound << std::setw(10) << r.excess << (pass ? "PASS" : "FAIL")
          << "\n";
      if (!pass) code = kCertificationFailed;
    } catch (const Error& e) {
      out << "FAIL (" << e.what() << ")\n";
      code = std::max(code, exit_code_for(e.code()));
    }
  }
  return code;
}

}  // namespace confexcess::commands
