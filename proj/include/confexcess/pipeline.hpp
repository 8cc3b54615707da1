#pragma once

// End-to-end construction for one q = 4m^2 + 1: field tower, characters,
// admissible pair, two-intersection set, duals, switched conference matrix,
// and every cross-check, collected into a ConstructionReport.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "confexcess/chars.hpp"
#include "confexcess/confmat.hpp"
#include "confexcess/gf.hpp"
#include "confexcess/oracle.hpp"

namespace confexcess::pipeline {

struct QParameters {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned r = 0;
  std::uint64_t m = 0;
};

/// Accepts q = p^r = 4m^2 + 1 with p = 1 (mod 4); BadParameter otherwise.
QParameters parse_q(std::uint64_t q);

struct ConstructOptions {
  bool enumerate_pairs = false;
  /// Cap on exhaustive oracle work (subsets or sign patterns).
  std::uint64_t budget = oracle::kDefaultBudget;
  std::uint64_t max_q = gf::kDefaultMaxSubfieldOrder;
};

enum class CheckStatus { Pass, Fail, Skipped };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Skipped;
};

struct StageTiming {
  std::string stage;
  double milliseconds = 0.0;
};

struct PairSummary {
  unsigned h = 0;
  std::uint64_t ell = 0;
};

struct ConstructionReport {
  QParameters params;
  std::vector<std::uint64_t> modulus;       // of F_{q^2} over F_p, constant term first
  std::vector<std::uint64_t> omega_coeffs;  // primitive element of F_{q^2}
  std::uint64_t omega_index = 0;
  chars::CycZ4 jacobi;
  chars::Signs signs;
  PairSummary pair;
  std::vector<PairSummary> all_pairs;  // filled only when enumerating
  std::size_t j = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  // Subfield elements are written by field index; for prime q this is the residue.
  std::vector<std::uint64_t> d;
  std::vector<std::uint64_t> d_alpha_perp;
  std::vector<std::uint64_t> d_beta_perp;
  std::size_t order = 0;
  std::int64_t k = 0;
  std::int64_t excess = 0;
  confmat::Rational bound;
  std::int64_t a_count = 0;
  std::map<std::int64_t, std::size_t> row_sum_histogram;
  std::vector<Check> checks;
  std::vector<StageTiming> timings;

  bool all_passed() const;
  bool attains_bound() const { return bound.equals(excess); }
};

struct ConstructionResult {
  ConstructionReport report;
  confmat::SignedMatrix matrix;
};

/// Runs the whole construction. Internal failures surface as Error with
/// IdentityViolation, ProfileViolation or CertificationFailed; boolean
/// cross-checks land in report.checks.
ConstructionResult construct(std::uint64_t q, const ConstructOptions& options = {});

}  // namespace confexcess::pipeline
