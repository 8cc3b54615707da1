#include "confexcess/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include "confexcess/errors.hpp"
#include "confexcess/numtheory.hpp"
#include "confexcess/twoint.hpp"

namespace confexcess::pipeline {
namespace {

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}

  template <typename Fn>
  auto run(const std::string& stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    struct Record {
      std::vector<StageTiming>& sink;
      const std::string& stage;
      std::chrono::steady_clock::time_point start;
      ~Record() {
        const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
        sink.push_back({stage, dt.count()});
      }
    } record{sink_, stage, start};
    return fn();
  }

 private:
  std::vector<StageTiming>& sink_;
};

std::vector<std::uint64_t> labels(const gf::Tower& tower, const twoint::PointSet& slots) {
  std::vector<std::uint64_t> out;
  out.reserve(slots.size());
  for (auto s : slots) out.push_back(tower.label(s));
  return out;
}

bool jacobi_congruence_holds(const chars::CycZ4& j, std::uint64_t q) {
  const std::int64_t a_mod4 = ((j.a % 4) + 4) % 4;
  return q % 8 == 1 ? a_mod4 == 3 : a_mod4 == 1;
}

}  // namespace

QParameters parse_q(std::uint64_t q) {
  const std::string hypothesis = "q must be a prime power p^r = 4m^2 + 1 with p = 1 (mod 4)";
  const auto m = m_from_q(q);
  if (!m) {
    throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not of the form 4m^2 + 1; " +
                                             hypothesis);
  }
  const auto pp = as_prime_power(q);
  if (!pp) {
    throw Error(ErrorCode::BadParameter, std::to_string(q) + " is not a prime power; " +
                                             hypothesis);
  }
  if (pp->p % 4 != 1) {
    throw Error(ErrorCode::BadParameter, "characteristic " + std::to_string(pp->p) +
                                             " is not 1 mod 4; " + hypothesis);
  }
  return {q, pp->p, pp->r, *m};
}

bool ConstructionReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == CheckStatus::Fail; });
}

ConstructionResult construct(std::uint64_t q, const ConstructOptions& options) {
  ConstructionResult result;
  ConstructionReport& rep = result.report;
  StageClock clock(rep.timings);
  auto check = [&rep](std::string name, bool ok) {
    rep.checks.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail});
  };
  auto skip = [&rep](std::string name) {
    rep.checks.push_back({std::move(name), CheckStatus::Skipped});
  };

  rep.params = parse_q(q);
  const std::uint64_t m = rep.params.m;
  if (q > options.max_q) {
    throw Error(ErrorCode::BadParameter,
                "q = " + std::to_string(q) + " exceeds the budget " + std::to_string(options.max_q));
  }

  const gf::Tower tower =
      clock.run("field", [&] { return gf::build_tower(rep.params.p, rep.params.r, options.max_q); });
  const auto& f = tower.field();
  rep.modulus = f.spec().modulus;
  rep.omega_coeffs.assign(tower.omega().coeffs.begin(),
                          tower.omega().coeffs.begin() + static_cast<std::ptrdiff_t>(f.degree()));
  rep.omega_index = f.index(tower.omega());
  check("omega_primitive", f.pow(tower.omega(), (q * q - 1) / 2) != f.one());
  check("subfield_generator_order",
        tower.sub.elements.size() == q && f.pow(tower.sub.units.generator(), (q - 1) / 2) != f.one());

  const chars::QuarticSetup setup =
      clock.run("characters", [&] { return chars::make_quartic_setup(tower); });
  rep.jacobi = setup.jacobi;
  check("jacobi_norm", setup.jacobi.norm() == static_cast<std::int64_t>(q));
  check("jacobi_congruence", jacobi_congruence_holds(setup.jacobi, q));
  rep.signs = chars::epsilon_delta(setup.jacobi, static_cast<std::int64_t>(m));

  const twoint::AdmissiblePair pair = clock.run("admissible_pair", [&] {
    if (options.enumerate_pairs) {
      for (const auto& p : twoint::enumerate_admissible_pairs(setup, rep.signs)) {
        rep.all_pairs.push_back({p.h, p.ell});
      }
    }
    return twoint::find_admissible_pair(setup, rep.signs);
  });
  rep.pair = {pair.h, pair.ell};
  check("admissible_pair", twoint::is_admissible(setup, pair.h, pair.ell, rep.signs));

  clock.run("character_identities", [&] {
    chars::character_sum_affine(setup, pair.ell);
    for (const auto& s : tower.sub.elements) chars::character_sum_twisted(setup, pair.ell, s);
    return 0;
  });
  check("affine_sum_identity", true);
  check("twisted_sum_identity", true);

  const twoint::BlockDesign design = twoint::qr_design_blocks(tower);
  const twoint::TwoIntersectionSet d =
      clock.run("two_intersection", [&] { return twoint::build_D(setup, design, pair); });
  rep.j = d.j;
  rep.alpha = d.alpha;
  rep.beta = d.beta;
  rep.d = labels(tower, d.elements);
  const twoint::DualSets duals = twoint::dual_sets(design, d);
  rep.d_alpha_perp = labels(tower, duals.alpha_perp);
  rep.d_beta_perp = labels(tower, duals.beta_perp);

  clock.run("duals", [&] {
    check("dual_size", duals.alpha_perp.size() == 2 * m * m - m);
    bool predicted = true;
    const auto hist_in = [&](std::size_t s) {
      std::size_t meet = 0;
      for (auto x : design.block(s)) {
        meet += static_cast<std::size_t>(std::binary_search(d.elements.begin(), d.elements.end(), x));
      }
      return meet;
    };
    for (std::size_t s = 0; s < tower.sub.elements.size(); ++s) {
      predicted = predicted && twoint::predict_profile(setup, pair, tower.sub.elements[s]) == hist_in(s);
    }
    check("predicted_profile", predicted);
    const int shift = rep.signs.epsilon * rep.signs.delta;
    const int h = static_cast<int>(pair.h);
    check("dual_alpha_identity",
          duals.alpha_perp == twoint::quartic_window_set(setup, pair.ell, h - shift));
    check("dual_beta_identity",
          duals.beta_perp == twoint::quartic_window_set(setup, pair.ell, h + shift));
    const auto nonsquare = twoint::intersection_profile(duals.alpha_perp,
                                                        twoint::nonsquare_design_blocks(tower));
    check("dual_nonsquare_profile", nonsquare.size() == 2 && nonsquare.begin()->first == m * m - m &&
                                        nonsquare.rbegin()->first == m * m);
    return 0;
  });

  auto [matrix, cert] =
      clock.run("conference", [&] { return confmat::maximize_excess(tower, d, duals.alpha_perp); });
  rep.order = cert.n;
  rep.k = cert.k;
  rep.excess = cert.excess;
  rep.bound = cert.bound;
  rep.a_count = cert.a_count;
  rep.row_sum_histogram = confmat::row_sum_spectrum(matrix);
  check("conference", confmat::verify_conference(matrix).ok);
  check("excess_attains_bound", cert.bound.equals(cert.excess));
  check("row_sum_parity", std::all_of(cert.row_sums.begin(), cert.row_sums.end(), [&](auto s) {
          return ((s % 2) + 2) % 2 == static_cast<std::int64_t>((cert.n - 1) % 2);
        }));
  std::int64_t square_sum = 0;
  for (auto s : cert.row_sums) square_sum += s * s;
  check("row_sum_squares", square_sum == static_cast<std::int64_t>(cert.n * (cert.n - 1)));

  clock.run("oracle", [&] {
    const std::uint64_t subsets = binomial(q, d.j);
    if (subsets <= options.budget) {
      const auto witnesses =
          oracle::brute_force_two_intersection_sets(design, d.j, d.alpha, d.beta, options.budget);
      check("oracle_two_intersection",
            std::find(witnesses.begin(), witnesses.end(), d.elements) != witnesses.end());
    } else {
      skip("oracle_two_intersection");
    }
    const std::size_t n = q + 1;
    if (2 * n < 63 && (std::uint64_t{1} << (2 * n)) <= options.budget) {
      const auto opt = oracle::brute_force_max_excess_switching(confmat::paley_conference(tower),
                                                                options.budget);
      check("oracle_max_excess", cert.bound.equals(opt.max_excess) && opt.max_excess == cert.excess);
    } else {
      skip("oracle_max_excess");
    }
    return 0;
  });

  result.matrix = std::move(matrix);
  return result;
}

}  // namespace confexcess::pipeline
