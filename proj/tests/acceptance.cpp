// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "confexcess/chars.hpp"
#include "confexcess/confmat.hpp"
#include "confexcess/errors.hpp"
#include "confexcess/gf.hpp"
#include "confexcess/oracle.hpp"
#include "confexcess/pipeline.hpp"
#include "confexcess/twoint.hpp"

using namespace confexcess;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string trimmed(const std::ostringstream& os) {
  std::string s = os.str();
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

struct Instance {
  std::uint64_t q, m;
};

const std::vector<Instance> kAttainment{{5, 1}, {17, 2}, {37, 3}, {101, 5}, {197, 7}, {257, 8}};
const std::vector<Instance> kSmall{{5, 1}, {17, 2}, {37, 3}};

struct Built {
  std::shared_ptr<const gf::Tower> tower;  // setup points into it
  chars::QuarticSetup setup;
  chars::Signs signs;
  twoint::AdmissiblePair pair;
  twoint::BlockDesign design;
  twoint::TwoIntersectionSet d;
};

Built build(const Instance& in) {
  Built b{std::make_shared<const gf::Tower>(gf::build_tower(in.q, 1)), {nullptr, {{}, 1}, {{}, 1}, {{}, 1}, {}}, {}, {},
          twoint::BlockDesign(0, {}), {}};
  b.setup = chars::make_quartic_setup(*b.tower);
  b.signs = chars::epsilon_delta(b.setup.jacobi, static_cast<std::int64_t>(in.m));
  b.pair = twoint::find_admissible_pair(b.setup, b.signs);
  b.design = twoint::qr_design_blocks(*b.tower);
  b.d = twoint::build_D(b.setup, b.design, b.pair);
  return b;
}

std::string ac1() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream note;
  for (const auto& [q, m] : kAttainment) {
    const auto result = pipeline::construct(q);
    const auto& w = result.matrix;
    const auto n = static_cast<std::int64_t>(q + 1);
    const auto k = static_cast<std::int64_t>(2 * m - 1);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t golden = 8 * mm * mm * mm + 4 * mm;
    const std::int64_t a = n * ((k + 2) * (k + 2) - (n - 1)) / (4 * (k + 1));
    const auto q_str = std::to_string(q);
    require(w.order() == q + 1, "order at q = " + q_str);
    require(confmat::verify_conference(w).ok, "conference at q = " + q_str);
    require(confmat::excess(w) == golden, "excess at q = " + q_str);
    require(confmat::excess_bound(q + 1).bound.equals(golden), "bound at q = " + q_str);
    require(result.report.all_passed(), "report checks at q = " + q_str);
    const std::map<std::int64_t, std::size_t> hist{{k, static_cast<std::size_t>(a)},
                                                   {k + 2, static_cast<std::size_t>(n - a)}};
    require(confmat::row_sum_spectrum(w) == hist, "row-sum histogram at q = " + q_str);
    note << q << ":" << golden << " ";
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  require(dt.count() < 60.0, "runtime " + std::to_string(dt.count()) + " s");
  note << "in " << std::fixed;
  note.precision(2);
  note << dt.count() << " s";
  return note.str();
}

std::string ac2() {
  for (const auto& in : kAttainment) {
    const Built b = build(in);
    const auto profile = twoint::intersection_profile(b.d.elements, b.design);
    const auto q_str = std::to_string(in.q);
    require(b.d.elements.size() == 2 * in.m * in.m - in.m + 1, "|D| at q = " + q_str);
    require(profile.size() == 2 && profile.begin()->first == in.m * in.m - in.m &&
                profile.rbegin()->first == in.m * in.m,
            "profile keys at q = " + q_str);
  }
  return "|D| = 2m^2 - m + 1, keys {m^2 - m, m^2}";
}

std::string ac3() {
  const auto start = std::chrono::steady_clock::now();
  const Built b = build({5, 1});
  const auto found = oracle::brute_force_two_intersection_sets(b.design, b.d.j, b.d.alpha, b.d.beta);
  require(std::find(found.begin(), found.end(), b.d.elements) != found.end(),
          "D not among the enumerated sets");
  const auto opt = oracle::brute_force_max_excess_switching(confmat::paley_conference(*b.tower));
  require(opt.max_excess == 12, "switching optimum " + std::to_string(opt.max_excess));
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  require(dt.count() < 1.0, "runtime");
  return std::to_string(found.size()) + " sets of C(5,2), optimum 12";
}

std::string ac4() {
  std::size_t sums = 0;
  for (const auto& in : kSmall) {
    const Built b = build(in);
    std::vector<std::uint64_t> ells{b.pair.ell};
    for (std::uint64_t ell = 1; ells.size() < 6; ++ell) {
      if (ell % (in.q + 1) != 0 && ell != b.pair.ell) ells.push_back(ell);
    }
    for (auto ell : ells) {
      const auto tag = "q = " + std::to_string(in.q) + ", ell = " + std::to_string(ell);
      require(chars::affine_sum_direct(b.setup, ell) == chars::affine_sum_closed_form(b.setup, ell),
              "affine sum at " + tag);
      ++sums;
      for (const auto& s : b.tower->sub.elements) {
        require(chars::twisted_sum_direct(b.setup, ell, s) ==
                    chars::twisted_sum_closed_form(b.setup, ell, s),
                "twisted sum at " + tag);
        ++sums;
      }
    }
  }
  return std::to_string(sums) + " exact sums";
}

std::string ac5() {
  std::ostringstream note;
  for (std::uint64_t q : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 101u}) {
    const gf::Tower t = gf::build_tower(q, 1);
    const auto j = chars::jacobi_sum(chars::Character(t.sub.units, 2),
                                     chars::Character(t.sub.units, 4));
    const std::int64_t a4 = ((j.a % 4) + 4) % 4;
    require(j.norm() == static_cast<std::int64_t>(q), "norm at q = " + std::to_string(q));
    require(a4 == (q % 8 == 1 ? 3 : 1), "congruence at q = " + std::to_string(q));
    note << q << ":" << j << " ";
  }
  return trimmed(note);
}

std::string ac6() {
  for (std::uint64_t q : {5u, 13u, 17u, 29u, 37u}) {
    const gf::Tower t = gf::build_tower(q, 1);
    const double tol = chars::complex_tolerance(q);
    const auto g = chars::gauss_sum(chars::Character(t.sub.units, 2));
    const auto q_str = std::to_string(q);
    require(std::abs(g - chars::quadratic_gauss_sum_closed_form(q, 1)) <= tol,
            "G(eta) at q = " + q_str);
    require(std::abs(std::norm(g) - static_cast<double>(q)) <= tol, "|G|^2 at q = " + q_str);
    const auto g4 = chars::gauss_sum(chars::Character(t.sub.units, 4));
    require(std::abs(std::norm(g4) - static_cast<double>(q)) <= tol, "|G(chi4)|^2 at q = " + q_str);
    for (unsigned i = 0; i < 2; ++i) {
      require(std::abs(chars::gauss_period(t.sub.units, i) - chars::gauss_period_closed_form(i, g)) <=
                  tol,
              "period at q = " + q_str);
    }
  }
  return "tolerance 1e-9 sqrt(q)";
}

std::string ac7() {
  std::ostringstream note;
  for (const auto& in : kSmall) {
    const auto counts = twoint::count_T_sets(gf::build_tower(in.q, 1));
    const std::uint64_t expected = (in.q * in.q - 1) / 4;
    require(counts.first == expected && counts.second == expected,
            "counts at q = " + std::to_string(in.q));
    note << in.q << ":" << expected << " ";
  }
  return trimmed(note);
}

std::string ac8() {
  for (const auto& in : kSmall) {
    const Built b = build(in);
    const auto duals = twoint::dual_sets(b.design, b.d);
    const int shift = b.signs.epsilon * b.signs.delta;
    const int h = static_cast<int>(b.pair.h);
    const auto q_str = std::to_string(in.q);
    require(duals.alpha_perp == twoint::quartic_window_set(b.setup, b.pair.ell, h - shift),
            "D_alpha^perp at q = " + q_str);
    require(duals.beta_perp == twoint::quartic_window_set(b.setup, b.pair.ell, h + shift),
            "D_beta^perp at q = " + q_str);
    const auto non =
        twoint::intersection_profile(duals.alpha_perp, twoint::nonsquare_design_blocks(*b.tower));
    require(non.size() == 2 && non.begin()->first == in.m * in.m - in.m &&
                non.rbegin()->first == in.m * in.m,
            "nonsquare profile at q = " + q_str);
  }
  return "set equality and nonsquare profile";
}

std::string ac9() {
  const twoint::BlockDesign fano(
      7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
  const auto line = twoint::certify_two_intersection(fano, {0, 1, 2}).swapped();
  const auto params = twoint::dual_parameters_2design(fano, line);
  require(params.j == 1 && params.alpha == 0 && params.beta == 1, "formula");

  // Enumeration: D_alpha^perp as a point set of the dual design.
  const auto duals = twoint::dual_sets(fano, line);
  const auto dual = fano.dual();
  const auto profile = twoint::intersection_profile(duals.alpha_perp, dual);
  require(duals.alpha_perp.size() == 1 && profile.size() == 2 && profile.begin()->first == 0 &&
              profile.rbegin()->first == 1,
          "enumeration");

  const std::size_t lambda = *fano.lambda();
  const auto c2 = [](std::size_t x) { return x * (x - 1) / 2; };
  require(c2(line.j) * lambda ==
              c2(line.alpha) * duals.alpha_perp.size() + c2(line.beta) * duals.beta_perp.size(),
          "pairwise balanced count");
  return "(1, 0, 1)";
}

std::string ac10() {
  std::mt19937_64 rng(20250101);
  std::bernoulli_distribution coin(0.5);
  auto w = pipeline::construct(17).matrix;
  for (int round = 0; round < 200; ++round) {
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i < w.order(); ++i) {
      if (coin(rng)) rows.push_back(i);
      if (coin(rng)) cols.push_back(i);
    }
    w = confmat::switch_signs(w, rows, cols);
    require(confmat::verify_conference(w).ok, "Gram identity after switching");
  }

  for (const auto& in : kAttainment) {
    const auto m = pipeline::construct(in.q).matrix;
    const auto n = static_cast<std::int64_t>(m.order());
    std::int64_t squares = 0;
    for (auto r : confmat::row_sums(m)) {
      require(((r % 2) + 2) % 2 == (n - 1) % 2, "row-sum parity at q = " + std::to_string(in.q));
      squares += r * r;
    }
    require(squares == n * (n - 1), "sum of squared row sums at q = " + std::to_string(in.q));
  }

  for (const auto& in : kSmall) {
    const gf::Tower t = gf::build_tower(in.q, 1);
    const auto& f = t.field();
    const chars::Character big(t.big_units, 4), sub(t.sub.units, 4);
    std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1);
    std::uniform_int_distribution<std::size_t> slot(0, t.q - 1);
    for (int i = 0; i < 10000; ++i) {
      const auto a = f.from_index(any(rng));
      const auto b = f.from_index(any(rng));
      require(big(f.mul(a, b)) == big(a) * big(b), "chi4 multiplicativity");
      const auto& x = t.sub.elements[slot(rng)];
      const auto& y = t.sub.elements[slot(rng)];
      require(sub(f.mul(x, y)) == sub(x) * sub(y), "chi4' multiplicativity");
    }
  }
  return "200 switchings, parity, squares, 6 x 10^4 character pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
      {"AC1 end-to-end attainment", ac1},   {"AC2 two-intersection certification", ac2},
      {"AC3 oracle agreement at q = 5", ac3}, {"AC4 character-sum identities", ac4},
      {"AC5 Jacobi-sum law", ac5},           {"AC6 Gauss sums and periods", ac6},
      {"AC7 existence counts", ac7},         {"AC8 dual identities", ac8},
      {"AC9 2-design dual law", ac9},        {"AC10 structural invariants", ac10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    try {
      const std::string note = run();
      std::cout << "PASS " << name << ": " << note << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "FAIL " << name << ": " << f.what << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL " << name << ": " << e.what() << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
