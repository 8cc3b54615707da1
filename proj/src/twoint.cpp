#include "confexcess/twoint.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "confexcess/errors.hpp"
#include "confexcess/numtheory.hpp"

namespace confexcess::twoint {

using chars::CycZ4;
using gf::FieldElement;

namespace {

std::uint64_t require_m(std::uint64_t q) {
  const auto m = m_from_q(q);
  if (!m) throw Error(ErrorCode::BadQ, "q = " + std::to_string(q) + " is not 4m^2 + 1");
  return *m;
}

std::vector<char> indicator(const PointSet& subset, std::size_t size) {
  std::vector<char> in(size, 0);
  for (auto x : subset) {
    if (x >= size) throw Error(ErrorCode::IndexOutOfRange, "point " + std::to_string(x));
    in[x] = 1;
  }
  return in;
}

BlockDesign translate_design(const gf::Tower& tower, unsigned residue) {
  const auto& f = tower.field();
  const auto& elems = tower.sub.elements;
  PointSet base;
  for (const auto& y : elems) {
    const auto cls = tower.sub.units.residue_class(y, 2);
    if (cls && *cls == residue) base.push_back(tower.position_of(y));
  }
  std::vector<PointSet> blocks;
  blocks.reserve(elems.size());
  for (const auto& a : elems) {
    PointSet block;
    block.reserve(base.size());
    for (auto x : base) block.push_back(tower.position_of(f.add(elems[x], a)));
    blocks.push_back(std::move(block));
  }
  return BlockDesign(elems.size(), std::move(blocks));
}

}  // namespace

BlockDesign::BlockDesign(std::size_t v, std::vector<PointSet> blocks)
    : v_(v), blocks_(std::move(blocks)) {
  for (auto& block : blocks_) {
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    if (!block.empty() && block.back() >= v_) {
      throw Error(ErrorCode::IndexOutOfRange, "block point " + std::to_string(block.back()));
    }
  }
}

std::optional<std::size_t> BlockDesign::block_size() const {
  if (blocks_.empty()) return std::nullopt;
  const std::size_t k = blocks_.front().size();
  for (const auto& block : blocks_) {
    if (block.size() != k) return std::nullopt;
  }
  return k;
}

std::optional<std::size_t> BlockDesign::replication() const {
  std::vector<std::size_t> count(v_, 0);
  for (const auto& block : blocks_) {
    for (auto x : block) ++count[x];
  }
  if (count.empty()) return std::nullopt;
  if (std::adjacent_find(count.begin(), count.end(), std::not_equal_to<>()) != count.end()) {
    return std::nullopt;
  }
  return count.front();
}

std::optional<std::size_t> BlockDesign::lambda() const {
  if (v_ < 2) return std::nullopt;
  std::vector<std::size_t> pairs(v_ * v_, 0);
  for (const auto& block : blocks_) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) ++pairs[block[i] * v_ + block[j]];
    }
  }
  const std::size_t lambda = pairs[0 * v_ + 1];
  for (std::size_t x = 0; x < v_; ++x) {
    for (std::size_t y = x + 1; y < v_; ++y) {
      if (pairs[x * v_ + y] != lambda) return std::nullopt;
    }
  }
  return lambda;
}

BlockDesign BlockDesign::dual() const {
  std::vector<PointSet> through(v_);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (auto x : blocks_[b]) through[x].push_back(b);
  }
  return BlockDesign(blocks_.size(), std::move(through));
}

Histogram intersection_profile(const PointSet& subset, const BlockDesign& design) {
  const auto in = indicator(subset, design.v());
  Histogram hist;
  for (const auto& block : design.blocks()) {
    std::size_t meet = 0;
    for (auto x : block) meet += static_cast<std::size_t>(in[x]);
    ++hist[meet];
  }
  return hist;
}

TwoIntersectionSet certify_two_intersection(const BlockDesign& design, PointSet subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  const Histogram hist = intersection_profile(subset, design);
  if (hist.size() != 2) {
    throw Error(ErrorCode::ProfileViolation,
                std::to_string(hist.size()) + " distinct intersection sizes, expected 2");
  }
  const std::size_t j = subset.size();
  return {std::move(subset), j, hist.begin()->first, hist.rbegin()->first};
}

TwoIntersectionSet complement(const BlockDesign& design, const TwoIntersectionSet& d) {
  const auto k = design.block_size();
  if (!k) throw Error(ErrorCode::ProfileViolation, "complement needs constant block size");
  const auto in = indicator(d.elements, design.v());
  PointSet rest;
  for (std::size_t x = 0; x < design.v(); ++x) {
    if (!in[x]) rest.push_back(x);
  }
  const std::size_t j = rest.size();
  return {std::move(rest), j, *k - d.alpha, *k - d.beta};
}

DualSets dual_sets(const BlockDesign& design, const TwoIntersectionSet& d) {
  const auto in = indicator(d.elements, design.v());
  DualSets out;
  for (std::size_t b = 0; b < design.b(); ++b) {
    std::size_t meet = 0;
    for (auto x : design.block(b)) meet += static_cast<std::size_t>(in[x]);
    if (meet == d.alpha) {
      out.alpha_perp.push_back(b);
    } else if (meet == d.beta) {
      out.beta_perp.push_back(b);
    } else {
      throw Error(ErrorCode::ProfileViolation, "block " + std::to_string(b) + " meets D in " +
                                                   std::to_string(meet) + " points");
    }
  }
  const auto r = design.replication();
  if (r && d.alpha != d.beta) {
    const auto rj = static_cast<std::int64_t>(*r * d.j);
    const auto beta_b = static_cast<std::int64_t>(d.beta * design.b());
    const auto diff = static_cast<std::int64_t>(d.alpha) - static_cast<std::int64_t>(d.beta);
    if ((rj - beta_b) != diff * static_cast<std::int64_t>(out.alpha_perp.size())) {
      throw Error(ErrorCode::CertificationFailed, "dual size law violated");
    }
  }
  return out;
}

DualParameters dual_parameters_2design(const BlockDesign& design, const TwoIntersectionSet& d) {
  const auto lam = design.lambda();
  const auto rep = design.replication();
  if (!lam || !rep || !design.block_size()) {
    throw Error(ErrorCode::NotTwoDesign, "design has no constant lambda");
  }
  const auto lambda = static_cast<std::int64_t>(*lam);
  const auto r = static_cast<std::int64_t>(*rep);
  const auto b = static_cast<std::int64_t>(design.b());
  const auto j = static_cast<std::int64_t>(d.j);
  const auto alpha = static_cast<std::int64_t>(d.alpha);
  const auto beta = static_cast<std::int64_t>(d.beta);
  const std::int64_t diff = alpha - beta;
  if (diff == 0) throw Error(ErrorCode::ProfileViolation, "alpha equals beta");

  auto exact = [&](std::int64_t num, const char* what) {
    if (num % diff != 0) {
      throw Error(ErrorCode::CertificationFailed, std::string(what) + " is not integral");
    }
    return num / diff;
  };
  const DualParameters params{exact(r * j - beta * b, "j_perp"),
                              exact(lambda * j - beta * r, "alpha_perp"),
                              exact(lambda * (j - 1) + r - beta * r, "beta_perp")};

  const DualSets duals = dual_sets(design, d);
  if (static_cast<std::int64_t>(duals.alpha_perp.size()) != params.j) {
    throw Error(ErrorCode::CertificationFailed, "|D_alpha^perp| disagrees with j_perp");
  }
  const BlockDesign dual_design = design.dual();
  const auto in_dual = indicator(duals.alpha_perp, dual_design.v());
  const auto in_d = indicator(d.elements, design.v());
  for (std::size_t p = 0; p < design.v(); ++p) {
    std::int64_t meet = 0;
    for (auto blk : dual_design.block(p)) meet += in_dual[blk];
    if (meet != (in_d[p] ? params.beta : params.alpha)) {
      throw Error(ErrorCode::CertificationFailed,
                  "dual intersection at point " + std::to_string(p) + " is " +
                      std::to_string(meet));
    }
  }

  auto choose2 = [](std::int64_t x) { return x * (x - 1) / 2; };
  const std::int64_t lhs = choose2(j) * lambda;
  const std::int64_t rhs = choose2(alpha) * static_cast<std::int64_t>(duals.alpha_perp.size()) +
                           choose2(beta) * static_cast<std::int64_t>(duals.beta_perp.size());
  if (lhs != rhs) throw Error(ErrorCode::CertificationFailed, "pairwise balanced count fails");
  return params;
}

BlockDesign qr_design_blocks(const gf::Tower& tower) {
  if (tower.q % 4 != 1) {
    throw Error(ErrorCode::BadQ, "q = " + std::to_string(tower.q) + " is not 1 mod 4");
  }
  return translate_design(tower, 0);
}

BlockDesign nonsquare_design_blocks(const gf::Tower& tower) {
  if (tower.q % 4 != 1) {
    throw Error(ErrorCode::BadQ, "q = " + std::to_string(tower.q) + " is not 1 mod 4");
  }
  return translate_design(tower, 1);
}

namespace {

struct EllCharacters {
  chars::LineParams line;
  CycZ4 chi_norm;
  CycZ4 chi_disc;
};

EllCharacters ell_characters(const chars::QuarticSetup& setup, std::uint64_t ell) {
  EllCharacters out{chars::line_params(*setup.tower, ell), {}, {}};
  out.chi_norm = setup.chi4_sub(out.line.norm_param);
  out.chi_disc = setup.chi4_sub(out.line.discriminant);
  return out;
}

bool conditions_hold(const EllCharacters& ec, unsigned h, chars::Signs signs) {
  const std::int64_t first = (-signs.epsilon * signs.delta + 1) / 2 + static_cast<int>(h);
  return ec.chi_norm == CycZ4::zeta(first) &&
         ec.chi_disc == -CycZ4::zeta(signs.epsilon + 2 * static_cast<int>(h));
}

AdmissiblePair make_pair(const EllCharacters& ec, unsigned h, chars::Signs signs) {
  return {h, ec.line.ell, signs.epsilon, signs.delta, ec.line.norm_param, ec.line.t};
}

}  // namespace

bool is_admissible(const chars::QuarticSetup& setup, unsigned h, std::uint64_t ell,
                   chars::Signs signs) {
  if (ell % (setup.tower->q + 1) == 0) return false;
  return conditions_hold(ell_characters(setup, ell), h % 4, signs);
}

AdmissiblePair find_admissible_pair(const chars::QuarticSetup& setup, chars::Signs signs) {
  const std::uint64_t q = setup.tower->q;
  for (std::uint64_t ell = 1; ell + 2 <= q * q; ++ell) {
    if (ell % (q + 1) == 0) continue;
    const EllCharacters ec = ell_characters(setup, ell);
    for (unsigned h = 0; h < 4; ++h) {
      if (conditions_hold(ec, h, signs)) return make_pair(ec, h, signs);
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no admissible (h, ell) for q = " + std::to_string(q));
}

std::vector<AdmissiblePair> enumerate_admissible_pairs(const chars::QuarticSetup& setup,
                                                       chars::Signs signs) {
  const std::uint64_t q = setup.tower->q;
  std::vector<AdmissiblePair> out;
  for (std::uint64_t ell = 1; ell + 2 <= q * q; ++ell) {
    if (ell % (q + 1) == 0) continue;
    const EllCharacters ec = ell_characters(setup, ell);
    for (unsigned h = 0; h < 4; ++h) {
      if (conditions_hold(ec, h, signs)) out.push_back(make_pair(ec, h, signs));
    }
  }
  return out;
}

std::pair<std::uint64_t, std::uint64_t> count_T_sets(const gf::Tower& tower) {
  const auto& f = tower.field();
  const std::uint64_t q = tower.q;
  const FieldElement step = f.mul(tower.omega(), tower.omega());
  FieldElement x = f.pow(tower.omega(), 1 + (q + 1) / 2);
  std::pair<std::uint64_t, std::uint64_t> counts{0, 0};
  for (std::uint64_t ell = 1; ell + 1 < q * q; ell += 2) {
    const auto cls = tower.sub.units.residue_class(trace_down(tower, x), 2);
    if (cls) (*cls == 0 ? counts.first : counts.second) += 1;
    x = f.mul(x, step);
  }
  return counts;
}

PointSet quartic_window_set(const chars::QuarticSetup& setup, std::uint64_t ell, int h) {
  const auto& tower = *setup.tower;
  const auto& f = tower.field();
  const auto lp = chars::line_params(tower, ell);
  const unsigned lo = static_cast<unsigned>(((h % 4) + 4) % 4);
  const unsigned hi = (lo + 1) % 4;
  PointSet out;
  for (std::size_t i = 0; i < tower.sub.elements.size(); ++i) {
    const FieldElement y = f.add(f.one(), f.mul(lp.omega_ell, tower.sub.elements[i]));
    const auto cls = tower.big_units.residue_class(y, 4);
    if (!cls) {
      throw Error(ErrorCode::BadEll, "1 + x omega^ell vanished for ell = " + std::to_string(ell));
    }
    if (*cls == lo || *cls == hi) out.push_back(i);
  }
  return out;
}

TwoIntersectionSet build_D(const chars::QuarticSetup& setup, const BlockDesign& design,
                           const AdmissiblePair& pair) {
  const std::uint64_t m = require_m(setup.tower->q);
  PointSet members = quartic_window_set(setup, pair.ell, static_cast<int>(pair.h));
  const std::size_t expected_j = 2 * m * m - m + 1;
  if (members.size() != expected_j) {
    throw Error(ErrorCode::ProfileViolation, "|D| = " + std::to_string(members.size()) +
                                                 ", expected " + std::to_string(expected_j));
  }
  TwoIntersectionSet d = certify_two_intersection(design, std::move(members));
  if (d.alpha != m * m - m || d.beta != m * m) {
    throw Error(ErrorCode::ProfileViolation, "intersection sizes " + std::to_string(d.alpha) +
                                                 ", " + std::to_string(d.beta));
  }
  return d;
}

std::size_t predict_profile(const chars::QuarticSetup& setup, const AdmissiblePair& pair,
                            const FieldElement& s) {
  const auto& tower = *setup.tower;
  const std::uint64_t m = require_m(tower.q);
  tower.position_of(s);
  const auto& f = tower.field();
  const FieldElement u = f.add(f.add(f.one(), f.mul(pair.t, s)),
                               f.mul(pair.norm_param, f.mul(s, s)));
  const auto cls = tower.sub.units.residue_class(u, 4);
  if (!cls) throw Error(ErrorCode::BadEll, "u vanished");
  const unsigned rel = (*cls + 4 - pair.h % 4) % 4;
  const bool middle = rel == 1 || rel == 2;  // chi4'(u) in {zeta^{h+1}, zeta^{h+2}}
  const bool small = pair.epsilon * pair.delta == -1 ? middle : !middle;
  return small ? m * m - m : m * m;
}

}  // namespace confexcess::twoint
