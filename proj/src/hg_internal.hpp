#pragma once

#include "semwidth/errors.hpp"
#include "semwidth/model.hpp"
#include "semwidth/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace semwidth::internal {

// Bitmask view of a hypergraph; all mask positions follow the sorted vertex
// order. Limited to 64 vertices, far above every configured search limit.
struct HgView {
  std::vector<std::string> verts;
  std::map<std::string, int> vidx;
  std::vector<std::string> edge_names;
  std::vector<std::uint64_t> edge_masks;

  explicit HgView(const Hypergraph& h);

  std::uint64_t full_mask() const;
  std::uint64_t mask_of(const std::set<std::string>& set) const;
  std::set<std::string> unmask(std::uint64_t mask) const;
};

// Memoizing evaluator for integral / fractional cover numbers of vertex masks.
// rho uses a subset DP keyed by the still-uncovered mask; rho_star one exact
// LP per distinct mask.
struct CoverOracle {
  const HgView& view;
  std::map<std::uint64_t, long> rho_memo;
  std::map<std::uint64_t, Rational> rho_star_memo;

  explicit CoverOracle(const HgView& v) : view(v) {}

  long rho(std::uint64_t mask);
  std::vector<int> rho_witness(std::uint64_t mask);
  Rational rho_star(std::uint64_t mask);
};

}  // namespace semwidth::internal
