#include "atshape/solver.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace atshape {

namespace {

using Entries = GradedShape::Entries;

void canonicalize(Tiling& tiling) {
  std::sort(tiling.placements.begin(), tiling.placements.end(),
            [](const Placement& lhs, const Placement& rhs) {
              return std::tie(lhs.shift, lhs.tile) < std::tie(rhs.shift, rhs.tile);
            });
}

void require_unique_names(std::span<const Tile> tiles) {
  std::unordered_set<std::string> seen;
  for (const auto& tile : tiles) {
    if (!seen.insert(tile.name).second) {
      throw std::invalid_argument("duplicate tile name '" + tile.name + "'");
    }
  }
}

bool fits(const Entries& remaining, const GradedShape& tile, std::int64_t at) {
  for (const auto& [shift, counts] : tile.entries()) {
    if (shift > std::numeric_limits<std::int64_t>::max() - at) {
      return false;
    }
    const auto it = remaining.find(at + shift);
    if (it == remaining.end() || it->second.f < counts.f || it->second.a < counts.a) {
      return false;
    }
  }
  return true;
}

// Caller guarantees the tile fits.
void subtract(Entries& remaining, const GradedShape& tile, std::int64_t at) {
  for (const auto& [shift, counts] : tile.entries()) {
    const auto it = remaining.find(at + shift);
    it->second.f -= counts.f;
    it->second.a -= counts.a;
    if (it->second.f == 0 && it->second.a == 0) {
      remaining.erase(it);
    }
  }
}

void add_back(Entries& remaining, const GradedShape& tile, std::int64_t at) {
  for (const auto& [shift, counts] : tile.entries()) {
    auto& cell = remaining[at + shift];
    cell.f += counts.f;
    cell.a += counts.a;
  }
}

void check_sound(const Tiling& tiling, std::span<const Tile> tiles, const GradedShape& target,
                 const char* what) {
  if (tiling_sum(tiling, tiles) != target) {
    throw std::logic_error(std::string(what) + " produced a tiling that does not re-sum to its target");
  }
}

}  // namespace

Tile::Tile(std::string name_, GradedShape shape_) : name(std::move(name_)), shape(std::move(shape_)) {
  if (name.empty()) {
    throw std::invalid_argument("tile name must be nonempty");
  }
  if (shape.empty()) {
    throw std::invalid_argument("tile '" + name + "' has an empty shape");
  }
  if (shape.min_shift() != 0) {
    throw std::invalid_argument("tile '" + name + "' is not grounded: minimum shift is " +
                                std::to_string(shape.min_shift()));
  }
}

GradedShape tiling_sum(const Tiling& tiling, std::span<const Tile> tiles) {
  require_unique_names(tiles);
  std::unordered_map<std::string, const GradedShape*> by_name;
  for (const auto& tile : tiles) {
    by_name.emplace(tile.name, &tile.shape);
  }
  GradedShape total;
  for (const auto& placement : tiling.placements) {
    const auto it = by_name.find(placement.tile);
    if (it == by_name.end()) {
      throw std::invalid_argument("tiling names unknown tile '" + placement.tile + "'");
    }
    total = direct_sum(total, shifted(*it->second, placement.shift));
  }
  return total;
}

Tiling decomposition_tiling(const NamedDecomposition& decomposition) {
  Tiling tiling;
  for (const auto& summand : decomposition.summands) {
    tiling.placements.push_back({summand.label, summand.shift});
  }
  canonicalize(tiling);
  return tiling;
}

PeelResult greedy_peel(const GradedShape& target, std::span<const Tile> tiles) {
  require_unique_names(tiles);

  // Determinism precondition: single leading class of multiplicity 1 per
  // tile, pairwise distinct leading classes.
  std::optional<std::size_t> leader_of_f;
  std::optional<std::size_t> leader_of_a;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const auto& counts = tiles[i].shape.entries().begin()->second;
    const bool leads_f = counts.f == 1 && counts.a == 0;
    const bool leads_a = counts.f == 0 && counts.a == 1;
    if (!leads_f && !leads_a) {
      return {PeelStatus::nondeterministic, {},
              "tile '" + tiles[i].name + "' does not lead with a single class of multiplicity 1"};
    }
    auto& slot = leads_f ? leader_of_f : leader_of_a;
    if (slot.has_value()) {
      return {PeelStatus::nondeterministic, {},
              "tiles '" + tiles[*slot].name + "' and '" + tiles[i].name +
                  "' share the same leading class"};
    }
    slot = i;
  }

  Entries remaining = target.entries();
  Tiling tiling;
  while (!remaining.empty()) {
    const std::int64_t shift = remaining.begin()->first;
    const ClassCounts counts = remaining.begin()->second;
    // Peel the class with the larger uncovered multiplicity first, F on ties.
    ArtinClass cls;
    if (counts.f > 0 && counts.a > 0) {
      cls = counts.a > counts.f ? ArtinClass::A : ArtinClass::F;
    } else {
      cls = counts.f > 0 ? ArtinClass::F : ArtinClass::A;
    }
    const auto& slot = cls == ArtinClass::F ? leader_of_f : leader_of_a;
    if (!slot.has_value()) {
      return {PeelStatus::stuck, {},
              "stuck at shift " + std::to_string(shift) + ": no tile leads with class " +
                  to_char(cls)};
    }
    const Tile& tile = tiles[*slot];
    if (!fits(remaining, tile.shape, shift)) {
      return {PeelStatus::stuck, {},
              "stuck at shift " + std::to_string(shift) + ": tile '" + tile.name +
                  "' does not fit (subtraction would go negative)"};
    }
    subtract(remaining, tile.shape, shift);
    tiling.placements.push_back({tile.name, shift});
  }

  canonicalize(tiling);
  check_sound(tiling, tiles, target, "greedy_peel");
  return {PeelStatus::tiled, std::move(tiling), {}};
}

ExhaustiveResult exhaustive_tilings(const GradedShape& target, std::span<const Tile> tiles,
                                    const SolverConfig& config) {
  require_unique_names(tiles);
  if (target.rank() > config.rank_bound) {
    throw bound_error("target rank " + target.rank().str() +
                      " exceeds the exhaustive search rank bound " +
                      std::to_string(config.rank_bound));
  }

  ExhaustiveResult result;
  Entries remaining = target.entries();
  std::vector<Placement> current;
  const auto cap = static_cast<std::size_t>(std::max<std::int64_t>(config.tiling_cap, 0));

  // Each tiling multiset is produced exactly once: placements happen at the
  // (non-decreasing) minimum uncovered shift, and tile indices are forced to
  // be non-decreasing among placements that share a shift.
  auto search = [&](auto&& self, std::int64_t prev_shift, std::size_t min_index) -> void {
    if (result.tilings.size() >= cap) {
      result.capped = true;
      return;
    }
    if (remaining.empty()) {
      Tiling tiling{current};
      canonicalize(tiling);
      result.tilings.push_back(std::move(tiling));
      return;
    }
    const std::int64_t at = remaining.begin()->first;
    for (std::size_t i = (at == prev_shift) ? min_index : 0; i < tiles.size(); ++i) {
      if (!fits(remaining, tiles[i].shape, at)) {
        continue;
      }
      subtract(remaining, tiles[i].shape, at);
      current.push_back({tiles[i].name, at});
      self(self, at, i);
      current.pop_back();
      add_back(remaining, tiles[i].shape, at);
      if (result.capped) {
        return;
      }
    }
  };
  search(search, -1, 0);

  for (const auto& tiling : result.tilings) {
    check_sound(tiling, tiles, target, "exhaustive_tilings");
  }
  return result;
}

RatioVerdict obstruction_ratio(const GradedShape& target, const Tile& tile) {
  const ShapeStats target_stats = stats(target);
  const ShapeStats tile_stats = stats(tile.shape);
  if (target_stats.count_a == 0 && tile_stats.count_a > 0) {
    return RatioVerdict::excluded;
  }
  const ShapeStats untwisted = stats(twist(tile.shape));
  if (untwisted.ratio == target_stats.ratio && tile_stats.ratio < target_stats.ratio) {
    return RatioVerdict::excluded;
  }
  return RatioVerdict::not_excluded;
}

DivisibilityReport obstruction_divisibility(const GradedShape& target,
                                            std::span<const Tile> tiles) {
  Int modulus = 0;
  for (const auto& tile : tiles) {
    modulus = boost::multiprecision::gcd(modulus, tile.shape.count(ArtinClass::F));
  }
  const Int count_f = target.count(ArtinClass::F);
  const Int remainder = modulus == 0 ? count_f : count_f % modulus;
  return DivisibilityReport{remainder == 0, modulus, remainder};
}

std::vector<Tile> case1_tiles(std::int64_t side) {
  const GradedShape base = upper_case1(side);
  std::vector<Tile> tiles;
  tiles.emplace_back(std::string(kCase1TileName), base);
  tiles.emplace_back(std::string(kCase1TwistTileName), twist(base));
  return tiles;
}

std::vector<Tile> case2_tiles(std::int64_t side) {
  std::vector<Tile> tiles;
  tiles.emplace_back(std::string(kCase2TileName), upper_case2(side));
  return tiles;
}

UpperShapeReport infer_upper_shape(std::int64_t side, const SolverConfig& config) {
  const GradedShape target = weil_closed(side);
  const bool enumerate = target.rank() <= config.rank_bound;

  const auto run = [&](const std::vector<Tile>& tiles) {
    CaseReport report;
    PeelResult peel = greedy_peel(target, tiles);
    report.feasible = peel.status == PeelStatus::tiled;
    report.tiling = std::move(peel.tiling);
    report.detail = std::move(peel.detail);
    if (enumerate) {
      const ExhaustiveResult all = exhaustive_tilings(target, tiles, config);
      report.tiling_count = all.tilings.size();
      report.exhaustive_capped = all.capped;
    }
    return report;
  };

  return UpperShapeReport{run(case1_tiles(side)), run(case2_tiles(side))};
}

}  // namespace atshape
