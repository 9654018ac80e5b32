#include "atshape/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace atshape {

namespace {

void require_length(std::int64_t length, const char* what) {
  if (length < 1) {
    throw std::invalid_argument(std::string(what) + ": length must be >= 1, got " +
                                std::to_string(length));
  }
}

void require_odd(std::int64_t side, const char* what) {
  require_length(side, what);
  if (side % 2 == 0) {
    throw std::invalid_argument(std::string(what) + ": side must be odd, got " +
                                std::to_string(side));
  }
}

Int factorial(std::int64_t n) {
  Int result = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

// Advances a strictly increasing index vector over {0..n-1}; returns false
// after the last combination.
bool next_combination(std::vector<std::int64_t>& idx, std::int64_t n) {
  const auto k = static_cast<std::int64_t>(idx.size());
  for (std::int64_t pos = k - 1; pos >= 0; --pos) {
    if (idx[pos] < n - (k - pos)) {
      ++idx[pos];
      for (std::int64_t q = pos + 1; q < k; ++q) {
        idx[q] = idx[q - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

std::vector<std::int64_t> first_combination(std::int64_t k) {
  std::vector<std::int64_t> idx(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    idx[static_cast<std::size_t>(i)] = i;
  }
  return idx;
}

}  // namespace

NamedDecomposition NamedDecomposition::of(std::vector<Summand> summands) {
  GradedShape total;
  for (const auto& summand : summands) {
    total = direct_sum(total, shifted(summand.tile, summand.shift));
  }
  return NamedDecomposition{std::move(summands), std::move(total)};
}

GradedShape projective_space_shape(std::int64_t length) {
  require_length(length, "projective_space_shape");
  GradedShape::Entries entries;
  for (std::int64_t s = 0; s < length; ++s) {
    entries.emplace_hint(entries.end(), s, ClassCounts{1, 0});
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape weil_closed(std::int64_t side) {
  require_odd(side, "weil_closed");
  GradedShape::Entries entries;
  for (std::int64_t m = 0; m <= 2 * (side - 1); ++m) {
    // Unordered pairs i < j with i + j = m inside [0, side).
    const std::int64_t lo = std::max<std::int64_t>(0, m - (side - 1));
    const std::int64_t hi = (m % 2 == 0) ? m / 2 - 1 : (m - 1) / 2;
    const std::int64_t pairs = std::max<std::int64_t>(0, hi - lo + 1);
    const std::int64_t diag = (m % 2 == 0) ? 1 : 0;
    entries.emplace_hint(entries.end(), m, ClassCounts{diag + pairs, pairs});
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape weil_oracle(std::int64_t side) {
  require_odd(side, "weil_oracle");
  GradedShape::Entries entries;
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = 0; j < side; ++j) {
      if (i == j) {
        entries[2 * i].f += 1;  // swap-fixed cell
      } else if (i < j) {
        // The 2-element orbit {(i,j),(j,i)} is a rank-2 permutation module;
        // it splits as one F and one A at the common shift.
        entries[i + j].f += 1;
        entries[i + j].a += 1;
      }
    }
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape upper_case1(std::int64_t length) {
  require_odd(length, "upper_case1");
  return projective_space_shape(length);
}

GradedShape upper_case2(std::int64_t length) {
  require_odd(length, "upper_case2");
  GradedShape::Entries entries;
  for (std::int64_t s = 0; s < length; ++s) {
    entries.emplace_hint(entries.end(), s, s % 2 == 0 ? ClassCounts{1, 0} : ClassCounts{0, 1});
  }
  return GradedShape::from_entries(std::move(entries));
}

NamedDecomposition decomposition_M(std::int64_t side) {
  require_odd(side, "decomposition_M");
  const GradedShape base = upper_case1(side);
  const GradedShape twisted = twist(base);
  std::vector<Summand> summands;
  for (std::int64_t i = 0; i <= (side - 1) / 2; ++i) {
    summands.push_back({base, std::string(kCase1TileName), 2 * i});
  }
  for (std::int64_t i = 1; i <= (side - 1) / 2; ++i) {
    summands.push_back({twisted, std::string(kCase1TwistTileName), 2 * i - 1});
  }
  return NamedDecomposition::of(std::move(summands));
}

NamedDecomposition decomposition_second(std::int64_t side) {
  require_odd(side, "decomposition_second");
  const GradedShape base = upper_case2(side);
  std::vector<Summand> summands;
  for (std::int64_t i = 0; i < side; ++i) {
    summands.push_back({base, std::string(kCase2TileName), i});
  }
  return NamedDecomposition::of(std::move(summands));
}

NamedDecomposition decomposition_third(std::int64_t side) {
  require_odd(side, "decomposition_third");
  const GradedShape base = upper_case2(side);
  std::vector<Summand> summands;
  for (std::int64_t i = 0; i + 1 < side; ++i) {
    summands.push_back({base, std::string(kCase2TileName), i});
  }
  return NamedDecomposition::of(std::move(summands));
}

InvolutionCounts involution_counts(std::int64_t side, std::int64_t index) {
  require_odd(side, "involution_counts");
  if (side < 3) {
    throw std::invalid_argument("involution_counts: side must be >= 3");
  }
  if (index < 1 || index > (side - 1) / 2) {
    throw std::invalid_argument("involution_counts: index " + std::to_string(index) +
                                " outside 1..(side-1)/2 for side " + std::to_string(side));
  }
  const Int a = (Int(1) << static_cast<unsigned>(index)) * binomial((side - 1) / 2, index);
  const Int b = binomial(side, index) * binomial(side - index, index);
  if ((b + a) % 2 != 0 || (b - a) % 2 != 0) {
    throw std::logic_error("involution_counts: (b +- a)/2 not integral for side " +
                           std::to_string(side) + ", index " + std::to_string(index));
  }
  return InvolutionCounts{a, b, (b + a) / 2, (b - a) / 2};
}

Int flag_rank_oracle(std::int64_t side, std::int64_t index) {
  require_odd(side, "flag_rank_oracle");
  if (index < 1 || index > (side - 1) / 2) {
    throw std::invalid_argument("flag_rank_oracle: index " + std::to_string(index) +
                                " outside 1..(side-1)/2 for side " + std::to_string(side));
  }
  if (side <= 16) {
    // Literal census: ordered pairs of disjoint index-subsets of {0..side-1}.
    Int total = 0;
    auto first = first_combination(index);
    std::vector<bool> taken(static_cast<std::size_t>(side));
    do {
      std::fill(taken.begin(), taken.end(), false);
      for (const auto v : first) {
        taken[static_cast<std::size_t>(v)] = true;
      }
      std::vector<std::int64_t> rest;
      for (std::int64_t v = 0; v < side; ++v) {
        if (!taken[static_cast<std::size_t>(v)]) {
          rest.push_back(v);
        }
      }
      auto second = first_combination(index);
      do {
        total += 1;
      } while (next_combination(second, static_cast<std::int64_t>(rest.size())));
    } while (next_combination(first, side));
    return total;
  }
  // Exact multinomial side! / (index! * (side - 2*index)! * index!).
  return factorial(side) / (factorial(index) * factorial(index) * factorial(side - 2 * index));
}

bool verify_final_identity(std::int64_t side) {
  require_odd(side, "verify_final_identity");
  const GradedShape closing =
      direct_sum(decomposition_third(side).total, shifted(upper_case2(side), side - 1));
  return closing == weil_closed(side);
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw std::invalid_argument("binomial: negative n");
  }
  if (k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  std::vector<Int> row(static_cast<std::size_t>(k) + 1);
  row[0] = 1;
  for (std::int64_t r = 1; r <= n; ++r) {
    for (std::int64_t c = std::min(k, r); c >= 1; --c) {
      row[static_cast<std::size_t>(c)] += row[static_cast<std::size_t>(c - 1)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

}  // namespace atshape
