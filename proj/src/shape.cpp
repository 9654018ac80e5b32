#include "atshape/shape.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace atshape {

namespace {

void require_cell(std::int64_t shift, const Int& mult, const char* what) {
  if (shift < 0) {
    throw std::invalid_argument(std::string(what) + ": negative shift " + std::to_string(shift));
  }
  if (mult < 0) {
    throw std::invalid_argument(std::string(what) + ": negative multiplicity " + mult.str() +
                                " at shift " + std::to_string(shift));
  }
}

std::int64_t checked_shift_sum(std::int64_t lhs, std::int64_t rhs) {
  if (lhs > std::numeric_limits<std::int64_t>::max() - rhs) {
    throw std::invalid_argument("shift overflow");
  }
  return lhs + rhs;
}

}  // namespace

GradedShape GradedShape::from_entries(Entries entries) {
  for (auto it = entries.begin(); it != entries.end();) {
    require_cell(it->first, it->second.f, "shape entry");
    require_cell(it->first, it->second.a, "shape entry");
    if (it->second.f == 0 && it->second.a == 0) {
      it = entries.erase(it);
    } else {
      ++it;
    }
  }
  GradedShape shape;
  shape.entries_ = std::move(entries);
  return shape;
}

GradedShape GradedShape::single(std::int64_t shift, ArtinClass cls, Int mult) {
  require_cell(shift, mult, "single");
  Entries entries;
  if (mult != 0) {
    entries[shift].of(cls) = std::move(mult);
  }
  return from_entries(std::move(entries));
}

Int GradedShape::mult(std::int64_t shift, ArtinClass cls) const {
  const auto it = entries_.find(shift);
  return it == entries_.end() ? Int(0) : it->second.of(cls);
}

Int GradedShape::rank() const {
  Int total = 0;
  for (const auto& [shift, counts] : entries_) {
    total += counts.f + counts.a;
  }
  return total;
}

Int GradedShape::count(ArtinClass cls) const {
  Int total = 0;
  for (const auto& [shift, counts] : entries_) {
    total += counts.of(cls);
  }
  return total;
}

std::int64_t GradedShape::min_shift() const {
  if (entries_.empty()) {
    throw std::logic_error("min_shift of an empty shape");
  }
  return entries_.begin()->first;
}

std::int64_t GradedShape::max_shift() const {
  if (entries_.empty()) {
    throw std::logic_error("max_shift of an empty shape");
  }
  return entries_.rbegin()->first;
}

bool operator==(const Ratio& lhs, const Ratio& rhs) {
  if (lhs.infinite || rhs.infinite) {
    return lhs.infinite == rhs.infinite;
  }
  return lhs.value == rhs.value;
}

bool operator!=(const Ratio& lhs, const Ratio& rhs) { return !(lhs == rhs); }

bool operator<(const Ratio& lhs, const Ratio& rhs) {
  if (lhs.infinite) {
    return false;
  }
  if (rhs.infinite) {
    return true;
  }
  return lhs.value < rhs.value;
}

GradedShape make_shape(std::span<const ShapeItem> items) {
  GradedShape::Entries entries;
  for (const auto& item : items) {
    require_cell(item.shift, item.mult, "make_shape");
    entries[item.shift].of(item.cls) += item.mult;
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape make_shape(std::initializer_list<ShapeItem> items) {
  return make_shape(std::span<const ShapeItem>(items.begin(), items.size()));
}

GradedShape direct_sum(const GradedShape& lhs, const GradedShape& rhs) {
  GradedShape::Entries entries = lhs.entries();
  for (const auto& [shift, counts] : rhs.entries()) {
    auto& cell = entries[shift];
    cell.f += counts.f;
    cell.a += counts.a;
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape shifted(const GradedShape& shape, std::int64_t offset) {
  if (offset < 0) {
    throw std::invalid_argument("shifted: negative offset " + std::to_string(offset));
  }
  GradedShape::Entries entries;
  for (const auto& [shift, counts] : shape.entries()) {
    entries.emplace_hint(entries.end(), checked_shift_sum(shift, offset), counts);
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape tensor(const GradedShape& lhs, const GradedShape& rhs) {
  GradedShape::Entries entries;
  for (const auto& [ls, lc] : lhs.entries()) {
    for (const auto& [rs, rc] : rhs.entries()) {
      auto& cell = entries[checked_shift_sum(ls, rs)];
      cell.f += lc.f * rc.f + lc.a * rc.a;
      cell.a += lc.f * rc.a + lc.a * rc.f;
    }
  }
  return GradedShape::from_entries(std::move(entries));
}

GradedShape twist(const GradedShape& shape) {
  return tensor(shape, GradedShape::single(0, ArtinClass::A));
}

GradedShape restrict_to_L(const GradedShape& shape) {
  GradedShape::Entries entries;
  for (const auto& [shift, counts] : shape.entries()) {
    entries.emplace_hint(entries.end(), shift, ClassCounts{counts.f + counts.a, 0});
  }
  return GradedShape::from_entries(std::move(entries));
}

ShapeStats stats(const GradedShape& shape) {
  ShapeStats result{0, 0, 0, Ratio{}};
  for (const auto& [shift, counts] : shape.entries()) {
    result.count_f += counts.f;
    result.count_a += counts.a;
  }
  result.rank = result.count_f + result.count_a;
  if (result.count_a == 0) {
    result.ratio = Ratio{true, 0};
  } else {
    result.ratio = Ratio{false, Rational(result.count_f) / Rational(result.count_a)};
  }
  return result;
}

bool is_odd_prime(long long value) noexcept {
  if (value < 3 || value % 2 == 0) {
    return false;
  }
  for (long long d = 3; d <= value / d; d += 2) {
    if (value % d == 0) {
      return false;
    }
  }
  return true;
}

Params Params::make(long long p, int n) {
  if (!is_odd_prime(p)) {
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
  }
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1, got " + std::to_string(n));
  }
  long long side = 1;
  for (int i = 0; i < n; ++i) {
    if (side > std::numeric_limits<long long>::max() / p) {
      throw std::invalid_argument("p^n does not fit in a 64-bit integer");
    }
    side *= p;
  }
  return Params{p, n, side};
}

}  // namespace atshape
