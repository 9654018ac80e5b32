#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace atshape {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The two indecomposable degree-0 classes: the trivial (Tate) class F and
/// the twist class A attached to a quadratic Galois extension. Together they
/// form a cyclic class group of order two, so F*F = A*A = F and F*A = A.
enum class ArtinClass : std::uint8_t { F, A };

constexpr ArtinClass operator*(ArtinClass lhs, ArtinClass rhs) noexcept {
  return lhs == rhs ? ArtinClass::F : ArtinClass::A;
}

constexpr char to_char(ArtinClass cls) noexcept {
  return cls == ArtinClass::F ? 'F' : 'A';
}

/// Multiplicities of the two classes at one shift.
struct ClassCounts {
  Int f;
  Int a;

  const Int& of(ArtinClass cls) const noexcept { return cls == ArtinClass::F ? f : a; }
  Int& of(ArtinClass cls) noexcept { return cls == ArtinClass::F ? f : a; }

  bool operator==(const ClassCounts&) const = default;
};

struct ShapeItem {
  std::int64_t shift = 0;
  ArtinClass cls = ArtinClass::F;
  Int mult = 1;
};

/// A finite multiset of (shift, class) pairs with nonnegative shifts, stored
/// canonically as shift -> (multiplicity of F, multiplicity of A). Cells with
/// both multiplicities zero are never stored, so map equality is multiset
/// equality. Values are immutable once constructed; all operations are free
/// functions returning new shapes.
class GradedShape {
 public:
  using Entries = std::map<std::int64_t, ClassCounts>;

  GradedShape() = default;

  /// Canonicalizes `entries`: drops empty cells, rejects negative shifts or
  /// multiplicities.
  static GradedShape from_entries(Entries entries);

  static GradedShape single(std::int64_t shift, ArtinClass cls, Int mult = 1);

  const Entries& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  Int mult(std::int64_t shift, ArtinClass cls) const;
  Int rank() const;
  Int count(ArtinClass cls) const;

  /// Lowest/highest occupied shift; the shape must be nonempty.
  std::int64_t min_shift() const;
  std::int64_t max_shift() const;

  bool operator==(const GradedShape&) const = default;

 private:
  Entries entries_;
};

/// Exact F:A count ratio. `infinite` marks the A-free case and, by
/// convention, the empty shape.
struct Ratio {
  bool infinite = true;
  Rational value = 0;
};

bool operator==(const Ratio& lhs, const Ratio& rhs);
bool operator!=(const Ratio& lhs, const Ratio& rhs);
bool operator<(const Ratio& lhs, const Ratio& rhs);

struct ShapeStats {
  Int rank;
  Int count_f;
  Int count_a;
  Ratio ratio;
};

/// Aggregates (shift, class, multiplicity) items into the canonical shape.
GradedShape make_shape(std::span<const ShapeItem> items);
GradedShape make_shape(std::initializer_list<ShapeItem> items);

/// Pointwise sum of multiplicities.
GradedShape direct_sum(const GradedShape& lhs, const GradedShape& rhs);

/// Translates every entry from shift s to s + offset; offset must be >= 0.
GradedShape shifted(const GradedShape& shape, std::int64_t offset);

/// Bilinear extension of (s, c) x (t, d) -> (s + t, c * d). The unit is a
/// single F at shift 0.
GradedShape tensor(const GradedShape& lhs, const GradedShape& rhs);

/// Tensor with the twist class A at shift 0; swaps F and A counts shiftwise.
GradedShape twist(const GradedShape& shape);

/// Image over the quadratic splitting extension L, where the twist class
/// becomes trivial: every A multiplicity is folded into F at the same shift.
GradedShape restrict_to_L(const GradedShape& shape);

ShapeStats stats(const GradedShape& shape);

bool is_odd_prime(long long value) noexcept;

/// Instance parameters: an odd prime p and exponent n >= 1 with the derived
/// side length N = p^n (always odd).
struct Params {
  long long p = 0;
  int n = 0;
  long long N = 0;

  static Params make(long long p, int n);
};

}  // namespace atshape
