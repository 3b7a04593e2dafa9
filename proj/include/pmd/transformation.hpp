#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pmd {

/// Largest chain size a PartialTransformation can act on.
inline constexpr std::size_t kMaxDegree = 15;

/// Ordered set of points of the chain, each in [1, n].
using PointList = std::vector<std::size_t>;

/// Bitmask over [1, n]; bit x-1 set means x is a member.
using PointMask = std::uint32_t;

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Classes of ker(a) on dom(a), each block sorted, blocks ordered by minimum.
struct KernelPartition {
  std::size_t degree = 0;
  std::vector<PointList> blocks;

  bool operator==(const KernelPartition&) const = default;
};

/// A partial self-map of the chain {1 < ... < n}.
///
/// Stored densely: slot x-1 holds the image of x, or 0 when x is outside
/// the domain. Values are immutable once built; composition is
/// left-to-right, so compose(a, b) maps x to (xa)b.
class PartialTransformation {
 public:
  PartialTransformation() = default;

  /// The empty map 0_n.
  explicit PartialTransformation(std::size_t degree);

  /// Builds from (domain point, image) pairs; throws on out-of-range or
  /// repeated domain points.
  PartialTransformation(std::size_t degree,
                        std::initializer_list<std::pair<std::size_t, std::size_t>> graph);

  /// Builds from a dense image list of length n (0 meaning undefined).
  static PartialTransformation from_images(std::span<const std::size_t> images);

  static PartialTransformation identity(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }

  /// Image of x, or 0 when x is not in the domain. x must lie in [1, n].
  std::size_t operator()(std::size_t x) const noexcept { return images_[x - 1]; }
  bool defined_at(std::size_t x) const noexcept { return images_[x - 1] != 0; }

  PointList domain() const;
  PointList image() const;
  PointList fixed_points() const;
  KernelPartition kernel() const;
  std::size_t height() const noexcept;

  PointMask domain_mask() const noexcept;
  PointMask image_mask() const noexcept;

  /// Smallest preimage of y, or 0 when y is not in the image.
  std::size_t min_preimage(std::size_t y) const noexcept;

  /// 64-bit injective encoding: degree in the top nibble, one nibble per point.
  std::uint64_t pack() const noexcept;
  static PartialTransformation unpack(std::uint64_t key);

  friend bool operator==(const PartialTransformation& a, const PartialTransformation& b) noexcept {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  friend auto operator<=>(const PartialTransformation& a, const PartialTransformation& b) noexcept {
    return a.pack() <=> b.pack();
  }

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

using PT = PartialTransformation;

PartialTransformation compose(const PartialTransformation& a, const PartialTransformation& b);
PartialTransformation identity_on(const PointList& points, std::size_t degree);
PartialTransformation restrict_to(const PartialTransformation& a, const PointList& points);

bool is_order_preserving(const PartialTransformation& a) noexcept;
bool is_order_reversing(const PartialTransformation& a) noexcept;
bool is_monotone(const PartialTransformation& a) noexcept;
bool is_order_decreasing(const PartialTransformation& a) noexcept;
bool is_order_increasing(const PartialTransformation& a) noexcept;  // extensive
bool is_injective(const PartialTransformation& a) noexcept;
bool is_full(const PartialTransformation& a) noexcept;
bool is_idempotent(const PartialTransformation& a);
bool is_quasi_idempotent(const PartialTransformation& a);

/// Canonical text form `n=<deg>:[<d>:<i>,...]`.
std::string format(const PartialTransformation& a);
PartialTransformation parse(std::string_view text);

std::size_t mask_size(PointMask m) noexcept;
PointList mask_points(PointMask m);

}  // namespace pmd

template <>
struct std::hash<pmd::PartialTransformation> {
  std::size_t operator()(const pmd::PartialTransformation& a) const noexcept {
    return std::hash<std::uint64_t>{}(a.pack());
  }
};
