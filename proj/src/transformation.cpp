#include "pmd/transformation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace pmd {

namespace {

void check_degree(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree) {
    throw std::invalid_argument("degree must lie in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(degree));
  }
}

void check_point(std::size_t degree, std::size_t x) {
  if (x == 0 || x > degree) {
    throw std::invalid_argument("point " + std::to_string(x) + " outside [1, " +
                                std::to_string(degree) + "]");
  }
}

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("parse error at offset " + std::to_string(position) + ": " + what),
      position_(position) {}

PartialTransformation::PartialTransformation(std::size_t degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
}

PartialTransformation::PartialTransformation(
    std::size_t degree, std::initializer_list<std::pair<std::size_t, std::size_t>> graph)
    : PartialTransformation(degree) {
  for (auto [x, y] : graph) {
    check_point(degree, x);
    check_point(degree, y);
    if (images_[x - 1] != 0) {
      throw std::invalid_argument("domain point " + std::to_string(x) + " repeated");
    }
    images_[x - 1] = static_cast<std::uint8_t>(y);
  }
}

PartialTransformation PartialTransformation::from_images(std::span<const std::size_t> images) {
  PartialTransformation a(images.size());
  for (std::size_t x = 0; x < images.size(); ++x) {
    if (images[x] > images.size()) {
      throw std::invalid_argument("image " + std::to_string(images[x]) + " outside [1, " +
                                  std::to_string(images.size()) + "]");
    }
    a.images_[x] = static_cast<std::uint8_t>(images[x]);
  }
  return a;
}

PartialTransformation PartialTransformation::identity(std::size_t degree) {
  PartialTransformation a(degree);
  for (std::size_t x = 1; x <= degree; ++x) a.images_[x - 1] = static_cast<std::uint8_t>(x);
  return a;
}

PointList PartialTransformation::domain() const { return mask_points(domain_mask()); }
PointList PartialTransformation::image() const { return mask_points(image_mask()); }

PointList PartialTransformation::fixed_points() const {
  PointList out;
  for (std::size_t x = 1; x <= degree_; ++x) {
    if (images_[x - 1] == x) out.push_back(x);
  }
  return out;
}

KernelPartition PartialTransformation::kernel() const {
  KernelPartition k{degree_, {}};
  std::array<int, kMaxDegree + 1> block_of{};
  block_of.fill(-1);
  for (std::size_t x = 1; x <= degree_; ++x) {
    const std::size_t y = images_[x - 1];
    if (y == 0) continue;
    if (block_of[y] < 0) {
      block_of[y] = static_cast<int>(k.blocks.size());
      k.blocks.emplace_back();
    }
    k.blocks[static_cast<std::size_t>(block_of[y])].push_back(x);
  }
  return k;
}

std::size_t PartialTransformation::height() const noexcept { return mask_size(image_mask()); }

PointMask PartialTransformation::domain_mask() const noexcept {
  PointMask m = 0;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (images_[x] != 0) m |= PointMask{1} << x;
  }
  return m;
}

PointMask PartialTransformation::image_mask() const noexcept {
  PointMask m = 0;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (images_[x] != 0) m |= PointMask{1} << (images_[x] - 1);
  }
  return m;
}

std::size_t PartialTransformation::min_preimage(std::size_t y) const noexcept {
  for (std::size_t x = 1; x <= degree_; ++x) {
    if (images_[x - 1] == y) return x;
  }
  return 0;
}

std::uint64_t PartialTransformation::pack() const noexcept {
  std::uint64_t key = std::uint64_t{degree_} << 60;
  for (std::size_t x = 0; x < degree_; ++x) key |= std::uint64_t{images_[x]} << (4 * x);
  return key;
}

PartialTransformation PartialTransformation::unpack(std::uint64_t key) {
  PartialTransformation a(static_cast<std::size_t>(key >> 60));
  for (std::size_t x = 0; x < a.degree_; ++x) {
    a.images_[x] = static_cast<std::uint8_t>((key >> (4 * x)) & 0xF);
  }
  return a;
}

PartialTransformation compose(const PartialTransformation& a, const PartialTransformation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("cannot compose maps of degree " + std::to_string(a.degree()) +
                                " and " + std::to_string(b.degree()));
  }
  std::array<std::size_t, kMaxDegree> images{};
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    const std::size_t y = a(x);
    images[x - 1] = y == 0 ? 0 : b(y);
  }
  return PartialTransformation::from_images(std::span(images.data(), a.degree()));
}

PartialTransformation identity_on(const PointList& points, std::size_t degree) {
  std::array<std::size_t, kMaxDegree> images{};
  check_degree(degree);
  for (std::size_t x : points) {
    check_point(degree, x);
    images[x - 1] = x;
  }
  return PartialTransformation::from_images(std::span(images.data(), degree));
}

PartialTransformation restrict_to(const PartialTransformation& a, const PointList& points) {
  std::array<std::size_t, kMaxDegree> images{};
  for (std::size_t x : points) {
    check_point(a.degree(), x);
    images[x - 1] = a(x);
  }
  return PartialTransformation::from_images(std::span(images.data(), a.degree()));
}

bool is_order_preserving(const PartialTransformation& a) noexcept {
  std::size_t last = 0;
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    const std::size_t y = a(x);
    if (y == 0) continue;
    if (y < last) return false;
    last = y;
  }
  return true;
}

bool is_order_reversing(const PartialTransformation& a) noexcept {
  std::size_t last = kMaxDegree + 1;
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    const std::size_t y = a(x);
    if (y == 0) continue;
    if (y > last) return false;
    last = y;
  }
  return true;
}

bool is_monotone(const PartialTransformation& a) noexcept {
  return is_order_preserving(a) || is_order_reversing(a);
}

bool is_order_decreasing(const PartialTransformation& a) noexcept {
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    if (a(x) > x) return false;
  }
  return true;
}

bool is_order_increasing(const PartialTransformation& a) noexcept {
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    if (a(x) != 0 && a(x) < x) return false;
  }
  return true;
}

bool is_injective(const PartialTransformation& a) noexcept {
  return mask_size(a.domain_mask()) == a.height();
}

bool is_full(const PartialTransformation& a) noexcept {
  return mask_size(a.domain_mask()) == a.degree();
}

bool is_idempotent(const PartialTransformation& a) { return compose(a, a) == a; }

bool is_quasi_idempotent(const PartialTransformation& a) {
  const auto square = compose(a, a);
  return compose(square, a) == square;
}

std::string format(const PartialTransformation& a) {
  std::string out = "n=" + std::to_string(a.degree()) + ":[";
  bool first = true;
  for (std::size_t x = 1; x <= a.degree(); ++x) {
    if (!a.defined_at(x)) continue;
    if (!first) out += ',';
    first = false;
    out += std::to_string(x);
    out += ':';
    out += std::to_string(a(x));
  }
  out += ']';
  return out;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void expect(char c) {
    if (peek() != c) {
      throw ParseError(pos_, std::string("expected '") + c + "'" +
                                 (done() ? " at end of input" : std::string(", found '") + peek() + "'"));
    }
    ++pos_;
  }

  std::size_t number() {
    const auto start = pos_;
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == text_.data() + pos_) throw ParseError(start, "expected integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

PartialTransformation parse(std::string_view text) {
  Cursor in(text);
  in.expect('n');
  in.expect('=');
  const auto degree_pos = in.pos();
  const std::size_t degree = in.number();
  if (degree == 0 || degree > kMaxDegree) {
    throw ParseError(degree_pos, "degree " + std::to_string(degree) + " outside [1, " +
                                     std::to_string(kMaxDegree) + "]");
  }
  in.expect(':');
  in.expect('[');
  std::array<std::size_t, kMaxDegree> images{};
  std::size_t last = 0;
  if (in.peek() != ']') {
    while (true) {
      const auto x_pos = in.pos();
      const std::size_t x = in.number();
      if (x == 0 || x > degree) throw ParseError(x_pos, "domain point " + std::to_string(x) + " out of range");
      if (x <= last) {
        throw ParseError(x_pos, x == last ? "duplicate domain point " + std::to_string(x)
                                          : "domain points must be strictly increasing");
      }
      last = x;
      in.expect(':');
      const auto y_pos = in.pos();
      const std::size_t y = in.number();
      if (y == 0 || y > degree) throw ParseError(y_pos, "image " + std::to_string(y) + " out of range");
      images[x - 1] = y;
      if (in.peek() == ',') {
        in.expect(',');
        continue;
      }
      break;
    }
  }
  in.expect(']');
  if (!in.done()) throw ParseError(in.pos(), "trailing characters");
  return PartialTransformation::from_images(std::span(images.data(), degree));
}

std::size_t mask_size(PointMask m) noexcept { return static_cast<std::size_t>(std::popcount(m)); }

PointList mask_points(PointMask m) {
  PointList out;
  out.reserve(mask_size(m));
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)) + 1);
    m &= m - 1;
  }
  return out;
}

}  // namespace pmd
