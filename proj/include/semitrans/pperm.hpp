#ifndef SEMITRANS_PPERM_HPP_
#define SEMITRANS_PPERM_HPP_

#include <array>        // for array
#include <compare>      // for strong_ordering
#include <cstddef>      // for size_t
#include <cstdint>      // for uint8_t, uint64_t
#include <functional>   // for hash
#include <optional>     // for optional
#include <ostream>      // for ostream
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for pair
#include <vector>       // for vector

namespace semitrans {

  // Points are 1-based throughout the public interface.
  using point_type = std::size_t;
  using arrow_type = std::pair<point_type, point_type>;

  // Partial injective self-map of {1, ..., n} acting on the right: x * (a * b)
  // is (x * a) * b.  Degrees up to 64 are supported so that domains and images
  // fit one machine word.
  class PartialPerm {
   public:
    static constexpr std::size_t max_degree = 64;

    // The zero (nowhere defined) map of the given degree.
    explicit PartialPerm(std::size_t degree = 0);

    static PartialPerm identity(std::size_t degree);
    static PartialPerm identity_on(std::size_t degree, std::uint64_t points);
    static PartialPerm identity_on(std::size_t degree,
                                   std::span<point_type const> points);

    // Throws Error if the arrows are not a partial injection on 1..degree.
    static PartialPerm from_arrows(std::size_t degree,
                                   std::span<arrow_type const> arrows);

    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }

    // The image of x, if x is in the domain.
    [[nodiscard]] std::optional<point_type> operator()(point_type x) const;

    // Raw image of x; 0 when x is not in the domain.  x must be in 1..degree.
    [[nodiscard]] point_type at(point_type x) const noexcept {
      return img_[x - 1];
    }

    [[nodiscard]] bool in_domain(point_type x) const noexcept {
      return (dom_ >> (x - 1)) & 1;
    }
    [[nodiscard]] bool in_image(point_type x) const noexcept {
      return (im_ >> (x - 1)) & 1;
    }

    // Bit x - 1 is set iff x belongs to the domain (image).
    [[nodiscard]] std::uint64_t domain_mask() const noexcept {
      return dom_;
    }
    [[nodiscard]] std::uint64_t image_mask() const noexcept {
      return im_;
    }

    [[nodiscard]] std::vector<point_type> domain() const;
    [[nodiscard]] std::vector<point_type> image() const;
    [[nodiscard]] std::size_t             rank() const noexcept;

    [[nodiscard]] bool is_zero() const noexcept {
      return dom_ == 0;
    }

    // Exact encoding of the target sequence for degree <= 15, a hash of it
    // otherwise.
    [[nodiscard]] std::uint64_t key() const noexcept;

    friend bool operator==(PartialPerm const&, PartialPerm const&) = default;
    friend std::strong_ordering operator<=>(PartialPerm const&,
                                            PartialPerm const&)
        = default;

   private:
    friend PartialPerm compose(PartialPerm const&, PartialPerm const&);
    friend PartialPerm inverse(PartialPerm const&);
    friend PartialPerm parse(std::string_view, std::size_t);

    void set(point_type x, point_type y) noexcept {
      img_[x - 1] = static_cast<std::uint8_t>(y);
      dom_ |= std::uint64_t(1) << (x - 1);
      im_ |= std::uint64_t(1) << (y - 1);
    }

    std::uint8_t                          degree_;
    std::array<std::uint8_t, max_degree> img_{};  // 0 means undefined
    std::uint64_t                         dom_ = 0;
    std::uint64_t                         im_  = 0;
  };

  // x(ab) = (xa)b.  Throws Error on degree mismatch.
  PartialPerm compose(PartialPerm const& a, PartialPerm const& b);

  inline PartialPerm operator*(PartialPerm const& a, PartialPerm const& b) {
    return compose(a, b);
  }

  PartialPerm inverse(PartialPerm const& a);

  // k-fold product of a with itself, k >= 1.
  PartialPerm power(PartialPerm const& a, std::size_t k);

  // The unique idempotent among a, a^2, a^3, ...
  PartialPerm idempotent_power(PartialPerm const& a);

  // In I_n the idempotents are exactly the partial identities.
  bool is_idempotent(PartialPerm const& a) noexcept;

  // The zero map counts as nilpotent.
  bool is_nilpotent(PartialPerm const& a);

  // (x, xa) for every x in dom(a), sorted by source.
  std::vector<arrow_type> arrows(PartialPerm const& a);

  // Chain-cycle notation.  Omitted points are singleton chains and "0" is the
  // zero map.  Throws ParseError on malformed input.
  PartialPerm parse(std::string_view text, std::size_t degree);

  // Canonical chain-cycle notation: terms ordered by least point, cycles
  // rotated to their least point, chains starting at their source, "0" for
  // the zero map.
  std::string to_string(PartialPerm const& a);

  std::ostream& operator<<(std::ostream& os, PartialPerm const& a);

  struct PartialPermHash {
    std::size_t operator()(PartialPerm const& a) const noexcept {
      return static_cast<std::size_t>(a.key() * 0x9E3779B97F4A7C15ULL
                                      ^ (a.key() >> 29));
    }
  };

}  // namespace semitrans

template <>
struct std::hash<semitrans::PartialPerm> : semitrans::PartialPermHash {};

#endif  // SEMITRANS_PPERM_HPP_
