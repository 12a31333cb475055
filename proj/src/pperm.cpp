#include "semitrans/pperm.hpp"

#include <algorithm>  // for sort
#include <bit>        // for popcount, countr_zero
#include <cctype>     // for isdigit, isspace
#include <sstream>    // for ostringstream

#include "semitrans/error.hpp"

namespace semitrans {

  namespace {
    void check_degree(std::size_t degree) {
      if (degree > PartialPerm::max_degree) {
        throw Error("degree " + std::to_string(degree)
                    + " exceeds the supported maximum of "
                    + std::to_string(PartialPerm::max_degree));
      }
    }

    template <typename F>
    void for_each_bit(std::uint64_t mask, F&& f) {
      while (mask != 0) {
        int i = std::countr_zero(mask);
        f(static_cast<point_type>(i + 1));
        mask &= mask - 1;
      }
    }
  }  // namespace

  PartialPerm::PartialPerm(std::size_t degree)
      : degree_(static_cast<std::uint8_t>(degree)) {
    check_degree(degree);
  }

  PartialPerm PartialPerm::identity(std::size_t degree) {
    check_degree(degree);
    std::uint64_t all
        = degree == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << degree) - 1;
    return identity_on(degree, all);
  }

  PartialPerm PartialPerm::identity_on(std::size_t degree, std::uint64_t points) {
    PartialPerm result(degree);
    if (degree < 64 && (points >> degree) != 0) {
      throw Error("identity_on: point out of range 1.." + std::to_string(degree));
    }
    for_each_bit(points, [&](point_type x) { result.set(x, x); });
    return result;
  }

  PartialPerm PartialPerm::identity_on(std::size_t                  degree,
                                       std::span<point_type const> points) {
    PartialPerm result(degree);
    for (auto x : points) {
      if (x < 1 || x > degree) {
        throw Error("identity_on: point " + std::to_string(x)
                    + " out of range 1.." + std::to_string(degree));
      }
      result.set(x, x);
    }
    return result;
  }

  PartialPerm PartialPerm::from_arrows(std::size_t                 degree,
                                       std::span<arrow_type const> arrows) {
    PartialPerm result(degree);
    for (auto [x, y] : arrows) {
      if (x < 1 || x > degree || y < 1 || y > degree) {
        throw Error("arrow " + std::to_string(x) + "->" + std::to_string(y)
                    + " out of range 1.." + std::to_string(degree));
      }
      if (result.in_domain(x)) {
        throw Error("point " + std::to_string(x) + " has two images");
      }
      if (result.in_image(y)) {
        throw Error("point " + std::to_string(y) + " has two preimages");
      }
      result.set(x, y);
    }
    return result;
  }

  std::optional<point_type> PartialPerm::operator()(point_type x) const {
    if (x < 1 || x > degree_ || img_[x - 1] == 0) {
      return std::nullopt;
    }
    return img_[x - 1];
  }

  std::vector<point_type> PartialPerm::domain() const {
    std::vector<point_type> out;
    for_each_bit(dom_, [&](point_type x) { out.push_back(x); });
    return out;
  }

  std::vector<point_type> PartialPerm::image() const {
    std::vector<point_type> out;
    for_each_bit(im_, [&](point_type x) { out.push_back(x); });
    return out;
  }

  std::size_t PartialPerm::rank() const noexcept {
    return static_cast<std::size_t>(std::popcount(dom_));
  }

  std::uint64_t PartialPerm::key() const noexcept {
    std::uint64_t k = 0;
    if (degree_ <= 15) {
      for (std::size_t i = 0; i < degree_; ++i) {
        k |= std::uint64_t(img_[i]) << (4 * i);
      }
      return k;
    }
    // FNV-1a over the target sequence.
    k = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < degree_; ++i) {
      k ^= img_[i];
      k *= 0x100000001b3ULL;
    }
    return k;
  }

  PartialPerm compose(PartialPerm const& a, PartialPerm const& b) {
    if (a.degree_ != b.degree_) {
      throw Error("compose: degree mismatch (" + std::to_string(a.degree_)
                  + " vs " + std::to_string(b.degree_) + ")");
    }
    PartialPerm result(a.degree_);
    for_each_bit(a.dom_, [&](point_type x) {
      point_type y = a.img_[x - 1];
      if (b.img_[y - 1] != 0) {
        result.set(x, b.img_[y - 1]);
      }
    });
    return result;
  }

  PartialPerm inverse(PartialPerm const& a) {
    PartialPerm result(a.degree_);
    for_each_bit(a.dom_, [&](point_type x) { result.set(a.img_[x - 1], x); });
    return result;
  }

  PartialPerm power(PartialPerm const& a, std::size_t k) {
    if (k == 0) {
      throw Error("power: exponent must be positive");
    }
    PartialPerm result = a;
    PartialPerm base   = a;
    --k;
    while (k > 0) {
      if (k & 1) {
        result = compose(result, base);
      }
      base = compose(base, base);
      k >>= 1;
    }
    return result;
  }

  bool is_idempotent(PartialPerm const& a) noexcept {
    if (a.domain_mask() != a.image_mask()) {
      return false;
    }
    for (point_type x = 1; x <= a.degree(); ++x) {
      if (a.in_domain(x) && a.at(x) != x) {
        return false;
      }
    }
    return true;
  }

  PartialPerm idempotent_power(PartialPerm const& a) {
    // dom(a^k) shrinks until it is the set of points lying on cycles of a;
    // a permutes that set, so the idempotent power is the identity on it.
    PartialPerm current = a;
    while (true) {
      PartialPerm next = compose(current, a);
      if (next.domain_mask() == current.domain_mask()) {
        break;
      }
      current = std::move(next);
    }
    return PartialPerm::identity_on(a.degree(), current.domain_mask());
  }

  bool is_nilpotent(PartialPerm const& a) {
    return idempotent_power(a).is_zero();
  }

  std::vector<arrow_type> arrows(PartialPerm const& a) {
    std::vector<arrow_type> out;
    out.reserve(a.rank());
    for (point_type x = 1; x <= a.degree(); ++x) {
      if (a.in_domain(x)) {
        out.emplace_back(x, a.at(x));
      }
    }
    return out;
  }

  PartialPerm parse(std::string_view text, std::size_t degree) {
    check_degree(degree);
    std::size_t pos  = 0;
    auto        skip = [&] {
      while (pos < text.size()
             && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto fail = [&](std::string const& what) -> ParseError {
      return ParseError("cannot parse \"" + std::string(text) + "\": " + what);
    };

    skip();
    if (pos < text.size() && text[pos] == '0') {
      ++pos;
      skip();
      if (pos != text.size()) {
        throw fail("unexpected characters after \"0\"");
      }
      return PartialPerm(degree);
    }
    if (pos == text.size()) {
      throw fail("empty element");
    }

    PartialPerm   result(degree);
    std::uint64_t seen = 0;
    while (true) {
      skip();
      if (pos == text.size()) {
        break;
      }
      if (text[pos] != '(') {
        throw fail("malformed term at position " + std::to_string(pos)
                   + ", expected '('");
      }
      ++pos;
      std::vector<point_type> points;
      while (true) {
        skip();
        std::size_t start = pos;
        while (pos < text.size()
               && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          ++pos;
        }
        if (start == pos) {
          throw fail("malformed term at position " + std::to_string(pos)
                     + ", expected a point");
        }
        if (pos - start > 4) {
          throw fail("point out of range 1.." + std::to_string(degree));
        }
        point_type x = std::stoul(std::string(text.substr(start, pos - start)));
        if (x < 1 || x > degree) {
          throw fail("point " + std::to_string(x) + " out of range 1.."
                     + std::to_string(degree));
        }
        if ((seen >> (x - 1)) & 1) {
          throw fail("point " + std::to_string(x) + " repeated");
        }
        seen |= std::uint64_t(1) << (x - 1);
        points.push_back(x);
        skip();
        if (pos == text.size()) {
          throw fail("unterminated term");
        }
        if (text[pos] == ',') {
          ++pos;
          continue;
        }
        if (text[pos] == ')') {
          for (std::size_t i = 0; i < points.size(); ++i) {
            result.set(points[i], points[(i + 1) % points.size()]);
          }
        } else if (text[pos] == ']') {
          for (std::size_t i = 0; i + 1 < points.size(); ++i) {
            result.set(points[i], points[i + 1]);
          }
        } else {
          throw fail("malformed term at position " + std::to_string(pos)
                     + ", expected ',', ')' or ']'");
        }
        ++pos;
        break;
      }
    }
    return result;
  }

  std::string to_string(PartialPerm const& a) {
    if (a.is_zero()) {
      return "0";
    }
    struct Term {
      point_type              least;
      bool                    cycle;
      std::vector<point_type> points;
    };
    std::vector<Term> terms;
    std::uint64_t     done = 0;
    auto              seen = [&](point_type x) { return (done >> (x - 1)) & 1; };
    auto mark = [&](point_type x) { done |= std::uint64_t(1) << (x - 1); };

    // Chains start at points outside the image.
    for (point_type x = 1; x <= a.degree(); ++x) {
      if (a.in_image(x)) {
        continue;
      }
      Term t{x, false, {}};
      for (point_type y = x; y != 0; y = a.at(y)) {
        t.points.push_back(y);
        t.least = std::min(t.least, y);
        mark(y);
        if (!a.in_domain(y)) {
          break;
        }
      }
      terms.push_back(std::move(t));
    }
    // Whatever remains lies on cycles; scanning in increasing order starts
    // each cycle at its least point.
    for (point_type x = 1; x <= a.degree(); ++x) {
      if (seen(x)) {
        continue;
      }
      Term t{x, true, {}};
      point_type y = x;
      do {
        t.points.push_back(y);
        mark(y);
        y = a.at(y);
      } while (y != x);
      terms.push_back(std::move(t));
    }
    std::sort(terms.begin(), terms.end(), [](Term const& l, Term const& r) {
      return l.least < r.least;
    });

    std::string out;
    for (auto const& t : terms) {
      out += '(';
      for (std::size_t i = 0; i < t.points.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += std::to_string(t.points[i]);
      }
      out += t.cycle ? ')' : ']';
    }
    return out;
  }

  std::ostream& operator<<(std::ostream& os, PartialPerm const& a) {
    return os << to_string(a);
  }

}  // namespace semitrans
