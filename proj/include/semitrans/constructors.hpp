#ifndef SEMITRANS_CONSTRUCTORS_HPP_
#define SEMITRANS_CONSTRUCTORS_HPP_

// Builders for the minimal semitransitive subsemigroups of I_n \ S_n (five
// families), the underlying product action of a regular permutation group
// with a small semigroup of partial maps, and the minimal semitransitive
// non-transitive subsemigroups of I_n that they are assembled from.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <span>      // for span
#include <string>    // for string
#include <vector>    // for vector

#include "semitrans/pperm.hpp"
#include "semitrans/semigroup.hpp"

namespace semitrans {

  // n divided by its least prime factor; 1 for primes.  Throws for n < 2.
  std::size_t greatest_proper_divisor(std::size_t n);

  // 2n - p + 1 with p = greatest_proper_divisor(n).
  std::size_t size_lower_bound(std::size_t n);

  // Ordered list of disjoint point sets.
  using Partition = std::vector<std::vector<point_type>>;

  // Parses "1,2|3,4|5,6".
  Partition parse_partition(std::string const& text);
  std::string to_string(Partition const& partition);

  // A transitive permutation group whose order equals its degree.  Elements
  // are stored as partial permutations defined exactly on the carrier.
  class RegularGroup {
   public:
    // Generated by the full cycle through the sorted carrier.
    static RegularGroup cyclic(std::vector<point_type> carrier,
                               std::size_t             degree = 0);

    // Carrier points a generator does not mention are fixed by it.  Throws
    // Error if a generator does not permute the carrier, if the closure is
    // not transitive, or if its order differs from the carrier size.
    static RegularGroup generated_by(std::vector<point_type>      carrier,
                                     std::span<PartialPerm const> generators);

    [[nodiscard]] std::vector<point_type> const& carrier() const noexcept {
      return carrier_;
    }
    [[nodiscard]] std::vector<PartialPerm> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::vector<PartialPerm> const& generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::size_t order() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }

    // The same group moved to another carrier of equal size through the
    // order-preserving bijection, as maps of the given degree.
    [[nodiscard]] RegularGroup transported(std::vector<point_type> carrier,
                                           std::size_t degree) const;

    // The same group with order[i] renamed to the i-th point of the sorted
    // carrier; order lists the current carrier.
    [[nodiscard]] RegularGroup relabelled(std::vector<point_type> const& order,
                                          std::vector<point_type>        carrier,
                                          std::size_t degree) const;

    // For each subgroup K of the given order, a relabelled copy on the same
    // carrier whose imprimitivity blocks with block stabiliser K are runs of
    // consecutive points.
    [[nodiscard]] std::vector<RegularGroup>
    block_layouts(std::size_t block_size) const;

    [[nodiscard]] bool is_cyclic() const;

    // Isomorphism type for catalog and cyclic groups, otherwise the
    // generators.
    [[nodiscard]] std::string name() const;

   private:
    RegularGroup() = default;

    std::vector<point_type>  carrier_;
    std::vector<PartialPerm> generators_;
    std::vector<PartialPerm> elements_;
    std::size_t              degree_ = 0;
    std::string              name_;

    friend std::vector<RegularGroup> regular_groups(std::vector<point_type>,
                                                    std::size_t);
  };

  // Right regular representations on the sorted carrier of the abelian
  // groups, the dihedral groups and the quaternion group whose order is the
  // carrier size, one per isomorphism type.  Every group of order below 12
  // is listed.
  std::vector<RegularGroup> regular_groups(std::vector<point_type> carrier,
                                           std::size_t             degree = 0);

  // The faithful image of (G x T)/I on Z_1 u ... u Z_l, where (alpha, beta)
  // sends the k-th point of Z_i to the point of Z_{i beta} whose position is
  // that of (k-th carrier point) alpha.  T must contain the zero.
  Semigroup product_action(RegularGroup const& group,
                           Semigroup const&    t,
                           Partition const&    parts);

  // (G x T^1)/I where T is generated by the chain (1,2,...,l]: a
  // semitransitive, non-transitive subsemigroup of I_n of size n + 1.
  Semigroup reference_chain(RegularGroup const& group, Partition const& parts);
  Semigroup reference_chain(std::size_t n, std::size_t p);

  // Parameters of the five families.  m is the number of transitivity
  // blocks; for families 1-3 n = p m, for families 4-5 n = l p (m - 1) + p.
  struct TypeParams {
    int         family = 1;
    std::size_t n      = 0;
    std::size_t p      = 0;
    std::size_t m      = 0;
    std::size_t l      = 0;
    // Defaults to the cyclic group on the first block (families 1-3) or on
    // the second block (families 4-5).
    std::optional<RegularGroup> group;
    // Families 1-3: X_1, ..., X_m.  Families 4-5: X_1 followed by
    // U_1^2, ..., U_l^2, U_1^3, ..., U_l^m.  Defaults to consecutive runs.
    std::optional<Partition> partition;
  };

  std::string label(TypeParams const& params);

  // Fills in m (and checks l) from n and p.  Throws Error on inconsistent
  // arithmetic.
  TypeParams make_params(int         family,
                         std::size_t n,
                         std::size_t p,
                         std::size_t l = 0);

  // Every family/parameter combination applicable at degree n with block
  // unit p, canonical layout and cyclic groups.
  std::vector<TypeParams> applicable_types(std::size_t n, std::size_t p);

  // applicable_types(n, p) followed by the same families for every
  // non-cyclic group from regular_groups and from extra of the order each
  // family needs, over all block layouts for families 4 and 5.
  std::vector<TypeParams> type_instances(std::size_t                      n,
                                         std::size_t                      p,
                                         std::vector<RegularGroup> const& extra
                                         = {});

  // The generating semigroup T of families 1 and 3 on m points.
  Semigroup type1_local(std::size_t m);
  Semigroup type3_local(std::size_t m);

  Semigroup type1(TypeParams const& params);
  Semigroup type2(TypeParams const& params);
  Semigroup type3(TypeParams const& params);
  Semigroup type4(TypeParams const& params);
  Semigroup type5(TypeParams const& params);

  // Dispatches on params.family.
  Semigroup build(TypeParams const& params);

  // One line of a worked-example transcription that is either unparsable or
  // not an element of the regenerated semigroup.
  struct ExampleDiffLine {
    std::string line;
    std::string problem;
    // Unmatched regenerated element sharing most arrows with the line.
    std::optional<PartialPerm> likely_intended;
  };

  struct ExampleCheck {
    int                          example = 0;
    Semigroup                    semigroup;
    std::vector<ExampleDiffLine> flagged;
    std::vector<PartialPerm>     unmatched;   // regenerated, not transcribed
    std::vector<std::string>     documented;  // known malformed lines

    // Every flagged line is documented and accounts for exactly one
    // unmatched element.
    [[nodiscard]] bool confined_to_documented() const;
  };

  // Transcription in semigroup-file format, k in {1, 2, 3}.
  std::string const& example_transcription(int k);

  ExampleCheck build_example(int k);

}  // namespace semitrans

#endif  // SEMITRANS_CONSTRUCTORS_HPP_
