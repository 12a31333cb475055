#ifndef SEMITRANS_SEMIGROUP_HPP_
#define SEMITRANS_SEMIGROUP_HPP_

#include <cstddef>        // for size_t
#include <optional>       // for optional
#include <span>           // for span
#include <unordered_set>  // for unordered_set
#include <vector>         // for vector

#include "semitrans/pperm.hpp"

namespace semitrans {

  // A finite set of partial permutations of a common degree, kept sorted and
  // deduplicated.  Values built through closure() or the checked constructor
  // are closed under composition; unchecked() exists so that diagnostics can
  // run on arbitrary (possibly corrupted) element sets.
  class Semigroup {
   public:
    // Throws Error if the set is empty, of mixed degree or not closed.
    explicit Semigroup(std::vector<PartialPerm> elements);

    // Smallest composition-closed superset of the generators.
    static Semigroup closure(std::span<PartialPerm const> generators);

    // No closure check; is_closed() reports the truth.
    static Semigroup unchecked(std::vector<PartialPerm> elements);

    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return elements_.size();
    }
    [[nodiscard]] std::span<PartialPerm const> elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] auto begin() const noexcept {
      return elements_.cbegin();
    }
    [[nodiscard]] auto end() const noexcept {
      return elements_.cend();
    }

    [[nodiscard]] bool contains(PartialPerm const& a) const {
      return index_.contains(a);
    }
    [[nodiscard]] bool has_zero() const {
      return contains(PartialPerm(degree_));
    }
    [[nodiscard]] bool is_closed() const noexcept {
      return closed_;
    }

    friend bool operator==(Semigroup const& l, Semigroup const& r) {
      return l.elements_ == r.elements_;
    }

   private:
    struct Unchecked {};
    Semigroup(Unchecked, std::vector<PartialPerm> elements, bool known_closed);

    std::size_t                                      degree_ = 0;
    std::vector<PartialPerm>                         elements_;
    std::unordered_set<PartialPerm, PartialPermHash> index_;
    bool                                             closed_ = false;
  };

  bool is_closed(std::span<PartialPerm const> elements);

  // Every element has rank < n.
  bool is_singular(Semigroup const& s);

  struct IdempotentProfile {
    std::vector<PartialPerm> nonzero_idempotents;
    bool                     has_zero = false;
  };

  IdempotentProfile idempotent_profile(Semigroup const& s);

  // eSf = {e s f : s in S}, sorted.  Throws Error unless e and f are
  // idempotents belonging to S.
  std::vector<PartialPerm> local(Semigroup const&   s,
                                 PartialPerm const& e,
                                 PartialPerm const& f);

  // gSg u gSh u hSg u hSh as a checked semigroup.
  Semigroup s_prime(Semigroup const&   s,
                    PartialPerm const& g,
                    PartialPerm const& h);

  // {sigma^-1 s sigma : s in S}, i.e. S with every point x relabelled x sigma.
  // Throws Error unless sigma is a permutation of the same degree.
  Semigroup conjugate(Semigroup const& s, PartialPerm const& sigma);

  // Elementwise inverse.
  Semigroup inverse(Semigroup const& s);

  // A permutation sigma with conjugate(a, sigma) == b, if one exists.
  std::optional<PartialPerm> are_similar(Semigroup const& a,
                                         Semigroup const& b);

  // Split of eSe \ {0} by idempotent power.
  struct LocalDecomposition {
    std::vector<PartialPerm> group;      // idempotent power is e
    std::vector<PartialPerm> nilpotent;  // idempotent power is 0
    std::vector<PartialPerm> other;      // neither; violates the dichotomy
  };

  LocalDecomposition units_and_nilpotents(Semigroup const&   s,
                                          PartialPerm const& e);

}  // namespace semitrans

#endif  // SEMITRANS_SEMIGROUP_HPP_
