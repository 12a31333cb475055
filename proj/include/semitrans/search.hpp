#ifndef SEMITRANS_SEARCH_HPP_
#define SEMITRANS_SEARCH_HPP_

// Exhaustive search for the smallest semitransitive subsemigroups of the
// singular part of I_n, classification against the constructed families, and
// the constructive sweep over n.

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "semitrans/constructors.hpp"
#include "semitrans/pperm.hpp"
#include "semitrans/semigroup.hpp"

namespace semitrans {

  // All partial permutations of degree n with rank < n, sorted.  2 <= n <= 6.
  std::vector<PartialPerm> enumerate_singular(std::size_t n);

  enum class PruneMode { none, lemmas };

  char const* to_string(PruneMode mode) noexcept;

  struct SearchProgress {
    std::size_t   level = 0;  // size of the closed sets being expanded
    std::size_t   frontier = 0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t pruned_size = 0;
    std::uint64_t pruned_budget = 0;
    std::uint64_t pruned_idempotents = 0;
    std::size_t   max_size = 0;  // current size limit
  };

  struct SearchConfig {
    std::size_t                n = 2;
    std::optional<std::size_t> max_size;  // defaults to size_lower_bound(n)
    PruneMode                  prune = PruneMode::lemmas;
    bool                       symmetry_breaking = true;
    std::size_t                threads = 1;
    // Stop (with an incomplete result) after this many expanded closed sets;
    // 0 means no limit.
    std::uint64_t max_nodes = 0;
    // n = 5 and n = 6 are refused unless set.
    bool allow_large = false;
    // Classify each representative against the constructed families.
    bool                                        classify = false;
    std::vector<RegularGroup>                   extra_groups;
    std::function<void(SearchProgress const&)> progress;
  };

  struct ClassMatch {
    std::string label;
    TypeParams  params;
    PartialPerm conjugator;  // conjugate(S, conjugator) == build(params)
  };

  struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t closed_sets_seen = 0;
    std::uint64_t pruned_size = 0;
    std::uint64_t pruned_budget = 0;
    std::uint64_t pruned_idempotents = 0;
    double        seconds = 0;
  };

  struct SearchResult {
    std::size_t n = 0;
    // False when max_nodes stopped the search early.
    bool complete = false;
    // Empty when no semitransitive set fits within the size limit.
    std::optional<std::size_t> minimal_cardinality;
    // One per similarity class, in canonical order.
    std::vector<Semigroup>               representatives;
    std::vector<std::vector<ClassMatch>> classifications;
    SearchStats                          stats;
  };

  // Throws Error for an invalid configuration.
  SearchResult minimal_search(SearchConfig const& config);

  // Every instance from type_instances(n, p, extra_groups), p the greatest
  // proper divisor of n, that is similar to S.
  std::vector<ClassMatch> classify(Semigroup const&                 s,
                                   std::vector<RegularGroup> const& extra_groups
                                   = {});

  struct SweepEntry {
    std::string label;
    std::size_t n = 0;
    std::size_t p = 0;
    std::size_t size = 0;
    std::size_t expected = 0;
    bool        closed = false;
    bool        singular = false;
    bool        semitransitive = false;
    bool        transitive = false;
    bool        audits_pass = false;
    std::size_t nilpotents = 0;  // |N|
    bool        blocks_divisible = false;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }
  };

  struct SweepReport {
    std::vector<SweepEntry> entries;
    // n with the least size over all entries different from the bound.
    std::vector<std::size_t> minimum_mismatches;

    [[nodiscard]] bool ok() const noexcept;
  };

  // Builds every type_instances entry for n_lo <= n <= n_hi and every
  // proper divisor p, checking size, closure, singularity, semitransitivity,
  // non-transitivity and the audits.  For p the greatest proper divisor it
  // also checks |N| = n - p and that p divides every block size.
  SweepReport verify_bound_sweep(std::size_t n_lo, std::size_t n_hi);

}  // namespace semitrans

#endif  // SEMITRANS_SEARCH_HPP_
