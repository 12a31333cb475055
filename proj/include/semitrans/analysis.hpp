#ifndef SEMITRANS_ANALYSIS_HPP_
#define SEMITRANS_ANALYSIS_HPP_

// Semitransitivity analysis: the reach preorder, transitivity blocks, the
// nilpotent part between the two idempotents and executable checks of the
// structural lemmas on small semitransitive subsemigroups of I_n \ S_n.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint64_t
#include <map>       // for map
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <vector>    // for vector

#include "semitrans/pperm.hpp"
#include "semitrans/semigroup.hpp"

namespace semitrans {

  // reach(x, y) iff some element of S maps x to y.  Only the arrows present
  // in S are recorded, so the table is transitive exactly when S is closed
  // (or happens to be transitively complete).
  class ReachMatrix {
   public:
    explicit ReachMatrix(Semigroup const& s);

    [[nodiscard]] std::size_t degree() const noexcept {
      return n_;
    }
    [[nodiscard]] bool operator()(point_type x, point_type y) const noexcept {
      return (rows_[x - 1] >> (y - 1)) & 1;
    }
    // Bit y - 1 set iff reach(x, y).
    [[nodiscard]] std::uint64_t row(point_type x) const noexcept {
      return rows_[x - 1];
    }

    [[nodiscard]] bool is_transitive_relation() const noexcept;
    // Reflexive and, for x != y, reach(x, y) or reach(y, x).
    [[nodiscard]] bool is_reflexive_total() const noexcept;
    [[nodiscard]] bool is_full() const noexcept;

    // Pairs {x, y} (x <= y) covered in neither direction.
    [[nodiscard]] std::vector<arrow_type> uncovered_pairs() const;

   private:
    std::size_t                n_;
    std::vector<std::uint64_t> rows_;
  };

  inline ReachMatrix reach_matrix(Semigroup const& s) {
    return ReachMatrix(s);
  }

  bool is_semitransitive(Semigroup const& s);
  bool is_transitive(Semigroup const& s);

  // Transitivity blocks X_1 > X_2 > ... > X_m, each sorted.
  struct BlockStructure {
    std::vector<std::vector<point_type>> blocks;

    [[nodiscard]] std::size_t count() const noexcept {
      return blocks.size();
    }
    [[nodiscard]] std::vector<std::size_t> sizes() const;
    [[nodiscard]] std::size_t              min_size() const;
    // 1-based index of the block containing x.
    [[nodiscard]] std::size_t index_of(point_type x) const;

    friend bool operator==(BlockStructure const&, BlockStructure const&)
        = default;
  };

  // Throws NotSemitransitive when S is not semitransitive.  Blocks are the
  // mutual-reachability classes of the transitive closure of reach.
  BlockStructure blocks(Semigroup const& s);

  // The two non-zero idempotents, when there are exactly two.  g is the one
  // whose domain contains the least point of the top block (or the least
  // point overall when S is not semitransitive).
  struct IdempotentPair {
    PartialPerm g;
    PartialPerm h;
  };

  std::optional<IdempotentPair> idempotent_pair(Semigroup const& s);

  // A = blocks inside dom(g), B = blocks inside dom(h) (1-based), and for
  // every i in A the shift set B_i = {j - i : j in B}.
  struct BlockAssignment {
    std::vector<int>                a;
    std::vector<int>                b;
    std::map<int, std::vector<int>> shifts;

    [[nodiscard]] std::set<int> shift_union() const;
  };

  // Throws Error if some block lies in neither domain.
  BlockAssignment block_assignment(BlockStructure const& blocks,
                                   PartialPerm const&    g,
                                   PartialPerm const&    h);

  // Block jump of a nilpotent element: index(y) - index(x) over its arrows.
  struct NilpotentLevel {
    PartialPerm element;
    int         min_jump = 0;
    bool        uniform  = true;
  };

  struct NilpotentPartition {
    std::vector<PartialPerm>    n12;  // gSh \ {0}
    std::vector<PartialPerm>    n21;  // hSg \ {0}
    std::vector<PartialPerm>    n;    // n12 u n21
    std::vector<NilpotentLevel> levels;
    // Elements of n12 u n21 that are not nilpotent.
    std::vector<PartialPerm> non_nilpotent;
  };

  // levels covers N and the nilpotent parts of gSg and hSh.
  NilpotentPartition nilpotent_partition(Semigroup const&      s,
                                         PartialPerm const&    g,
                                         PartialPerm const&    h,
                                         BlockStructure const& blocks);

  enum class AuditStatus { pass, fail, vacuous };

  char const* to_string(AuditStatus status) noexcept;

  // Hypothesis and conclusion are evaluated independently; a hypothesis that
  // does not hold makes the audit vacuous whatever the conclusion says.
  struct AuditResult {
    std::string              name;
    bool                     hypothesis_holds = false;
    bool                     conclusion_holds = false;
    std::vector<std::string> witnesses;

    [[nodiscard]] AuditStatus status() const noexcept {
      if (!hypothesis_holds) {
        return AuditStatus::vacuous;
      }
      return conclusion_holds ? AuditStatus::pass : AuditStatus::fail;
    }
  };

  // Exactly two non-zero idempotents with disjoint domains covering X.
  AuditResult audit_two_idempotents(Semigroup const& s);
  // Every idempotent domain contains or misses each block entirely.
  AuditResult audit_block_domains(Semigroup const& s);
  // Same-block pairs are connected by an element without cross-block arrows.
  AuditResult audit_aux_arrows(Semigroup const& s);
  // Every element of eSe is a unit of eSe or nilpotent.
  AuditResult audit_group_or_nilpotent(Semigroup const& s);
  // Nilpotent elements of S' have no arrow inside a block.
  AuditResult audit_nilpotent_no_selfblock(Semigroup const& s);
  // |N| >= n - t.
  AuditResult audit_nilpotent_count(Semigroup const& s);
  // Every block size is divisible by the least block size t.
  AuditResult audit_divisibility(Semigroup const& s);
  // |S| >= 2n - p + 1 with p the greatest proper divisor of n.
  AuditResult audit_lower_bound(Semigroup const& s);

  // All eight audits in the order above.
  std::vector<AuditResult> audit_all(Semigroup const& s);

  [[nodiscard]] inline bool all_pass(std::vector<AuditResult> const& audits) {
    for (auto const& a : audits) {
      if (a.status() != AuditStatus::pass) {
        return false;
      }
    }
    return true;
  }

}  // namespace semitrans

#endif  // SEMITRANS_ANALYSIS_HPP_
