#include "semitrans/analysis.hpp"

#include <algorithm>  // for sort, min_element
#include <bit>        // for popcount

#include "semitrans/constructors.hpp"
#include "semitrans/error.hpp"

namespace semitrans {

  namespace {
    std::uint64_t bit(point_type x) {
      return std::uint64_t(1) << (x - 1);
    }

    std::uint64_t all_points(std::size_t n) {
      return n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
    }

    std::string set_string(std::vector<point_type> const& pts) {
      std::string out = "{";
      for (std::size_t i = 0; i < pts.size(); ++i) {
        out += (i ? "," : "") + std::to_string(pts[i]);
      }
      return out + "}";
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // ReachMatrix
  ////////////////////////////////////////////////////////////////////////

  ReachMatrix::ReachMatrix(Semigroup const& s)
      : n_(s.degree()), rows_(s.degree(), 0) {
    for (auto const& a : s) {
      for (auto [x, y] : arrows(a)) {
        rows_[x - 1] |= bit(y);
      }
    }
  }

  bool ReachMatrix::is_transitive_relation() const noexcept {
    for (point_type x = 1; x <= n_; ++x) {
      for (point_type y = 1; y <= n_; ++y) {
        if ((*this)(x, y) && (rows_[y - 1] & ~rows_[x - 1]) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  bool ReachMatrix::is_reflexive_total() const noexcept {
    for (point_type x = 1; x <= n_; ++x) {
      if (!(*this)(x, x)) {
        return false;
      }
      for (point_type y = x + 1; y <= n_; ++y) {
        if (!(*this)(x, y) && !(*this)(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool ReachMatrix::is_full() const noexcept {
    return std::all_of(rows_.begin(), rows_.end(), [&](std::uint64_t r) {
      return r == all_points(n_);
    });
  }

  std::vector<arrow_type> ReachMatrix::uncovered_pairs() const {
    std::vector<arrow_type> out;
    for (point_type x = 1; x <= n_; ++x) {
      for (point_type y = x; y <= n_; ++y) {
        if (!(*this)(x, y) && !(*this)(y, x)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  bool is_semitransitive(Semigroup const& s) {
    return ReachMatrix(s).is_reflexive_total();
  }

  bool is_transitive(Semigroup const& s) {
    return ReachMatrix(s).is_full();
  }

  ////////////////////////////////////////////////////////////////////////
  // Blocks
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> BlockStructure::sizes() const {
    std::vector<std::size_t> out;
    for (auto const& b : blocks) {
      out.push_back(b.size());
    }
    return out;
  }

  std::size_t BlockStructure::min_size() const {
    auto s = sizes();
    return s.empty() ? 0 : *std::min_element(s.begin(), s.end());
  }

  std::size_t BlockStructure::index_of(point_type x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (std::binary_search(blocks[i].begin(), blocks[i].end(), x)) {
        return i + 1;
      }
    }
    throw Error("point " + std::to_string(x) + " lies in no block");
  }

  BlockStructure blocks(Semigroup const& s) {
    ReachMatrix const reach(s);
    if (!reach.is_reflexive_total()) {
      throw NotSemitransitive("blocks: the semigroup is not semitransitive");
    }
    std::size_t const          n = s.degree();
    std::vector<std::uint64_t> closure(n);
    for (point_type x = 1; x <= n; ++x) {
      closure[x - 1] = reach.row(x);
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if ((closure[i] >> k) & 1) {
          closure[i] |= closure[k];
        }
      }
    }
    // In a total preorder the number of points reachable from x orders the
    // classes: higher blocks reach strictly more.
    std::vector<point_type> order;
    for (point_type x = 1; x <= n; ++x) {
      order.push_back(x);
    }
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) {
      return std::popcount(closure[x - 1]) > std::popcount(closure[y - 1]);
    });
    BlockStructure out;
    for (auto x : order) {
      if (!out.blocks.empty()) {
        point_type y = out.blocks.back().front();
        if (((closure[x - 1] >> (y - 1)) & 1) && ((closure[y - 1] >> (x - 1)) & 1)) {
          out.blocks.back().push_back(x);
          continue;
        }
      }
      out.blocks.push_back({x});
    }
    for (auto& b : out.blocks) {
      std::sort(b.begin(), b.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents, block assignment, nilpotent partition
  ////////////////////////////////////////////////////////////////////////

  std::optional<IdempotentPair> idempotent_pair(Semigroup const& s) {
    auto idem = idempotent_profile(s).nonzero_idempotents;
    if (idem.size() != 2) {
      return std::nullopt;
    }
    point_type anchor = 1;
    if (is_semitransitive(s)) {
      anchor = blocks(s).blocks.front().front();
    } else {
      std::uint64_t covered = idem[0].domain_mask() | idem[1].domain_mask();
      anchor = static_cast<point_type>(std::countr_zero(covered) + 1);
    }
    if (idem[1].in_domain(anchor) && !idem[0].in_domain(anchor)) {
      std::swap(idem[0], idem[1]);
    }
    return IdempotentPair{idem[0], idem[1]};
  }

  std::set<int> BlockAssignment::shift_union() const {
    std::set<int> out;
    for (auto const& [i, shifts_i] : shifts) {
      out.insert(shifts_i.begin(), shifts_i.end());
    }
    return out;
  }

  BlockAssignment block_assignment(BlockStructure const& bs,
                                   PartialPerm const&    g,
                                   PartialPerm const&    h) {
    BlockAssignment out;
    for (std::size_t i = 0; i < bs.count(); ++i) {
      std::uint64_t mask = 0;
      for (auto x : bs.blocks[i]) {
        mask |= bit(x);
      }
      int idx = static_cast<int>(i + 1);
      if ((g.domain_mask() & mask) == mask && (h.domain_mask() & mask) == 0) {
        out.a.push_back(idx);
      } else if ((h.domain_mask() & mask) == mask
                 && (g.domain_mask() & mask) == 0) {
        out.b.push_back(idx);
      } else {
        throw Error("block_assignment: block X_" + std::to_string(idx) + " = "
                    + set_string(bs.blocks[i])
                    + " is not inside exactly one idempotent domain");
      }
    }
    for (int i : out.a) {
      auto& shifts = out.shifts[i];
      for (int j : out.b) {
        shifts.push_back(j - i);
      }
    }
    return out;
  }

  namespace {
    NilpotentLevel level_of(PartialPerm const& a, BlockStructure const& bs) {
      NilpotentLevel level{a, 0, true};
      bool           first = true;
      for (auto [x, y] : arrows(a)) {
        int jump = static_cast<int>(bs.index_of(y))
                   - static_cast<int>(bs.index_of(x));
        if (first) {
          level.min_jump = jump;
          first          = false;
        } else {
          level.uniform  = level.uniform && jump == level.min_jump;
          level.min_jump = std::min(level.min_jump, jump);
        }
      }
      return level;
    }

    std::vector<PartialPerm> nonzero(std::vector<PartialPerm> v) {
      std::erase_if(v, [](PartialPerm const& a) { return a.is_zero(); });
      return v;
    }
  }  // namespace

  NilpotentPartition nilpotent_partition(Semigroup const&      s,
                                         PartialPerm const&    g,
                                         PartialPerm const&    h,
                                         BlockStructure const& bs) {
    NilpotentPartition out;
    out.n12 = nonzero(local(s, g, h));
    out.n21 = nonzero(local(s, h, g));
    out.n   = out.n12;
    out.n.insert(out.n.end(), out.n21.begin(), out.n21.end());
    std::sort(out.n.begin(), out.n.end());
    out.n.erase(std::unique(out.n.begin(), out.n.end()), out.n.end());

    for (auto const& a : out.n) {
      if (!is_nilpotent(a)) {
        out.non_nilpotent.push_back(a);
      } else {
        out.levels.push_back(level_of(a, bs));
      }
    }
    for (auto const* e : {&g, &h}) {
      for (auto const& a : units_and_nilpotents(s, *e).nilpotent) {
        out.levels.push_back(level_of(a, bs));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Audits
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(AuditStatus status) noexcept {
    switch (status) {
      case AuditStatus::pass:
        return "pass";
      case AuditStatus::fail:
        return "fail";
      case AuditStatus::vacuous:
        return "vacuous";
    }
    return "unknown";
  }

  namespace {
    // Standing assumption of the structural lemmas: S semitransitive inside
    // the singular part with |S| <= 2n.
    bool small_semitransitive(Semigroup const& s) {
      return is_semitransitive(s) && is_singular(s)
             && s.size() <= 2 * s.degree();
    }

    AuditResult not_evaluable(AuditResult r, std::string const& why) {
      r.conclusion_holds = false;
      r.witnesses.push_back("not evaluable: " + why);
      return r;
    }
  }  // namespace

  AuditResult audit_two_idempotents(Semigroup const& s) {
    AuditResult r{"two_idempotents", small_semitransitive(s), true, {}};
    auto        idem = idempotent_profile(s).nonzero_idempotents;
    if (idem.size() != 2) {
      r.conclusion_holds = false;
      std::string list;
      for (auto const& e : idem) {
        list += " " + to_string(e);
      }
      r.witnesses.push_back(std::to_string(idem.size())
                            + " non-zero idempotents:" + list);
      return r;
    }
    std::uint64_t overlap = idem[0].domain_mask() & idem[1].domain_mask();
    std::uint64_t cover   = idem[0].domain_mask() | idem[1].domain_mask();
    if (overlap != 0) {
      r.conclusion_holds = false;
      r.witnesses.push_back("domains overlap at point "
                            + std::to_string(std::countr_zero(overlap) + 1));
    }
    std::uint64_t missing = all_points(s.degree()) & ~cover;
    if (missing != 0) {
      r.conclusion_holds = false;
      r.witnesses.push_back("point "
                            + std::to_string(std::countr_zero(missing) + 1)
                            + " is in no idempotent domain");
    }
    return r;
  }

  AuditResult audit_block_domains(Semigroup const& s) {
    AuditResult r{"block_domains", small_semitransitive(s), true, {}};
    if (!is_semitransitive(s)) {
      return not_evaluable(r, "no block structure");
    }
    auto bs = blocks(s);
    for (auto const& e : idempotent_profile(s).nonzero_idempotents) {
      for (std::size_t i = 0; i < bs.count(); ++i) {
        std::size_t inside = 0;
        for (auto x : bs.blocks[i]) {
          inside += e.in_domain(x);
        }
        if (inside != 0 && inside != bs.blocks[i].size()) {
          r.conclusion_holds = false;
          r.witnesses.push_back("dom(" + to_string(e) + ") splits X_"
                                + std::to_string(i + 1) + " = "
                                + set_string(bs.blocks[i]));
        }
      }
    }
    return r;
  }

  AuditResult audit_aux_arrows(Semigroup const& s) {
    AuditResult r{"aux_arrows", small_semitransitive(s), true, {}};
    if (!is_semitransitive(s)) {
      return not_evaluable(r, "no block structure");
    }
    auto const  bs = blocks(s);
    std::size_t n  = s.degree();
    // within[x][y]: some element with arrow x -> y has only in-block arrows.
    std::vector<std::uint64_t> within(n, 0);
    for (auto const& a : s) {
      auto arr   = arrows(a);
      bool local = std::all_of(arr.begin(), arr.end(), [&](arrow_type xy) {
        return bs.index_of(xy.first) == bs.index_of(xy.second);
      });
      if (local) {
        for (auto [x, y] : arr) {
          within[x - 1] |= bit(y);
        }
      }
    }
    for (auto const& block : bs.blocks) {
      for (auto x : block) {
        for (auto y : block) {
          if (((within[x - 1] >> (y - 1)) & 1) == 0) {
            r.conclusion_holds = false;
            r.witnesses.push_back("no block-preserving element maps "
                                  + std::to_string(x) + " to "
                                  + std::to_string(y));
          }
        }
      }
    }
    return r;
  }

  AuditResult audit_group_or_nilpotent(Semigroup const& s) {
    AuditResult r{"group_or_nilpotent", small_semitransitive(s), true, {}};
    for (auto const& e : idempotent_profile(s).nonzero_idempotents) {
      for (auto const& a : units_and_nilpotents(s, e).other) {
        r.conclusion_holds = false;
        r.witnesses.push_back(to_string(a) + " in eSe for e = " + to_string(e)
                              + " is neither a unit nor nilpotent");
      }
    }
    return r;
  }

  AuditResult audit_nilpotent_no_selfblock(Semigroup const& s) {
    auto        pair = idempotent_pair(s);
    AuditResult r{"nilpotent_no_selfblock",
                  small_semitransitive(s) && pair.has_value(),
                  true,
                  {}};
    if (!pair || !is_semitransitive(s)) {
      return not_evaluable(r, "needs two idempotents and blocks");
    }
    auto const& [g, h] = *pair;
    auto const bs      = blocks(s);
    for (auto const* e : {&g, &h}) {
      for (auto const* f : {&g, &h}) {
        for (auto const& a : local(s, *e, *f)) {
          if (a.is_zero() || !is_nilpotent(a)) {
            continue;
          }
          for (auto [x, y] : arrows(a)) {
            if (bs.index_of(x) == bs.index_of(y)) {
              r.conclusion_holds = false;
              r.witnesses.push_back("nilpotent " + to_string(a) + " has arrow "
                                    + std::to_string(x) + "->"
                                    + std::to_string(y) + " inside X_"
                                    + std::to_string(bs.index_of(x)));
              break;
            }
          }
        }
      }
    }
    return r;
  }

  AuditResult audit_nilpotent_count(Semigroup const& s) {
    auto        pair = idempotent_pair(s);
    AuditResult r{
        "nilpotent_count", small_semitransitive(s) && pair.has_value(), true, {}};
    if (!pair || !is_semitransitive(s)) {
      return not_evaluable(r, "needs two idempotents and blocks");
    }
    auto const  bs     = blocks(s);
    auto const  part   = nilpotent_partition(s, pair->g, pair->h, bs);
    std::size_t target = s.degree() - bs.min_size();
    if (part.n.size() < target) {
      r.conclusion_holds = false;
      r.witnesses.push_back("|N| = " + std::to_string(part.n.size())
                            + " < n - t = " + std::to_string(target));
    }
    return r;
  }

  AuditResult audit_divisibility(Semigroup const& s) {
    AuditResult r{"divisibility", small_semitransitive(s), true, {}};
    if (!is_semitransitive(s)) {
      return not_evaluable(r, "no block structure");
    }
    auto const  bs = blocks(s);
    std::size_t t  = bs.min_size();
    for (std::size_t i = 0; i < bs.count(); ++i) {
      if (bs.blocks[i].size() % t != 0) {
        r.conclusion_holds = false;
        r.witnesses.push_back("t_" + std::to_string(i + 1) + " = "
                              + std::to_string(bs.blocks[i].size())
                              + " is not divisible by t = "
                              + std::to_string(t));
      }
    }
    return r;
  }

  AuditResult audit_lower_bound(Semigroup const& s) {
    std::size_t n = s.degree();
    AuditResult r{"lower_bound",
                  n >= 2 && is_semitransitive(s) && is_singular(s),
                  true,
                  {}};
    if (n < 2) {
      return not_evaluable(r, "degree below 2");
    }
    std::size_t bound = size_lower_bound(n);
    if (s.size() < bound) {
      r.conclusion_holds = false;
      r.witnesses.push_back("|S| = " + std::to_string(s.size())
                            + " < 2n - p + 1 = " + std::to_string(bound));
    }
    return r;
  }

  std::vector<AuditResult> audit_all(Semigroup const& s) {
    return {audit_two_idempotents(s),
            audit_block_domains(s),
            audit_aux_arrows(s),
            audit_group_or_nilpotent(s),
            audit_nilpotent_no_selfblock(s),
            audit_nilpotent_count(s),
            audit_divisibility(s),
            audit_lower_bound(s)};
  }

}  // namespace semitrans
