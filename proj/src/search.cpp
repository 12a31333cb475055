#include "semitrans/search.hpp"

#include <algorithm>      // for sort, next_permutation, min
#include <atomic>         // for atomic
#include <bit>            // for popcount
#include <chrono>         // for steady_clock
#include <numeric>        // for iota
#include <set>            // for set
#include <thread>         // for thread
#include <unordered_map>  // for unordered_map

#include "semitrans/analysis.hpp"
#include "semitrans/error.hpp"

namespace semitrans {

  std::vector<PartialPerm> enumerate_singular(std::size_t n) {
    if (n < 2 || n > 6) {
      throw Error("enumerate_singular: n must be in 2..6");
    }
    std::vector<PartialPerm> out;
    // img[x] in 0..n, 0 meaning undefined; odometer over all (n+1)^n maps.
    std::vector<point_type> img(n, 0);
    while (true) {
      std::uint64_t used  = 0;
      bool          inj   = true;
      std::size_t   rank  = 0;
      for (auto y : img) {
        if (y == 0) {
          continue;
        }
        if ((used >> (y - 1)) & 1) {
          inj = false;
          break;
        }
        used |= std::uint64_t(1) << (y - 1);
        ++rank;
      }
      if (inj && rank < n) {
        std::vector<arrow_type> arr;
        for (point_type x = 1; x <= n; ++x) {
          if (img[x - 1] != 0) {
            arr.emplace_back(x, img[x - 1]);
          }
        }
        out.push_back(PartialPerm::from_arrows(n, arr));
      }
      std::size_t i = 0;
      while (i < n && img[i] == n) {
        img[i++] = 0;
      }
      if (i == n) {
        break;
      }
      ++img[i];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  char const* to_string(PruneMode mode) noexcept {
    return mode == PruneMode::none ? "none" : "lemmas";
  }

  namespace {
    using index_type = std::uint16_t;
    using ClosedSet  = std::vector<index_type>;

    // Bit of the unordered pair {x, y} (x <= y) in the coverage mask.
    std::size_t pair_bit(std::size_t n, point_type x, point_type y) {
      if (x > y) {
        std::swap(x, y);
      }
      // Pairs ordered (1,1),(1,2),...,(1,n),(2,2),...
      std::size_t before = 0;
      for (point_type i = 1; i < x; ++i) {
        before += n - i + 1;
      }
      return before + (y - x);
    }

    class Ground {
     public:
      explicit Ground(std::size_t n) : n_(n), elements_(enumerate_singular(n)) {
        std::size_t const g = elements_.size();
        for (std::size_t i = 0; i < g; ++i) {
          index_.emplace(elements_[i].key(), static_cast<index_type>(i));
        }
        zero_ = index_of(PartialPerm(n));
        if (g <= 4096) {
          table_.resize(g * g);
          for (std::size_t i = 0; i < g; ++i) {
            for (std::size_t j = 0; j < g; ++j) {
              table_[i * g + j] = index_of(elements_[i] * elements_[j]);
            }
          }
        }
        std::size_t const pairs = n * (n + 1) / 2;
        full_ = pairs == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << pairs) - 1;
        cover_.resize(g);
        idempotent_.resize(g);
        for (std::size_t i = 0; i < g; ++i) {
          for (auto [x, y] : arrows(elements_[i])) {
            cover_[i] |= std::uint64_t(1) << pair_bit(n, x, y);
          }
          idempotent_[i] = !elements_[i].is_zero() && is_idempotent(elements_[i]);
        }
        std::vector<point_type> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do {
          std::vector<arrow_type> arr;
          for (point_type x = 1; x <= n; ++x) {
            arr.emplace_back(x, perm[x - 1]);
          }
          PartialPerm const sigma = PartialPerm::from_arrows(n, arr);
          PartialPerm const sigma_inv = inverse(sigma);
          std::vector<index_type> row(g);
          for (std::size_t i = 0; i < g; ++i) {
            row[i] = index_of(sigma_inv * elements_[i] * sigma);
          }
          conj_.push_back(std::move(row));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }

      [[nodiscard]] std::size_t n() const noexcept {
        return n_;
      }
      [[nodiscard]] std::size_t size() const noexcept {
        return elements_.size();
      }
      [[nodiscard]] PartialPerm const& element(index_type i) const {
        return elements_[i];
      }
      [[nodiscard]] index_type zero() const noexcept {
        return zero_;
      }
      [[nodiscard]] index_type mul(index_type i, index_type j) const {
        if (!table_.empty()) {
          return table_[i * elements_.size() + j];
        }
        return index_of(elements_[i] * elements_[j]);
      }
      [[nodiscard]] std::uint64_t cover(index_type i) const noexcept {
        return cover_[i];
      }
      [[nodiscard]] std::uint64_t full() const noexcept {
        return full_;
      }
      [[nodiscard]] bool idempotent(index_type i) const noexcept {
        return idempotent_[i];
      }
      [[nodiscard]] std::vector<std::vector<index_type>> const& conj() const {
        return conj_;
      }

     private:
      [[nodiscard]] index_type index_of(PartialPerm const& a) const {
        return index_.at(a.key());
      }

      std::size_t                                       n_;
      std::vector<PartialPerm>                          elements_;
      std::unordered_map<std::uint64_t, index_type>     index_;
      index_type                                        zero_ = 0;
      std::vector<index_type>                           table_;
      std::vector<std::uint64_t>                        cover_;
      std::vector<bool>                                 idempotent_;
      std::uint64_t                                     full_ = 0;
      std::vector<std::vector<index_type>>              conj_;
    };

    struct Workspace {
      std::vector<std::uint8_t> mark;
      ClosedSet                 out;
    };

    // Closure of base u {x} (base closed), or nothing if it exceeds limit.
    bool close_with(Ground const&    ground,
                    ClosedSet const& base,
                    index_type       x,
                    std::size_t      limit,
                    Workspace&       ws) {
      ws.out = base;
      for (auto i : base) {
        ws.mark[i] = 1;
      }
      ws.out.push_back(x);
      ws.mark[x]      = 1;
      std::size_t head = base.size();
      bool        ok   = ws.out.size() <= limit;
      while (ok && head < ws.out.size()) {
        index_type const y = ws.out[head++];
        for (std::size_t k = 0; ok && k < ws.out.size(); ++k) {
          index_type const z = ws.out[k];
          for (index_type prod : {ground.mul(y, z), ground.mul(z, y)}) {
            if (!ws.mark[prod]) {
              ws.mark[prod] = 1;
              ws.out.push_back(prod);
              if (ws.out.size() > limit) {
                ok = false;
                break;
              }
            }
          }
        }
      }
      for (auto i : ws.out) {
        ws.mark[i] = 0;
      }
      if (ok) {
        std::sort(ws.out.begin(), ws.out.end());
      }
      return ok;
    }

    ClosedSet canonical(Ground const& ground, ClosedSet const& s) {
      ClosedSet best = s;
      ClosedSet img(s.size());
      for (auto const& row : ground.conj()) {
        for (std::size_t i = 0; i < s.size(); ++i) {
          img[i] = row[s[i]];
        }
        std::sort(img.begin(), img.end());
        if (img < best) {
          best = img;
        }
      }
      return best;
    }

    std::uint64_t coverage(Ground const& ground, ClosedSet const& s) {
      std::uint64_t c = 0;
      for (auto i : s) {
        c |= ground.cover(i);
      }
      return c;
    }

    std::size_t idempotent_count(Ground const& ground, ClosedSet const& s) {
      std::size_t c = 0;
      for (auto i : s) {
        c += ground.idempotent(i);
      }
      return c;
    }

    Semigroup to_semigroup(Ground const& ground, ClosedSet const& s) {
      std::vector<PartialPerm> elements;
      for (auto i : s) {
        elements.push_back(ground.element(i));
      }
      return Semigroup::unchecked(std::move(elements));
    }

    struct LevelOutput {
      std::vector<ClosedSet> children;
      std::uint64_t          nodes = 0;
      std::uint64_t          pruned_size = 0;
      std::uint64_t          pruned_budget = 0;
      std::uint64_t          pruned_idempotents = 0;
    };

    // Outcome of a candidate closed set against the current limit.
    enum class Verdict { keep, budget, idempotents };

    Verdict judge(Ground const&       ground,
                  SearchConfig const& config,
                  ClosedSet const&    s,
                  std::size_t         limit) {
      std::size_t const uncovered
          = std::popcount(ground.full() & ~coverage(ground, s));
      if (uncovered > (limit - s.size()) * (ground.n() - 1)) {
        return Verdict::budget;
      }
      if (config.prune == PruneMode::lemmas && limit <= 2 * ground.n()
          && idempotent_count(ground, s) > 2) {
        return Verdict::idempotents;
      }
      return Verdict::keep;
    }
  }  // namespace

  SearchResult minimal_search(SearchConfig const& config) {
    auto const start = std::chrono::steady_clock::now();
    std::size_t const n = config.n;
    if (n < 2 || n > 6) {
      throw Error("search: n must be in 2..6");
    }
    if (n >= 5 && !config.allow_large) {
      throw Error("search: n = " + std::to_string(n)
                  + " is beyond the default scope; allow large searches to "
                    "proceed");
    }
    std::size_t limit = config.max_size.value_or(size_lower_bound(n));
    if (limit < 1) {
      throw Error("search: the size limit must be at least 1");
    }
    std::size_t const threads = std::max<std::size_t>(1, config.threads);

    Ground const ground(n);
    SearchResult result;
    result.n = n;

    auto key = [&](ClosedSet const& s) {
      return config.symmetry_breaking ? canonical(ground, s) : s;
    };

    std::vector<std::set<ClosedSet>> buckets(limit + 1);
    std::set<ClosedSet>              seeds;
    {
      Workspace ws{std::vector<std::uint8_t>(ground.size(), 0), {}};
      for (index_type x = 0; x < ground.size(); ++x) {
        if (!close_with(ground, {}, x, limit, ws)) {
          ++result.stats.pruned_size;
          continue;
        }
        ClosedSet k = key(ws.out);
        if (seeds.insert(k).second) {
          switch (judge(ground, config, k, limit)) {
            case Verdict::budget:
              ++result.stats.pruned_budget;
              break;
            case Verdict::idempotents:
              ++result.stats.pruned_idempotents;
              break;
            case Verdict::keep:
              buckets[k.size()].insert(std::move(k));
          }
        }
      }
    }

    result.complete = true;
    std::vector<ClosedSet> minimal;
    for (std::size_t level = 1; level <= limit; ++level) {
      std::vector<ClosedSet> items(buckets[level].begin(), buckets[level].end());
      buckets[level].clear();
      result.stats.closed_sets_seen += items.size();

      for (auto const& s : items) {
        if ((coverage(ground, s) & ground.full()) == ground.full()) {
          minimal.push_back(s);
        }
      }
      if (!minimal.empty()) {
        result.minimal_cardinality = level;
        break;
      }
      if (level == limit) {
        break;
      }
      if (config.max_nodes != 0
          && result.stats.nodes_expanded + items.size() > config.max_nodes) {
        result.complete = false;
        break;
      }

      std::vector<LevelOutput> outputs(threads);
      std::atomic<std::size_t> next{0};
      auto                     work = [&](std::size_t t) {
        LevelOutput& out = outputs[t];
        Workspace    ws{std::vector<std::uint8_t>(ground.size(), 0), {}};
        std::vector<std::uint8_t> member(ground.size(), 0);
        for (std::size_t i = next++; i < items.size(); i = next++) {
          ClosedSet const& s = items[i];
          ++out.nodes;
          for (auto e : s) {
            member[e] = 1;
          }
          for (index_type x = 0; x < ground.size(); ++x) {
            if (member[x]) {
              continue;
            }
            if (!close_with(ground, s, x, limit, ws)) {
              ++out.pruned_size;
              continue;
            }
            switch (judge(ground, config, ws.out, limit)) {
              case Verdict::budget:
                ++out.pruned_budget;
                break;
              case Verdict::idempotents:
                ++out.pruned_idempotents;
                break;
              case Verdict::keep:
                out.children.push_back(key(ws.out));
            }
          }
          std::fill(member.begin(), member.end(), 0);
        }
      };
      if (threads == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back(work, t);
        }
        for (auto& th : pool) {
          th.join();
        }
      }

      std::size_t new_limit = limit;
      for (auto& out : outputs) {
        result.stats.nodes_expanded += out.nodes;
        result.stats.pruned_size += out.pruned_size;
        result.stats.pruned_budget += out.pruned_budget;
        result.stats.pruned_idempotents += out.pruned_idempotents;
        for (auto& c : out.children) {
          if ((coverage(ground, c) & ground.full()) == ground.full()) {
            new_limit = std::min(new_limit, c.size());
          }
          buckets[c.size()].insert(std::move(c));
        }
      }
      for (std::size_t s = new_limit + 1; s <= limit; ++s) {
        buckets[s].clear();
      }
      limit = new_limit;

      if (config.progress) {
        std::size_t frontier = 0;
        for (auto const& b : buckets) {
          frontier += b.size();
        }
        config.progress({level,
                         frontier,
                         result.stats.nodes_expanded,
                         result.stats.pruned_size,
                         result.stats.pruned_budget,
                         result.stats.pruned_idempotents,
                         limit});
      }
    }

    // Canonical forms are complete similarity invariants; without them the
    // classes are separated with an explicit similarity test.
    for (auto const& s : minimal) {
      Semigroup candidate = to_semigroup(ground, s);
      bool      fresh     = true;
      if (!config.symmetry_breaking) {
        for (auto const& r : result.representatives) {
          if (are_similar(r, candidate)) {
            fresh = false;
            break;
          }
        }
      }
      if (fresh) {
        result.representatives.push_back(std::move(candidate));
      }
    }
    if (config.classify) {
      for (auto const& r : result.representatives) {
        result.classifications.push_back(classify(r, config.extra_groups));
      }
    }
    result.stats.seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    return result;
  }

  std::vector<ClassMatch> classify(Semigroup const&                 s,
                                   std::vector<RegularGroup> const& extra_groups) {
    std::vector<ClassMatch> out;
    std::size_t const       n = s.degree();
    if (n < 2) {
      return out;
    }
    std::size_t const       p = greatest_proper_divisor(n);
    std::vector<TypeParams> const candidates = type_instances(n, p, extra_groups);
    for (auto const& params : candidates) {
      std::optional<Semigroup> built;
      try {
        built = build(params);
      } catch (Error const&) {
        continue;
      }
      if (built->size() != s.size()) {
        continue;
      }
      if (auto sigma = are_similar(s, *built)) {
        out.push_back({label(params), params, *sigma});
      }
    }
    return out;
  }

  bool SweepReport::ok() const noexcept {
    if (!minimum_mismatches.empty()) {
      return false;
    }
    for (auto const& e : entries) {
      if (!e.ok()) {
        return false;
      }
    }
    return true;
  }

  SweepReport verify_bound_sweep(std::size_t n_lo, std::size_t n_hi) {
    SweepReport report;
    for (std::size_t n = std::max<std::size_t>(n_lo, 2); n <= n_hi; ++n) {
      std::size_t const gpd   = greatest_proper_divisor(n);
      std::size_t       least = 0;
      for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) {
          continue;
        }
        for (auto const& params : type_instances(n, p)) {
          SweepEntry e;
          e.label    = label(params);
          e.n        = n;
          e.p        = p;
          e.expected = 2 * n - p + 1;
          try {
            Semigroup const s = build(params);
            e.size            = s.size();
            e.closed          = s.is_closed();
            e.singular        = is_singular(s);
            e.semitransitive  = is_semitransitive(s);
            e.transitive      = is_transitive(s);
            auto audits       = audit_all(s);
            e.audits_pass     = all_pass(audits);
            if (e.size != e.expected) {
              e.failures.push_back("size " + std::to_string(e.size)
                                   + ", expected "
                                   + std::to_string(e.expected));
            }
            if (!e.closed) {
              e.failures.push_back("not closed");
            }
            if (!e.singular) {
              e.failures.push_back("not singular");
            }
            if (!e.semitransitive) {
              e.failures.push_back("not semitransitive");
            }
            if (e.transitive) {
              e.failures.push_back("transitive");
            }
            for (auto const& a : audits) {
              if (a.status() != AuditStatus::pass) {
                std::string msg = "audit " + a.name + " "
                                  + to_string(a.status());
                if (!a.witnesses.empty()) {
                  msg += ": " + a.witnesses.front();
                }
                e.failures.push_back(std::move(msg));
              }
            }
            if (e.semitransitive) {
              BlockStructure const bs = blocks(s);
              e.blocks_divisible      = true;
              for (auto size : bs.sizes()) {
                e.blocks_divisible = e.blocks_divisible && size % p == 0;
              }
              if (auto gh = idempotent_pair(s)) {
                e.nilpotents = nilpotent_partition(s, gh->g, gh->h, bs).n.size();
              }
              if (p == gpd) {
                if (e.nilpotents != n - p) {
                  e.failures.push_back("|N| = " + std::to_string(e.nilpotents)
                                       + ", expected "
                                       + std::to_string(n - p));
                }
                if (!e.blocks_divisible) {
                  e.failures.push_back("a block size is not divisible by p");
                }
              }
            }
          } catch (Error const& err) {
            e.failures.push_back(err.what());
          }
          if (least == 0 || e.size < least) {
            least = e.size;
          }
          report.entries.push_back(std::move(e));
        }
      }
      if (least != size_lower_bound(n)) {
        report.minimum_mismatches.push_back(n);
      }
    }
    return report;
  }

}  // namespace semitrans
