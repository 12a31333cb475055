#include "semitrans/semigroup.hpp"

#include <algorithm>  // for sort, unique
#include <string>     // for to_string

#include "semitrans/error.hpp"

namespace semitrans {

  namespace {
    std::size_t common_degree(std::span<PartialPerm const> elements,
                              char const*                  what) {
      if (elements.empty()) {
        throw Error(std::string(what) + ": empty element set");
      }
      std::size_t n = elements.front().degree();
      for (auto const& a : elements) {
        if (a.degree() != n) {
          throw Error(std::string(what) + ": mixed degrees ("
                      + std::to_string(n) + " and "
                      + std::to_string(a.degree()) + ")");
        }
      }
      return n;
    }

    void sort_unique(std::vector<PartialPerm>& v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    bool closed_under_compose(
        std::span<PartialPerm const>                            elements,
        std::unordered_set<PartialPerm, PartialPermHash> const& index) {
      for (auto const& a : elements) {
        for (auto const& b : elements) {
          if (!index.contains(a * b)) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  Semigroup::Semigroup(Unchecked,
                       std::vector<PartialPerm> elements,
                       bool                     known_closed)
      : degree_(common_degree(elements, "semigroup")),
        elements_(std::move(elements)) {
    sort_unique(elements_);
    index_.reserve(elements_.size());
    index_.insert(elements_.begin(), elements_.end());
    closed_ = known_closed || closed_under_compose(elements_, index_);
  }

  Semigroup::Semigroup(std::vector<PartialPerm> elements)
      : Semigroup(Unchecked{}, std::move(elements), false) {
    if (!closed_) {
      throw Error("semigroup: element set is not closed under composition");
    }
  }

  Semigroup Semigroup::unchecked(std::vector<PartialPerm> elements) {
    return Semigroup(Unchecked{}, std::move(elements), false);
  }

  Semigroup Semigroup::closure(std::span<PartialPerm const> generators) {
    common_degree(generators, "closure");
    std::vector<PartialPerm> gens(generators.begin(), generators.end());
    sort_unique(gens);

    std::unordered_set<PartialPerm, PartialPermHash> seen(gens.begin(),
                                                          gens.end());
    std::vector<PartialPerm> elements(gens.begin(), gens.end());
    // Every product of generators is reached by right multiplication.
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (auto const& s : gens) {
        PartialPerm p = elements[i] * s;
        if (seen.insert(p).second) {
          elements.push_back(std::move(p));
        }
      }
    }
    return Semigroup(Unchecked{}, std::move(elements), true);
  }

  bool is_closed(std::span<PartialPerm const> elements) {
    std::unordered_set<PartialPerm, PartialPermHash> index(elements.begin(),
                                                           elements.end());
    return closed_under_compose(elements, index);
  }

  bool is_singular(Semigroup const& s) {
    return std::all_of(s.begin(), s.end(), [&](PartialPerm const& a) {
      return a.rank() < s.degree();
    });
  }

  IdempotentProfile idempotent_profile(Semigroup const& s) {
    IdempotentProfile profile;
    for (auto const& a : s) {
      if (a.is_zero()) {
        profile.has_zero = true;
      } else if (is_idempotent(a)) {
        profile.nonzero_idempotents.push_back(a);
      }
    }
    return profile;
  }

  std::vector<PartialPerm> local(Semigroup const&   s,
                                 PartialPerm const& e,
                                 PartialPerm const& f) {
    for (auto const* x : {&e, &f}) {
      if (!is_idempotent(*x) || !s.contains(*x)) {
        throw Error("local: " + to_string(*x)
                    + " is not an idempotent of the semigroup");
      }
    }
    std::vector<PartialPerm> out;
    out.reserve(s.size());
    for (auto const& a : s) {
      out.push_back(e * a * f);
    }
    sort_unique(out);
    return out;
  }

  Semigroup s_prime(Semigroup const&   s,
                    PartialPerm const& g,
                    PartialPerm const& h) {
    std::vector<PartialPerm> all;
    for (auto const* e : {&g, &h}) {
      for (auto const* f : {&g, &h}) {
        auto part = local(s, *e, *f);
        all.insert(all.end(), part.begin(), part.end());
      }
    }
    return Semigroup(std::move(all));
  }

  Semigroup conjugate(Semigroup const& s, PartialPerm const& sigma) {
    if (sigma.degree() != s.degree() || sigma.rank() != s.degree()) {
      throw Error("conjugate: " + to_string(sigma)
                  + " is not a permutation of degree "
                  + std::to_string(s.degree()));
    }
    PartialPerm const        sigma_inv = inverse(sigma);
    std::vector<PartialPerm> out;
    out.reserve(s.size());
    for (auto const& a : s) {
      out.push_back(sigma_inv * a * sigma);
    }
    return s.is_closed() ? Semigroup(std::move(out))
                         : Semigroup::unchecked(std::move(out));
  }

  Semigroup inverse(Semigroup const& s) {
    std::vector<PartialPerm> out;
    out.reserve(s.size());
    for (auto const& a : s) {
      out.push_back(inverse(a));
    }
    return s.is_closed() ? Semigroup(std::move(out))
                         : Semigroup::unchecked(std::move(out));
  }

  namespace {
    // Arrow multiplicities: counts[x][y] is the number of elements with an
    // arrow x -> y.  Conjugation by sigma permutes rows and columns.
    struct ArrowCounts {
      std::size_t              n;
      std::vector<std::size_t> counts;

      explicit ArrowCounts(Semigroup const& s)
          : n(s.degree()), counts(n * n, 0) {
        for (auto const& a : s) {
          for (auto [x, y] : arrows(a)) {
            ++counts[(x - 1) * n + (y - 1)];
          }
        }
      }

      std::size_t operator()(point_type x, point_type y) const {
        return counts[(x - 1) * n + (y - 1)];
      }

      std::vector<std::size_t> signature(point_type x) const {
        std::vector<std::size_t> row, col;
        for (point_type y = 1; y <= n; ++y) {
          row.push_back((*this)(x, y));
          col.push_back((*this)(y, x));
        }
        std::sort(row.begin(), row.end());
        std::sort(col.begin(), col.end());
        std::vector<std::size_t> sig{(*this)(x, x)};
        sig.insert(sig.end(), row.begin(), row.end());
        sig.insert(sig.end(), col.begin(), col.end());
        return sig;
      }
    };

    std::vector<std::size_t> rank_multiset(Semigroup const& s) {
      std::vector<std::size_t> out;
      for (auto const& a : s) {
        out.push_back(a.rank());
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // Sorted sizes of the mutual-reachability classes of the transitively
    // closed reach relation.
    std::vector<std::size_t> reach_class_sizes(Semigroup const& s) {
      std::size_t const          n = s.degree();
      std::vector<std::uint64_t> reach(n, 0);
      for (auto const& a : s) {
        for (auto [x, y] : arrows(a)) {
          reach[x - 1] |= std::uint64_t(1) << (y - 1);
        }
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
          if ((reach[i] >> k) & 1) {
            reach[i] |= reach[k];
          }
        }
      }
      std::vector<std::size_t> sizes;
      std::vector<bool>        done(n, false);
      for (std::size_t i = 0; i < n; ++i) {
        if (done[i]) {
          continue;
        }
        std::size_t size = 0;
        for (std::size_t j = 0; j < n; ++j) {
          bool mutual = i == j || (((reach[i] >> j) & 1) && ((reach[j] >> i) & 1));
          if (mutual) {
            done[j] = true;
            ++size;
          }
        }
        sizes.push_back(size);
      }
      std::sort(sizes.begin(), sizes.end());
      return sizes;
    }

    struct SimilaritySearch {
      Semigroup const&                      a;
      Semigroup const&                      b;
      ArrowCounts                           ca;
      ArrowCounts                           cb;
      std::vector<point_type>               order;       // points of a
      std::vector<std::vector<point_type>>  candidates;  // per point of a
      std::vector<point_type>               image;       // 1-based, 0 unset
      std::vector<bool>                     used;

      SimilaritySearch(Semigroup const& a_, Semigroup const& b_)
          : a(a_), b(b_), ca(a_), cb(b_) {}

      bool prepare() {
        std::size_t const n = a.degree();
        candidates.assign(n + 1, {});
        for (point_type x = 1; x <= n; ++x) {
          auto sx = ca.signature(x);
          for (point_type y = 1; y <= n; ++y) {
            if (cb.signature(y) == sx) {
              candidates[x].push_back(y);
            }
          }
          if (candidates[x].empty()) {
            return false;
          }
          order.push_back(x);
        }
        std::stable_sort(order.begin(), order.end(), [&](auto l, auto r) {
          return candidates[l].size() < candidates[r].size();
        });
        image.assign(n + 1, 0);
        used.assign(n + 1, false);
        return true;
      }

      bool verify() const {
        std::vector<arrow_type> pairs;
        for (point_type x = 1; x <= a.degree(); ++x) {
          pairs.emplace_back(x, image[x]);
        }
        PartialPerm sigma = PartialPerm::from_arrows(a.degree(), pairs);
        PartialPerm sigma_inv = inverse(sigma);
        return std::all_of(a.begin(), a.end(), [&](PartialPerm const& s) {
          return b.contains(sigma_inv * s * sigma);
        });
      }

      bool extend(std::size_t depth) {
        if (depth == order.size()) {
          return verify();
        }
        point_type x = order[depth];
        for (point_type y : candidates[x]) {
          if (used[y]) {
            continue;
          }
          bool ok = true;
          for (std::size_t k = 0; k < depth && ok; ++k) {
            point_type u = order[k];
            ok = ca(x, u) == cb(y, image[u]) && ca(u, x) == cb(image[u], y);
          }
          if (!ok) {
            continue;
          }
          image[x] = y;
          used[y]  = true;
          if (extend(depth + 1)) {
            return true;
          }
          used[y]  = false;
          image[x] = 0;
        }
        return false;
      }
    };
  }  // namespace

  std::optional<PartialPerm> are_similar(Semigroup const& a,
                                         Semigroup const& b) {
    if (a.degree() != b.degree() || a.size() != b.size()) {
      return std::nullopt;
    }
    if (rank_multiset(a) != rank_multiset(b)
        || idempotent_profile(a).nonzero_idempotents.size()
               != idempotent_profile(b).nonzero_idempotents.size()
        || reach_class_sizes(a) != reach_class_sizes(b)) {
      return std::nullopt;
    }
    SimilaritySearch search(a, b);
    if (!search.prepare() || !search.extend(0)) {
      return std::nullopt;
    }
    std::vector<arrow_type> pairs;
    for (point_type x = 1; x <= a.degree(); ++x) {
      pairs.emplace_back(x, search.image[x]);
    }
    return PartialPerm::from_arrows(a.degree(), pairs);
  }

  LocalDecomposition units_and_nilpotents(Semigroup const&   s,
                                          PartialPerm const& e) {
    LocalDecomposition out;
    for (auto const& a : local(s, e, e)) {
      if (a.is_zero()) {
        continue;
      }
      PartialPerm idem = idempotent_power(a);
      if (idem == e) {
        out.group.push_back(a);
      } else if (idem.is_zero()) {
        out.nilpotent.push_back(a);
      } else {
        out.other.push_back(a);
      }
    }
    return out;
  }

}  // namespace semitrans
