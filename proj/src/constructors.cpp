#include "semitrans/constructors.hpp"

#include <algorithm>      // for sort, find
#include <numeric>        // for iota
#include <set>            // for set
#include <sstream>        // for istringstream
#include <unordered_set>  // for unordered_set

#include "semitrans/error.hpp"

namespace semitrans {

  std::size_t greatest_proper_divisor(std::size_t n) {
    if (n < 2) {
      throw Error("greatest_proper_divisor: n must be at least 2");
    }
    for (std::size_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return n / d;
      }
    }
    return 1;
  }

  std::size_t size_lower_bound(std::size_t n) {
    return 2 * n - greatest_proper_divisor(n) + 1;
  }

  Partition parse_partition(std::string const& text) {
    Partition         out;
    std::stringstream parts(text);
    std::string       part;
    while (std::getline(parts, part, '|')) {
      std::vector<point_type> block;
      std::stringstream       pts(part);
      std::string             pt;
      while (std::getline(pts, pt, ',')) {
        auto b = pt.find_first_not_of(' ');
        auto e = pt.find_last_not_of(' ');
        if (b == std::string::npos
            || pt.substr(b, e - b + 1).find_first_not_of("0123456789")
                   != std::string::npos) {
          throw ParseError("malformed partition \"" + text + "\"");
        }
        block.push_back(std::stoul(pt.substr(b, e - b + 1)));
      }
      if (block.empty()) {
        throw ParseError("empty part in partition \"" + text + "\"");
      }
      out.push_back(std::move(block));
    }
    return out;
  }

  std::string to_string(Partition const& partition) {
    std::string out;
    for (std::size_t i = 0; i < partition.size(); ++i) {
      if (i != 0) {
        out += '|';
      }
      for (std::size_t j = 0; j < partition[i].size(); ++j) {
        out += (j ? "," : "") + std::to_string(partition[i][j]);
      }
    }
    return out;
  }

  namespace {
    std::uint64_t mask_of(std::vector<point_type> const& pts) {
      std::uint64_t m = 0;
      for (auto x : pts) {
        m |= std::uint64_t(1) << (x - 1);
      }
      return m;
    }

    std::vector<point_type> sorted_unique(std::vector<point_type> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    // Position of x in a sorted point list.
    std::size_t position(std::vector<point_type> const& sorted, point_type x) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
      if (it == sorted.end() || *it != x) {
        throw Error("point " + std::to_string(x) + " not in the expected set");
      }
      return static_cast<std::size_t>(it - sorted.begin());
    }

    // Parts must be disjoint and cover 1..n; each part is sorted.
    Partition checked_partition(Partition parts, std::size_t n) {
      std::uint64_t seen = 0;
      std::size_t   total = 0;
      for (auto& part : parts) {
        std::sort(part.begin(), part.end());
        for (auto x : part) {
          if (x < 1 || x > n) {
            throw Error("partition point " + std::to_string(x)
                        + " out of range 1.." + std::to_string(n));
          }
          if ((seen >> (x - 1)) & 1) {
            throw Error("partition repeats point " + std::to_string(x));
          }
          seen |= std::uint64_t(1) << (x - 1);
          ++total;
        }
      }
      if (total != n) {
        throw Error("partition does not cover 1.." + std::to_string(n));
      }
      return parts;
    }

    Partition consecutive(std::size_t count, std::size_t size) {
      Partition out(count);
      point_type next = 1;
      for (auto& part : out) {
        for (std::size_t i = 0; i < size; ++i) {
          part.push_back(next++);
        }
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RegularGroup
  ////////////////////////////////////////////////////////////////////////

  RegularGroup RegularGroup::cyclic(std::vector<point_type> carrier,
                                    std::size_t             degree) {
    carrier = sorted_unique(std::move(carrier));
    if (carrier.empty()) {
      throw Error("cyclic_group: empty carrier");
    }
    if (degree == 0) {
      degree = carrier.back();
    }
    std::vector<arrow_type> cycle;
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      cycle.emplace_back(carrier[i], carrier[(i + 1) % carrier.size()]);
    }
    std::vector<PartialPerm> gens{PartialPerm::from_arrows(degree, cycle)};
    std::size_t const        order = carrier.size();
    RegularGroup             g     = generated_by(std::move(carrier), gens);
    g.name_                        = "C" + std::to_string(order);
    return g;
  }

  RegularGroup RegularGroup::generated_by(std::vector<point_type>      carrier,
                                          std::span<PartialPerm const> generators) {
    RegularGroup g;
    g.carrier_ = sorted_unique(std::move(carrier));
    if (g.carrier_.empty()) {
      throw Error("regular_group: empty carrier");
    }
    g.degree_ = generators.empty() ? g.carrier_.back()
                                   : generators.front().degree();
    if (g.carrier_.back() > g.degree_) {
      throw Error("regular_group: carrier exceeds generator degree");
    }
    std::uint64_t const carrier_mask = mask_of(g.carrier_);
    for (auto const& gen : generators) {
      if (gen.degree() != g.degree_) {
        throw Error("regular_group: generators of mixed degree");
      }
      std::vector<arrow_type> arr = arrows(gen);
      for (auto x : g.carrier_) {
        if (!gen.in_domain(x) && !gen.in_image(x)) {
          arr.emplace_back(x, x);
        }
      }
      PartialPerm full = PartialPerm::from_arrows(g.degree_, arr);
      if (full.domain_mask() != carrier_mask
          || full.image_mask() != carrier_mask) {
        throw Error("regular_group: " + to_string(gen)
                    + " is not a permutation of the carrier");
      }
      g.generators_.push_back(full);
    }
    std::vector<PartialPerm> seeds = g.generators_;
    seeds.push_back(PartialPerm::identity_on(g.degree_, carrier_mask));
    Semigroup closed = Semigroup::closure(seeds);
    g.elements_.assign(closed.begin(), closed.end());

    std::uint64_t orbit = 0;
    for (auto const& a : g.elements_) {
      orbit |= std::uint64_t(1) << (a.at(g.carrier_.front()) - 1);
    }
    if (orbit != carrier_mask) {
      throw Error("regular_group: the group is not transitive on the carrier");
    }
    if (g.elements_.size() != g.carrier_.size()) {
      throw Error("regular_group: order " + std::to_string(g.elements_.size())
                  + " differs from degree " + std::to_string(g.carrier_.size())
                  + ", so the action is not regular");
    }
    return g;
  }

  RegularGroup RegularGroup::transported(std::vector<point_type> carrier,
                                         std::size_t             degree) const {
    return relabelled(carrier_, std::move(carrier), degree);
  }

  RegularGroup RegularGroup::relabelled(std::vector<point_type> const& order,
                                        std::vector<point_type>        carrier,
                                        std::size_t degree) const {
    carrier = sorted_unique(std::move(carrier));
    if (carrier.size() != carrier_.size() || order.size() != carrier_.size()
        || sorted_unique(order) != carrier_) {
      throw Error("regular_group: cannot relabel onto a carrier of size "
                  + std::to_string(carrier.size()));
    }
    std::vector<point_type> rename(carrier_.back() + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
      rename[order[i]] = carrier[i];
    }
    std::vector<PartialPerm> gens;
    for (auto const& a : generators_) {
      std::vector<arrow_type> arr;
      for (auto x : carrier_) {
        arr.emplace_back(rename[x], rename[a.at(x)]);
      }
      gens.push_back(PartialPerm::from_arrows(degree, arr));
    }
    if (gens.empty()) {
      gens.push_back(PartialPerm::identity_on(degree, mask_of(carrier)));
    }
    RegularGroup g = generated_by(std::move(carrier), gens);
    g.name_        = name_;
    return g;
  }

  std::vector<RegularGroup>
  RegularGroup::block_layouts(std::size_t block_size) const {
    std::vector<RegularGroup> out;
    if (block_size == 0 || carrier_.size() % block_size != 0) {
      return out;
    }
    // Subgroups as sorted lists of element positions, grown by adjoining
    // one element at a time.
    auto position_of = [&](PartialPerm const& a) {
      return static_cast<std::size_t>(
          std::lower_bound(elements_.begin(), elements_.end(), a)
          - elements_.begin());
    };
    auto generate = [&](std::vector<std::size_t> const& seed) {
      std::vector<PartialPerm> gens;
      for (auto i : seed) {
        gens.push_back(elements_[i]);
      }
      gens.push_back(PartialPerm::identity_on(degree_, mask_of(carrier_)));
      std::vector<std::size_t> sub;
      for (auto const& a : Semigroup::closure(gens)) {
        sub.push_back(position_of(a));
      }
      std::sort(sub.begin(), sub.end());
      return sub;
    };
    std::set<std::vector<std::size_t>> subgroups{generate({})};
    std::vector<std::vector<std::size_t>> todo(subgroups.begin(), subgroups.end());
    while (!todo.empty()) {
      auto k = std::move(todo.back());
      todo.pop_back();
      if (k.size() >= block_size) {
        continue;
      }
      for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (std::binary_search(k.begin(), k.end(), i)) {
          continue;
        }
        std::vector<std::size_t> seed = k;
        seed.push_back(i);
        auto bigger = generate(seed);
        if (bigger.size() <= block_size && subgroups.insert(bigger).second) {
          todo.push_back(bigger);
        }
      }
    }
    std::set<std::vector<point_type>> layouts;
    for (auto const& k : subgroups) {
      if (k.size() != block_size) {
        continue;
      }
      // The orbit of the least point under K and its images under the group.
      std::vector<point_type> base;
      for (auto i : k) {
        base.push_back(elements_[i].at(carrier_.front()));
      }
      std::vector<point_type> order;
      std::vector<bool>       placed(carrier_.back() + 1, false);
      for (auto const& a : elements_) {
        std::vector<point_type> block;
        for (auto x : base) {
          block.push_back(a.at(x));
        }
        std::sort(block.begin(), block.end());
        if (placed[block.front()]) {
          continue;
        }
        for (auto x : block) {
          placed[x] = true;
          order.push_back(x);
        }
      }
      if (layouts.insert(order).second) {
        out.push_back(relabelled(order, carrier_, degree_));
      }
    }
    return out;
  }

  bool RegularGroup::is_cyclic() const {
    point_type const z = carrier_.front();
    for (auto const& a : elements_) {
      std::size_t len = 1;
      for (point_type y = a.at(z); y != z; y = a.at(y)) {
        ++len;
      }
      if (len == carrier_.size()) {
        return true;
      }
    }
    return false;
  }

  std::string RegularGroup::name() const {
    if (!name_.empty()) {
      return name_;
    }
    std::string out = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      out += (i ? " " : "") + to_string(generators_[i]);
    }
    return out + ">";
  }

  namespace {
    // Partitions of e into positive parts, each in decreasing order.
    void partitions(std::size_t                            e,
                    std::size_t                            largest,
                    std::vector<std::size_t>&              current,
                    std::vector<std::vector<std::size_t>>& out) {
      if (e == 0) {
        out.push_back(current);
        return;
      }
      for (std::size_t k = std::min(e, largest); k >= 1; --k) {
        current.push_back(k);
        partitions(e - k, k, current, out);
        current.pop_back();
      }
    }

    // Invariant factors d_1 >= d_2 >= ... of every abelian group of order k.
    std::vector<std::vector<std::size_t>> abelian_types(std::size_t k) {
      std::vector<std::vector<std::size_t>> types{{}};
      for (std::size_t q = 2; k > 1; ++q) {
        std::size_t e = 0;
        while (k % q == 0) {
          k /= q;
          ++e;
        }
        if (e == 0) {
          continue;
        }
        std::vector<std::vector<std::size_t>> parts;
        std::vector<std::size_t>              current;
        partitions(e, e, current, parts);
        std::vector<std::vector<std::size_t>> next;
        for (auto const& t : types) {
          for (auto const& part : parts) {
            std::vector<std::size_t> f(std::max(t.size(), part.size()), 1);
            for (std::size_t i = 0; i < f.size(); ++i) {
              if (i < t.size()) {
                f[i] *= t[i];
              }
              if (i < part.size()) {
                for (std::size_t j = 0; j < part[i]; ++j) {
                  f[i] *= q;
                }
              }
            }
            next.push_back(std::move(f));
          }
        }
        types = std::move(next);
      }
      return types;
    }
  }  // namespace

  std::vector<RegularGroup> regular_groups(std::vector<point_type> carrier,
                                           std::size_t             degree) {
    carrier = sorted_unique(std::move(carrier));
    if (carrier.empty()) {
      throw Error("regular_groups: empty carrier");
    }
    if (degree == 0) {
      degree = carrier.back();
    }
    std::size_t const k = carrier.size();
    std::vector<RegularGroup> out;

    // Right multiplication by each generator, on elements numbered 0..k-1.
    auto add = [&](std::string                             name,
                   std::vector<std::size_t> const&         gens,
                   auto const&                             mul) {
      std::vector<PartialPerm> perms;
      for (auto g : gens) {
        std::vector<arrow_type> arr;
        for (std::size_t x = 0; x < k; ++x) {
          arr.emplace_back(carrier[x], carrier[mul(x, g)]);
        }
        perms.push_back(PartialPerm::from_arrows(degree, arr));
      }
      if (perms.empty()) {
        perms.push_back(PartialPerm::identity_on(degree, mask_of(carrier)));
      }
      RegularGroup group = RegularGroup::generated_by(carrier, perms);
      group.name_        = std::move(name);
      out.push_back(std::move(group));
    };

    for (auto const& factors : abelian_types(k)) {
      // Mixed radix with the first factor least significant.
      auto digits = [&](std::size_t x) {
        std::vector<std::size_t> d;
        for (auto f : factors) {
          d.push_back(x % f);
          x /= f;
        }
        return d;
      };
      auto mul = [&](std::size_t x, std::size_t y) {
        auto        dx = digits(x), dy = digits(y);
        std::size_t z = 0, scale = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          z += ((dx[i] + dy[i]) % factors[i]) * scale;
          scale *= factors[i];
        }
        return z;
      };
      std::string              name;
      std::vector<std::size_t> gens;
      std::size_t              scale = 1;
      for (auto f : factors) {
        name += (name.empty() ? "C" : "xC") + std::to_string(f);
        gens.push_back(scale);
        scale *= f;
      }
      add(name.empty() ? "C1" : name, gens, mul);
    }

    if (k % 2 == 0 && k >= 6) {
      // r^j s^e numbered j + r e.
      std::size_t const r   = k / 2;
      auto              mul = [r](std::size_t x, std::size_t y) {
        std::size_t j1 = x % r, e1 = x / r, j2 = y % r, e2 = y / r;
        std::size_t j = e1 ? (j1 + r - j2) % r : (j1 + j2) % r;
        return j + r * (e1 ^ e2);
      };
      add("D" + std::to_string(r), {1, r}, mul);
    }

    if (k == 8) {
      // +-1, +-i, +-j, +-k numbered basis + 4 * (sign is negative).
      static constexpr int table[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                                             {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
                                             {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
                                             {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
      auto mul = [](std::size_t x, std::size_t y) {
        auto const& t    = table[x % 4][y % 4];
        int         sign = t[1] * ((x / 4) ? -1 : 1) * ((y / 4) ? -1 : 1);
        return static_cast<std::size_t>(t[0]) + (sign < 0 ? 4 : 0);
      };
      add("Q8", {1, 2}, mul);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Product action and the reference construction
  ////////////////////////////////////////////////////////////////////////

  Semigroup product_action(RegularGroup const& group,
                           Semigroup const&    t,
                           Partition const&    raw_parts) {
    std::size_t const z_size = group.carrier().size();
    std::size_t const l      = raw_parts.size();
    if (t.degree() != l) {
      throw Error("product_action: T has degree " + std::to_string(t.degree())
                  + " but there are " + std::to_string(l) + " parts");
    }
    if (!t.has_zero()) {
      throw Error("product_action: T must contain the zero");
    }
    std::size_t n = 0;
    for (auto const& part : raw_parts) {
      if (part.size() != z_size) {
        throw Error("product_action: every part must have "
                    + std::to_string(z_size) + " points");
      }
      n += part.size();
    }
    Partition const parts = checked_partition(raw_parts, n);
    auto const&     z     = group.carrier();

    std::vector<PartialPerm> elements{PartialPerm(n)};
    for (auto const& alpha : group.elements()) {
      for (auto const& beta : t) {
        if (beta.is_zero()) {
          continue;
        }
        std::vector<arrow_type> arr;
        for (point_type i = 1; i <= l; ++i) {
          if (!beta.in_domain(i)) {
            continue;
          }
          for (std::size_t k = 0; k < z_size; ++k) {
            std::size_t k_alpha = position(z, alpha.at(z[k]));
            arr.emplace_back(parts[i - 1][k], parts[beta.at(i) - 1][k_alpha]);
          }
        }
        elements.push_back(PartialPerm::from_arrows(n, arr));
      }
    }
    return Semigroup(std::move(elements));
  }

  Semigroup reference_chain(RegularGroup const& group, Partition const& parts) {
    std::size_t const l = parts.size();
    if (l < 1) {
      throw Error("reference_chain: no parts");
    }
    std::vector<arrow_type> chain;
    for (point_type i = 1; i < l; ++i) {
      chain.emplace_back(i, i + 1);
    }
    std::vector<PartialPerm> gens{PartialPerm::from_arrows(l, chain),
                                  PartialPerm::identity(l),
                                  PartialPerm(l)};
    return product_action(group, Semigroup::closure(gens), parts);
  }

  Semigroup reference_chain(std::size_t n, std::size_t p) {
    if (p < 1 || n % p != 0) {
      throw Error("reference_chain: p must divide n");
    }
    Partition parts = consecutive(n / p, p);
    return reference_chain(RegularGroup::cyclic(parts.front(), n), parts);
  }

  ////////////////////////////////////////////////////////////////////////
  // The five families
  ////////////////////////////////////////////////////////////////////////

  std::string label(TypeParams const& params) {
    std::string out = "type" + std::to_string(params.family) + "(n="
                      + std::to_string(params.n) + ",p="
                      + std::to_string(params.p);
    if (params.family >= 4) {
      out += ",l=" + std::to_string(params.l);
    }
    out += ",m=" + std::to_string(params.m);
    if (params.group && !params.group->is_cyclic()) {
      out += ",G=" + params.group->name();
      if (params.family >= 4) {
        out += "[";
        for (std::size_t i = 0; i < params.group->generators().size(); ++i) {
          out += (i ? " " : "") + to_string(params.group->generators()[i]);
        }
        out += "]";
      }
    }
    return out + ")";
  }

  TypeParams make_params(int family, std::size_t n, std::size_t p, std::size_t l) {
    if (family < 1 || family > 5) {
      throw Error("family must be 1..5");
    }
    if (n < 2 || p < 1 || p >= n || n % p != 0) {
      throw Error("p = " + std::to_string(p) + " is not a proper divisor of n = "
                  + std::to_string(n));
    }
    TypeParams params;
    params.family = family;
    params.n      = n;
    params.p      = p;
    if (family <= 3) {
      params.m = n / p;
      return params;
    }
    std::size_t rest = n / p - 1;  // = l (m - 1)
    if (l < 2 || rest % l != 0 || rest / l < 1) {
      throw Error("families 4 and 5 need n = l p (m - 1) + p with l >= 2, m >= 2; "
                  "got n = " + std::to_string(n) + ", p = " + std::to_string(p)
                  + ", l = " + std::to_string(l));
    }
    params.l = l;
    params.m = rest / l + 1;
    return params;
  }

  std::vector<TypeParams> applicable_types(std::size_t n, std::size_t p) {
    std::vector<TypeParams> out;
    for (int family = 1; family <= 3; ++family) {
      out.push_back(make_params(family, n, p));
    }
    std::size_t rest = n / p - 1;
    for (std::size_t l = 2; l <= rest; ++l) {
      if (rest % l == 0) {
        out.push_back(make_params(4, n, p, l));
        out.push_back(make_params(5, n, p, l));
      }
    }
    return out;
  }

  std::vector<TypeParams> type_instances(std::size_t                      n,
                                         std::size_t                      p,
                                         std::vector<RegularGroup> const& extra) {
    std::vector<TypeParams> out = applicable_types(n, p);
    std::size_t const       base_count = out.size();
    for (std::size_t i = 0; i < base_count; ++i) {
      TypeParams const  base  = out[i];
      std::size_t const order = base.family <= 3 ? p : base.l * p;
      std::vector<point_type> carrier(order);
      std::iota(carrier.begin(), carrier.end(), 1);
      std::vector<RegularGroup> groups;
      for (auto& g : regular_groups(carrier)) {
        if (!g.is_cyclic()) {
          groups.push_back(std::move(g));
        }
      }
      for (auto const& g : extra) {
        if (g.order() == order) {
          groups.push_back(g);
        }
      }
      for (auto const& g : groups) {
        std::vector<RegularGroup> layouts{g};
        if (base.family >= 4) {
          layouts = g.block_layouts(p);
        }
        for (auto& layout : layouts) {
          TypeParams params = base;
          params.group      = std::move(layout);
          out.push_back(std::move(params));
        }
      }
    }
    return out;
  }

  Semigroup type1_local(std::size_t m) {
    std::vector<arrow_type> phi{{1, 2}}, psi, g{{1, 1}}, h;
    for (point_type i = 2; i < m; ++i) {
      psi.emplace_back(i, i + 1);
    }
    for (point_type i = 2; i <= m; ++i) {
      h.emplace_back(i, i);
    }
    std::vector<PartialPerm> gens{PartialPerm::from_arrows(m, phi),
                                  PartialPerm::from_arrows(m, psi),
                                  PartialPerm::from_arrows(m, g),
                                  PartialPerm::from_arrows(m, h)};
    return Semigroup::closure(gens);
  }

  Semigroup type3_local(std::size_t m) {
    std::vector<arrow_type> phi, psi, g, h;
    for (point_type i = 1; i <= m; ++i) {
      bool odd = i % 2 == 1;
      (odd ? g : h).emplace_back(i, i);
      if (i < m) {
        (odd ? phi : psi).emplace_back(i, i + 1);
      }
    }
    std::vector<PartialPerm> gens{PartialPerm::from_arrows(m, phi),
                                  PartialPerm::from_arrows(m, psi),
                                  PartialPerm::from_arrows(m, g),
                                  PartialPerm::from_arrows(m, h)};
    return Semigroup::closure(gens);
  }

  namespace {
    void check_family(TypeParams const& params, std::initializer_list<int> ok) {
      if (std::find(ok.begin(), ok.end(), params.family) == ok.end()) {
        throw Error("parameters are for family " + std::to_string(params.family));
      }
      // Re-derive m (and validate l) so hand-filled parameters are checked.
      TypeParams fresh = make_params(params.family, params.n, params.p, params.l);
      if (params.m != 0 && params.m != fresh.m) {
        throw Error("inconsistent m for " + label(fresh));
      }
    }

    Semigroup product_family(TypeParams const& params, Semigroup const& t) {
      std::size_t const m     = params.n / params.p;
      Partition         parts = params.partition
                                    ? checked_partition(*params.partition, params.n)
                                    : consecutive(m, params.p);
      if (parts.size() != m) {
        throw Error("expected a partition into " + std::to_string(m) + " blocks");
      }
      RegularGroup group = params.group
                               ? params.group->transported(parts.front(), params.n)
                               : RegularGroup::cyclic(parts.front(), params.n);
      if (group.order() != params.p) {
        throw Error("the group must have order p = " + std::to_string(params.p));
      }
      return product_action(group, t, parts);
    }
  }  // namespace

  Semigroup type1(TypeParams const& params) {
    check_family(params, {1, 2});
    return product_family(params, type1_local(params.n / params.p));
  }

  Semigroup type2(TypeParams const& params) {
    return inverse(type1(params));
  }

  Semigroup type3(TypeParams const& params) {
    check_family(params, {3});
    return product_family(params, type3_local(params.n / params.p));
  }

  Semigroup type4(TypeParams const& params) {
    check_family(params, {4, 5});
    std::size_t const n = params.n, p = params.p, l = params.l;
    std::size_t const m = (n / p - 1) / l + 1;

    // parts[0] = X_1, parts[1 + (a - 2) l + (b - 1)] = U_b^a.
    Partition parts = params.partition ? checked_partition(*params.partition, n)
                                       : consecutive(1 + l * (m - 1), p);
    if (parts.size() != 1 + l * (m - 1)) {
      throw Error("expected X_1 followed by " + std::to_string(l * (m - 1))
                  + " parts U_b^a");
    }
    for (auto const& part : parts) {
      if (part.size() != p) {
        throw Error("every part must have p = " + std::to_string(p) + " points");
      }
    }
    auto u = [&](std::size_t a, std::size_t b) -> std::vector<point_type> const& {
      return parts[1 + (a - 2) * l + (b - 1)];
    };

    std::vector<point_type> x2;
    for (std::size_t b = 1; b <= l; ++b) {
      x2.insert(x2.end(), u(2, b).begin(), u(2, b).end());
    }
    std::sort(x2.begin(), x2.end());

    RegularGroup group = [&] {
      if (params.group) {
        return params.group->transported(x2, n);
      }
      // Cyclic group of order lp stepping through U_1^2[0], U_2^2[0], ...,
      // U_l^2[0], U_1^2[1], ...; its order-p subgroup fixes every U_b^2.
      std::vector<point_type> walk;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t b = 1; b <= l; ++b) {
          walk.push_back(u(2, b)[k]);
        }
      }
      std::vector<arrow_type> cycle;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        cycle.emplace_back(walk[i], walk[(i + 1) % walk.size()]);
      }
      std::vector<PartialPerm> gens{PartialPerm::from_arrows(n, cycle)};
      return RegularGroup::generated_by(x2, gens);
    }();
    if (group.order() != l * p) {
      throw Error("the group must have order l p = " + std::to_string(l * p));
    }

    // Coordinates (k, b) of a point of X_2.
    auto coords = [&](point_type x) -> std::pair<std::size_t, std::size_t> {
      for (std::size_t b = 1; b <= l; ++b) {
        auto const& part = u(2, b);
        auto        it   = std::lower_bound(part.begin(), part.end(), x);
        if (it != part.end() && *it == x) {
          return {static_cast<std::size_t>(it - part.begin()), b};
        }
      }
      throw Error("point " + std::to_string(x) + " is not in X_2");
    };

    std::vector<bool> stabilises(group.order(), false);
    std::size_t       h_order = 0;
    for (std::size_t i = 0; i < group.order(); ++i) {
      auto const& alpha = group.elements()[i];
      for (std::size_t b = 1; b <= l; ++b) {
        std::size_t target = coords(alpha.at(u(2, b).front())).second;
        for (auto x : u(2, b)) {
          if (coords(alpha.at(x)).second != target) {
            throw Error("U_" + std::to_string(b)
                        + "^2 is not an imprimitivity block of the group");
          }
        }
        if (b == 1 && target == 1) {
          stabilises[i] = true;
          ++h_order;
        }
      }
    }
    if (h_order != p) {
      throw Error("the stabiliser of U_1^2 has order " + std::to_string(h_order)
                  + ", expected p = " + std::to_string(p));
    }

    // T on Z = {(1,1)} u {(a,b) : 2 <= a <= m, 1 <= b <= l}, indexed
    // (1,1) -> 1 and (a,b) -> 1 + (a - 2) l + b.
    std::size_t const zn   = 1 + l * (m - 1);
    auto              zidx = [&](std::size_t a, std::size_t b) -> point_type {
      return a == 1 ? 1 : 1 + (a - 2) * l + b;
    };
    auto zcoord = [&](point_type i) -> std::pair<std::size_t, std::size_t> {
      if (i == 1) {
        return {1, 1};
      }
      return {(i - 2) / l + 2, (i - 2) % l + 1};
    };
    std::vector<arrow_type> phi{{zidx(1, 1), zidx(2, 1)}}, psi, g{{1, 1}}, h;
    for (std::size_t a = 2; a <= m; ++a) {
      for (std::size_t b = 1; b <= l; ++b) {
        h.emplace_back(zidx(a, b), zidx(a, b));
        if (a < m) {
          psi.emplace_back(zidx(a, b), zidx(a + 1, b));
        }
      }
    }
    PartialPerm const        g_elt = PartialPerm::from_arrows(zn, g);
    std::vector<PartialPerm> gens{PartialPerm::from_arrows(zn, phi),
                                  PartialPerm::from_arrows(zn, psi),
                                  g_elt,
                                  PartialPerm::from_arrows(zn, h)};
    Semigroup const t = Semigroup::closure(gens);

    std::vector<PartialPerm> elements{PartialPerm(n)};
    for (std::size_t i = 0; i < group.order(); ++i) {
      auto const& alpha = group.elements()[i];
      for (auto const& beta : t) {
        if (beta.is_zero()) {
          continue;
        }
        std::vector<arrow_type> arr;
        for (point_type zi = 1; zi <= zn; ++zi) {
          if (!beta.in_domain(zi)) {
            continue;
          }
          auto [a, b]      = zcoord(zi);
          auto [a2, b2]    = zcoord(beta.at(zi));
          auto const& from = a == 1 ? parts[0] : u(a, b);
          if (a == 1 && beta == g_elt) {
            if (!stabilises[i]) {
              continue;
            }
            for (std::size_t k = 0; k < p; ++k) {
              auto [k2, b3] = coords(alpha.at(u(2, 1)[k]));
              arr.emplace_back(from[k], parts[0][k2]);
            }
            continue;
          }
          for (std::size_t k = 0; k < p; ++k) {
            auto [k2, b3] = coords(alpha.at(u(2, b2)[k]));
            arr.emplace_back(from[k], u(a2, b3)[k2]);
          }
        }
        elements.push_back(PartialPerm::from_arrows(n, arr));
      }
    }
    return Semigroup(std::move(elements));
  }

  Semigroup type5(TypeParams const& params) {
    return inverse(type4(params));
  }

  Semigroup build(TypeParams const& params) {
    switch (params.family) {
      case 1:
        return type1(params);
      case 2:
        return type2(params);
      case 3:
        return type3(params);
      case 4:
        return type4(params);
      case 5:
        return type5(params);
      default:
        throw Error("family must be 1..5");
    }
  }

}  // namespace semitrans
