// Acceptance runner: one line per criterion, exit status 1 if any fails.
// Pass --verbose for the flagged example lines and per-instance failures.

#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "properties.hpp"

#include "semitrans/analysis.hpp"
#include "semitrans/constructors.hpp"
#include "semitrans/search.hpp"

using namespace semitrans;

namespace {

  bool verbose = false;

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  std::vector<std::size_t> proper_divisors(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t p = 1; p < n; ++p) {
      if (n % p == 0) {
        out.push_back(p);
      }
    }
    return out;
  }

  Outcome sweep() {
    auto const  r = verify_bound_sweep(2, 20);
    std::size_t bad = 0;
    for (auto const& e : r.entries) {
      if (!e.ok()) {
        ++bad;
        if (verbose) {
          std::cout << "    " << e.label << ": " << e.failures.front() << '\n';
        }
      }
    }
    std::ostringstream d;
    d << r.entries.size() << " instances for n = 2..20, " << bad << " failing";
    return {r.ok() && !r.entries.empty(), d.str()};
  }

  Outcome minimality() {
    std::ostringstream d;
    bool               ok = true;
    for (std::size_t n : {2, 3, 4}) {
      SearchConfig c;
      c.n = n;
      if (n <= 3) {
        c.prune             = PruneMode::none;
        c.symmetry_breaking = false;
      }
      auto const t0 = std::chrono::steady_clock::now();
      auto const r  = minimal_search(c);
      double const s
          = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      bool const good = r.complete && r.minimal_cardinality
                        && *r.minimal_cardinality == size_lower_bound(n)
                        && s < (n <= 3 ? 5.0 : 300.0);
      ok = ok && good;
      d << (n == 2 ? "" : ", ") << "n=" << n << ": "
        << (r.minimal_cardinality ? std::to_string(*r.minimal_cardinality) : "none")
        << " (bound " << size_lower_bound(n) << ", " << to_string(c.prune) << ')';
    }
    return {ok, d.str()};
  }

  Outcome classification() {
    SearchConfig c;
    c.n        = 4;
    c.classify = true;
    auto const  r = minimal_search(c);
    std::size_t classified = 0;
    for (std::size_t i = 0; i < r.representatives.size(); ++i) {
      if (!r.classifications[i].empty()) {
        ++classified;
      }
      if (verbose) {
        for (auto const& m : r.classifications[i]) {
          std::cout << "    class " << i + 1 << ": " << m.label << '\n';
        }
      }
    }
    std::ostringstream d;
    d << classified << " of " << r.representatives.size()
      << " classes at n=4 match a family instance";
    return {r.complete && !r.representatives.empty()
                && classified == r.representatives.size(),
            d.str()};
  }

  Outcome examples() {
    std::size_t const  expected[] = {15, 19, 15};
    bool               ok         = true;
    std::ostringstream d;
    for (int k = 1; k <= 3; ++k) {
      auto const c = build_example(k);
      ok = ok && c.semigroup.size() == expected[k - 1] && c.confined_to_documented();
      d << (k == 1 ? "" : ", ") << "example " << k << ": " << c.semigroup.size()
        << " elements, " << c.flagged.size() << " flagged";
      if (verbose) {
        for (auto const& f : c.flagged) {
          std::cout << "    example " << k << " flagged " << f.line << ": "
                    << f.problem << '\n';
        }
      }
    }
    return {ok, d.str()};
  }

  Outcome tightness() {
    std::size_t checked = 0, bad = 0;
    for (std::size_t n = 2; n <= 20; ++n) {
      std::size_t const p = greatest_proper_divisor(n);
      for (auto const& params : type_instances(n, p)) {
        auto const s  = build(params);
        auto const gh = idempotent_pair(s);
        auto const bl = blocks(s);
        bool       ok = gh.has_value();
        if (ok) {
          auto const np = nilpotent_partition(s, gh->g, gh->h, bl);
          ok            = np.n.size() == n - p;
        }
        for (auto k : bl.sizes()) {
          ok = ok && k % p == 0;
        }
        ++checked;
        if (!ok) {
          ++bad;
          if (verbose) {
            std::cout << "    " << label(params) << '\n';
          }
        }
      }
    }
    std::ostringstream d;
    d << checked << " minimal instances, |N| = n - p and p | block sizes in "
      << checked - bad;
    return {checked > 0 && bad == 0, d.str()};
  }

  Outcome property_suites() {
    constexpr int          cases = 1000;
    properties::Generator  gen(20240611);
    std::size_t            failures = 0;
    std::ostringstream     d;
    std::pair<char const*, std::function<std::size_t()>> const suites[] = {
        {"associativity", [&] { return properties::associativity(gen, cases); }},
        {"inverse", [&] { return properties::inverse_reverses_products(gen, cases); }},
        {"round trip", [&] { return properties::print_parse_round_trip(gen, cases); }},
        {"closure", [&] { return properties::closure_idempotent(gen, cases); }},
        {"conjugation", [&] { return properties::blocks_follow_conjugation(gen, cases); }},
    };
    char const* sep = "";
    for (auto const& [name, run] : suites) {
      std::size_t const f = run();
      failures += f;
      d << sep << name << ' ' << f;
      sep = ", ";
    }
    d << " failures in " << cases << " cases each";
    return {failures == 0, d.str()};
  }

  Outcome reference() {
    std::size_t tested = 0, bad = 0;
    for (std::size_t n = 2; n <= 20; ++n) {
      for (std::size_t p : proper_divisors(n)) {
        std::size_t const       l = n / p;
        std::vector<point_type> carrier(p);
        std::iota(carrier.begin(), carrier.end(), 1);
        for (auto const& g : regular_groups(carrier, n)) {
          Partition parts(l);
          for (point_type x = 1; x <= n; ++x) {
            parts[(x - 1) / p].push_back(x);
          }
          auto const s = reference_chain(g, parts);
          ++tested;
          if (s.size() != n + 1 || !is_semitransitive(s) || is_transitive(s)) {
            ++bad;
            if (verbose) {
              std::cout << "    n=" << n << " p=" << p << " G=" << g.name() << '\n';
            }
          }
        }
        auto const s = reference_chain(n, p);
        ++tested;
        bad += s.size() != n + 1 || !is_semitransitive(s) || is_transitive(s);
      }
    }
    std::ostringstream d;
    d << tested << " (n, l, p, G) instances, " << bad << " failing";
    return {tested > 0 && bad == 0, d.str()};
  }

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    verbose = verbose || std::strcmp(argv[i], "--verbose") == 0;
  }
  std::pair<char const*, std::function<Outcome()>> const criteria[] = {
      {"constructive cardinality sweep", sweep},
      {"exhaustive minimality", minimality},
      {"classification at n = 4", classification},
      {"example regression", examples},
      {"nilpotent-count tightness", tightness},
      {"algebra property suites", property_suites},
      {"reference construction", reference},
  };
  int failed = 0;
  int k      = 0;
  for (auto const& [name, check] : criteria) {
    ++k;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const s
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << k << ". " << name << ": "
              << o.detail << " [" << std::fixed << std::setprecision(2) << s << " s]"
              << std::endl;
    failed += !o.pass;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " failing")
            << '\n';
  return failed == 0 ? 0 : 1;
}
