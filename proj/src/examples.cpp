#include <algorithm>  // for find, sort
#include <array>      // for array
#include <sstream>    // for istringstream
#include <string>     // for string

#include "semitrans/constructors.hpp"
#include "semitrans/error.hpp"
#include "semitrans/io.hpp"

namespace semitrans {

  namespace {
    std::string const example1 = R"(# Example 1: type 1, n=8, p=2, G={e,(1,2)}
n=8
# gSg
(1)(2)(3](4](5](6](7](8]
(1,2)(3](4](5](6](7](8]
# hSh
(1](2](3)(4)(5)(6)(7)(8)
(1](2](3,5,7](4,6,8]
(1](2](3,7](4,8](5](6]
(1](2](3,4)(5,6)(7,8)
(1](2](3,6,7](4,5,8]
(1](2](3,8](4,7](5](6]
# gSh
(1,3](2,4](5](6](7](8]
(1,5](2,6](3](4](7](8]
(1,7](2,8](3](4](5](6]
(1,4](2,3](5](6](7](8]
(1,6](2,7](3](4](7](8]
(1,8](2,7](3](4](5](6]
0
)";

    std::string const example2 = R"(# Example 2: type 4, n=10, p=2, l=2, G=<(3,5,4,6)>
n=10
# gSg
(1)(2)(3](4](5](6](7](8](9](10]
(1,2)(3](4](5](6](7](8](9](10]
# hSh
(1](2](3)(4)(5)(6)(7)(8)(9)(10)
(1](2](3,5,4,6)(7,9,8,10)
(1](2](3,4)(5,6)(7,8)(9,10)
(1](2](3,6,4,5)(7,10,8,9)
(1](2](3,7](4,8](5,9](6,10]
(1](2](3,9](4,10](5,8](6,7]
(1](2](3,8](4,7](5,10](6,9]
(1](2](3,10](4,9](5,7](6,8]
# gSh
(1,3](2,4](5](6](7](8](9](10]
(1,4](2,3](5](6](7](8](9](10]
(1,5](2,6](3](4](7](8](9](10]
(1,6](2,5](3](4](7](8](9](10]
(1,7](2,8](3](4](5](6](9](10]
(1,8](2,7](3](4](5](6](9](10]
(1,9](2,10](3](4](5](6](7](8]
(1,10](2,9](3](4](5](6](7](8]
0
)";

    std::string const example3 = R"(# Example 3: type 3, n=8, p=2, G={e,(1,2)}
n=8
# gSg
(1)(2)(5)(6)(3](4](7](8]
(1,2)(5,6)(3](4](7](8]
(1,5](2,6](3](4](7](8]
(1,6](2,5](3](4](7](8]
# hSh
(3)(4)(7)(8)(1](2](5](6]
(3,4)(7,8)(1](2](5](6]
(3,7](4,8](1](2](5](6]
(3,8](4,7](1](2](5](6]
# gSh
(1,3](2,4](5,7](6,8]
(1,4](2,3](5,8](6,7]
(1,7](2,8](2](3](4](5]
(1,8](2,7](2](3](4](5]
# hSg
(3,5](4,6](1](2](7](8]
(3,6](4,5](1](2](7](8]
# the listing leaves the zero implicit
0
)";

    // Arrows written in a line, ignoring whether they form a valid map.
    std::vector<arrow_type> lenient_arrows(std::string const& text) {
      std::vector<arrow_type> out;
      std::size_t             i = 0;
      while (i < text.size()) {
        if (text[i] != '(') {
          ++i;
          continue;
        }
        std::vector<point_type> pts;
        std::size_t             j = i + 1;
        point_type              cur = 0;
        bool                    have = false;
        for (; j < text.size() && text[j] != ')' && text[j] != ']'; ++j) {
          if (text[j] >= '0' && text[j] <= '9') {
            cur  = cur * 10 + static_cast<point_type>(text[j] - '0');
            have = true;
          } else if (text[j] == ',') {
            if (have) {
              pts.push_back(cur);
            }
            cur  = 0;
            have = false;
          }
        }
        if (have) {
          pts.push_back(cur);
        }
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
          out.emplace_back(pts[k], pts[k + 1]);
        }
        if (j < text.size() && text[j] == ')' && !pts.empty()) {
          out.emplace_back(pts.back(), pts.front());
        }
        i = j + 1;
      }
      return out;
    }

    std::optional<PartialPerm>
    closest(std::vector<arrow_type> const&  written,
            std::vector<PartialPerm> const& candidates) {
      std::optional<PartialPerm> best;
      std::size_t                best_score = 0;
      for (auto const& c : candidates) {
        std::size_t score = 0;
        for (auto [x, y] : written) {
          if (x <= c.degree() && c.at(x) == y) {
            ++score;
          }
        }
        if (score > best_score) {
          best       = c;
          best_score = score;
        }
      }
      return best;
    }

    Semigroup regenerate(int k) {
      switch (k) {
        case 1:
          return type1(make_params(1, 8, 2));
        case 2: {
          TypeParams params = make_params(4, 10, 2, 2);
          std::vector<PartialPerm> gens{parse("(3,5,4,6)", 10)};
          params.group = RegularGroup::generated_by({3, 4, 5, 6}, gens);
          return type4(params);
        }
        case 3:
          return type3(make_params(3, 8, 2));
        default:
          throw Error("there are examples 1, 2 and 3 only");
      }
    }
  }  // namespace

  std::string const& example_transcription(int k) {
    switch (k) {
      case 1:
        return example1;
      case 2:
        return example2;
      case 3:
        return example3;
      default:
        throw Error("there are examples 1, 2 and 3 only");
    }
  }

  bool ExampleCheck::confined_to_documented() const {
    std::vector<PartialPerm> intended;
    for (auto const& f : flagged) {
      if (std::find(documented.begin(), documented.end(), f.line)
              == documented.end()
          || !f.likely_intended) {
        return false;
      }
      intended.push_back(*f.likely_intended);
    }
    std::sort(intended.begin(), intended.end());
    if (std::adjacent_find(intended.begin(), intended.end()) != intended.end()) {
      return false;
    }
    std::vector<PartialPerm> missing = unmatched;
    std::sort(missing.begin(), missing.end());
    return intended == missing;
  }

  ExampleCheck build_example(int k) {
    Semigroup          s = regenerate(k);
    std::istringstream in(example_transcription(k));
    RawSemigroupFile   raw = read_raw_semigroup_file(in);

    ExampleCheck check{k, s, {}, {}, {}};
    if (k == 1) {
      check.documented = {"(1,6](2,7](3](4](7](8]"};
    } else if (k == 3) {
      check.documented = {"(1,7](2,8](2](3](4](5]", "(1,8](2,7](2](3](4](5]"};
    }

    std::vector<PartialPerm> matched;
    for (auto const& [number, text] : raw.lines) {
      try {
        PartialPerm a = parse(text, raw.degree);
        if (s.contains(a)) {
          matched.push_back(a);
          continue;
        }
        check.flagged.push_back({text, "not an element of the regenerated semigroup",
                                 std::nullopt});
      } catch (ParseError const& e) {
        check.flagged.push_back({text, e.what(), std::nullopt});
      }
    }
    std::sort(matched.begin(), matched.end());
    for (auto const& a : s) {
      if (!std::binary_search(matched.begin(), matched.end(), a)) {
        check.unmatched.push_back(a);
      }
    }
    for (auto& f : check.flagged) {
      f.likely_intended = closest(lenient_arrows(f.line), check.unmatched);
    }
    return check;
  }

}  // namespace semitrans
