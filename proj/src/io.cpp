#include "semitrans/io.hpp"

#include <fstream>        // for ifstream
#include <unordered_set>  // for unordered_set

#include "semitrans/error.hpp"
#include "semitrans/pperm.hpp"

namespace semitrans {

  namespace {
    std::string trim(std::string const& s) {
      auto b = s.find_first_not_of(" \t\r\n");
      if (b == std::string::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r\n");
      return s.substr(b, e - b + 1);
    }
  }  // namespace

  RawSemigroupFile read_raw_semigroup_file(std::istream& in) {
    RawSemigroupFile file;
    bool             have_header = false;
    std::string      line;
    std::size_t      number = 0;
    while (std::getline(in, line)) {
      ++number;
      std::string text = trim(line);
      if (text.empty() || text.front() == '#') {
        continue;
      }
      if (!have_header) {
        if (text.rfind("n=", 0) != 0) {
          throw ParseError("line " + std::to_string(number)
                           + ": expected header \"n=<N>\"");
        }
        std::string digits = trim(text.substr(2));
        if (digits.empty()
            || digits.find_first_not_of("0123456789") != std::string::npos
            || digits.size() > 3) {
          throw ParseError("line " + std::to_string(number)
                           + ": malformed degree \"" + digits + "\"");
        }
        file.degree = std::stoul(digits);
        if (file.degree < 1 || file.degree > PartialPerm::max_degree) {
          throw ParseError("line " + std::to_string(number) + ": degree "
                           + digits + " outside 1.."
                           + std::to_string(PartialPerm::max_degree));
        }
        have_header = true;
        continue;
      }
      file.lines.push_back({number, text});
    }
    if (!have_header) {
      throw ParseError("missing header \"n=<N>\"");
    }
    return file;
  }

  Semigroup read_semigroup_file(std::istream& in) {
    RawSemigroupFile                                 raw = read_raw_semigroup_file(in);
    std::vector<PartialPerm>                         elements;
    std::unordered_set<PartialPerm, PartialPermHash> seen;
    for (auto const& [number, text] : raw.lines) {
      PartialPerm a;
      try {
        a = parse(text, raw.degree);
      } catch (ParseError const& e) {
        throw ParseError("line " + std::to_string(number) + ": " + e.what());
      }
      if (!seen.insert(a).second) {
        throw ParseError("line " + std::to_string(number) + ": duplicate element "
                         + to_string(a));
      }
      elements.push_back(a);
    }
    if (elements.empty()) {
      throw ParseError("no elements");
    }
    return Semigroup::unchecked(std::move(elements));
  }

  Semigroup read_semigroup_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    return read_semigroup_file(in);
  }

  void write_semigroup_file(std::ostream&    out,
                            Semigroup const& s,
                            std::string_view comment) {
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    out << "n=" << s.degree() << '\n';
    for (auto const& a : s) {
      out << to_string(a) << '\n';
    }
  }

}  // namespace semitrans
