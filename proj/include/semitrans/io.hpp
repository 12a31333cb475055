#ifndef SEMITRANS_IO_HPP_
#define SEMITRANS_IO_HPP_

// Semigroup files: a header line "n=<N>", then one element per line in
// chain-cycle notation (or "0"); lines starting with '#' and blank lines are
// ignored.

#include <cstddef>      // for size_t
#include <istream>      // for istream
#include <ostream>      // for ostream
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "semitrans/semigroup.hpp"

namespace semitrans {

  struct SemigroupFileLine {
    std::size_t number;  // 1-based line number in the file
    std::string text;
  };

  // Header and comments resolved, element lines left unparsed.
  struct RawSemigroupFile {
    std::size_t                    degree = 0;
    std::vector<SemigroupFileLine> lines;
  };

  RawSemigroupFile read_raw_semigroup_file(std::istream& in);

  // Throws ParseError (with the line number) on malformed elements and on
  // duplicates.  The result is not required to be closed.
  Semigroup read_semigroup_file(std::istream& in);
  Semigroup read_semigroup_file(std::string const& path);

  // Elements in sorted order, one per line, in canonical notation.
  void write_semigroup_file(std::ostream&    out,
                            Semigroup const& s,
                            std::string_view comment = {});

}  // namespace semitrans

#endif  // SEMITRANS_IO_HPP_
