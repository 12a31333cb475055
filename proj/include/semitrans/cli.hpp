#ifndef SEMITRANS_CLI_HPP_
#define SEMITRANS_CLI_HPP_

#include <iosfwd>  // for istream, ostream
#include <string>  // for string
#include <vector>  // for vector

namespace semitrans {

  // Exit codes: 0 success, 1 a stated expectation or check failed, 2 bad
  // input.  args excludes the program name.
  int cli_main(std::vector<std::string> const& args,
               std::ostream&                   out,
               std::ostream&                   err,
               std::istream&                   in);

}  // namespace semitrans

#endif  // SEMITRANS_CLI_HPP_
