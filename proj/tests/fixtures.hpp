#ifndef SEMITRANS_TESTS_FIXTURES_HPP_
#define SEMITRANS_TESTS_FIXTURES_HPP_

#include <sstream>
#include <string>

#include "semitrans/io.hpp"
#include "semitrans/pperm.hpp"
#include "semitrans/semigroup.hpp"

namespace fixtures {

  inline semitrans::Semigroup from_text(std::string const& text) {
    std::istringstream in(text);
    return semitrans::read_semigroup_file(in);
  }

  inline semitrans::PartialPerm pp(std::string const& text, std::size_t n) {
    return semitrans::parse(text, n);
  }

  // The worked examples as listed, with the malformed lines replaced by the
  // elements they stand for.
  inline std::string const example1 = R"(n=8
(1)(2)(3](4](5](6](7](8]
(1,2)(3](4](5](6](7](8]
(1](2](3)(4)(5)(6)(7)(8)
(1](2](3,5,7](4,6,8]
(1](2](3,7](4,8](5](6]
(1](2](3,4)(5,6)(7,8)
(1](2](3,6,7](4,5,8]
(1](2](3,8](4,7](5](6]
(1,3](2,4](5](6](7](8]
(1,5](2,6](3](4](7](8]
(1,7](2,8](3](4](5](6]
(1,4](2,3](5](6](7](8]
(1,6](2,5](3](4](7](8]
(1,8](2,7](3](4](5](6]
0
)";

  inline std::string const example2 = R"(n=10
(1)(2)(3](4](5](6](7](8](9](10]
(1,2)(3](4](5](6](7](8](9](10]
(1](2](3)(4)(5)(6)(7)(8)(9)(10)
(1](2](3,5,4,6)(7,9,8,10)
(1](2](3,4)(5,6)(7,8)(9,10)
(1](2](3,6,4,5)(7,10,8,9)
(1](2](3,7](4,8](5,9](6,10]
(1](2](3,9](4,10](5,8](6,7]
(1](2](3,8](4,7](5,10](6,9]
(1](2](3,10](4,9](5,7](6,8]
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

  inline std::string const example3 = R"(n=8
(1)(2)(5)(6)(3](4](7](8]
(1,2)(5,6)(3](4](7](8]
(1,5](2,6](3](4](7](8]
(1,6](2,5](3](4](7](8]
(3)(4)(7)(8)(1](2](5](6]
(3,4)(7,8)(1](2](5](6]
(3,7](4,8](1](2](5](6]
(3,8](4,7](1](2](5](6]
(1,3](2,4](5,7](6,8]
(1,4](2,3](5,8](6,7]
(1,7](2,8](3](4](5](6]
(1,8](2,7](3](4](5](6]
(3,5](4,6](1](2](7](8]
(3,6](4,5](1](2](7](8]
0
)";

}  // namespace fixtures

#endif  // SEMITRANS_TESTS_FIXTURES_HPP_
