#ifndef SEMITRANS_REPORT_HPP_
#define SEMITRANS_REPORT_HPP_

// Summary of a semigroup file for the command line and the Python module.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <string>    // for string
#include <vector>    // for vector

#include "semitrans/analysis.hpp"
#include "semitrans/semigroup.hpp"

namespace semitrans {

  struct AnalysisReport {
    std::size_t n = 0;
    std::size_t size = 0;
    bool        is_closed = false;
    bool        is_singular = false;
    bool        is_semitransitive = false;
    bool        is_transitive = false;
    // Empty unless semitransitive.
    std::vector<std::vector<point_type>> blocks;
    std::vector<std::string>             idempotents;  // non-zero ones
    bool                                 has_zero = false;
    // |N| when there are exactly two non-zero idempotents and S is
    // semitransitive.
    std::optional<std::size_t> nilpotents;
    std::size_t                gpd = 0;
    std::size_t                bound = 0;
    std::vector<AuditResult>   audits;
  };

  AnalysisReport analyze(Semigroup const& s);

  // Pretty-printed JSON with sorted keys.
  std::string to_json(AnalysisReport const& report);

  void print_text(std::ostream& out, AnalysisReport const& report);

}  // namespace semitrans

#endif  // SEMITRANS_REPORT_HPP_
