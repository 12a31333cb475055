#include "semitrans/report.hpp"

#include "json.hpp"

#include "semitrans/constructors.hpp"

namespace semitrans {

  AnalysisReport analyze(Semigroup const& s) {
    AnalysisReport r;
    r.n                 = s.degree();
    r.size              = s.size();
    r.is_closed         = s.is_closed();
    r.is_singular       = is_singular(s);
    r.is_semitransitive = is_semitransitive(s);
    r.is_transitive     = is_transitive(s);
    auto profile        = idempotent_profile(s);
    for (auto const& e : profile.nonzero_idempotents) {
      r.idempotents.push_back(to_string(e));
    }
    r.has_zero = profile.has_zero;
    if (r.is_semitransitive) {
      BlockStructure const bs = blocks(s);
      r.blocks                = bs.blocks;
      if (auto gh = idempotent_pair(s)) {
        r.nilpotents = nilpotent_partition(s, gh->g, gh->h, bs).n.size();
      }
    }
    if (r.n >= 2) {
      r.gpd   = greatest_proper_divisor(r.n);
      r.bound = size_lower_bound(r.n);
    }
    r.audits = audit_all(s);
    return r;
  }

  std::string to_json(AnalysisReport const& r) {
    nlohmann::json j;
    j["n"]                 = r.n;
    j["size"]              = r.size;
    j["is_closed"]         = r.is_closed;
    j["is_singular"]       = r.is_singular;
    j["is_semitransitive"] = r.is_semitransitive;
    j["is_transitive"]     = r.is_transitive;
    j["blocks"]            = r.blocks;
    std::vector<std::size_t> sizes;
    for (auto const& b : r.blocks) {
      sizes.push_back(b.size());
    }
    j["block_sizes"] = sizes;
    j["idempotents"] = r.idempotents;
    j["has_zero"]    = r.has_zero;
    j["nilpotents"]  = r.nilpotents ? nlohmann::json(*r.nilpotents) : nullptr;
    j["gpd"]         = r.gpd;
    j["bound"]       = r.bound;
    nlohmann::json audits = nlohmann::json::object();
    for (auto const& a : r.audits) {
      audits[a.name] = {{"status", to_string(a.status())},
                        {"hypothesis", a.hypothesis_holds},
                        {"conclusion", a.conclusion_holds},
                        {"witnesses", a.witnesses}};
    }
    j["audits"] = audits;
    return j.dump(2);
  }

  namespace {
    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }
  }  // namespace

  void print_text(std::ostream& out, AnalysisReport const& r) {
    out << "n: " << r.n << '\n'
        << "size: " << r.size << '\n'
        << "closed: " << yes_no(r.is_closed) << '\n'
        << "singular: " << yes_no(r.is_singular) << '\n'
        << "semitransitive: " << yes_no(r.is_semitransitive) << '\n'
        << "transitive: " << yes_no(r.is_transitive) << '\n';
    if (!r.blocks.empty()) {
      out << "blocks:";
      for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        out << (i ? " > {" : " {");
        for (std::size_t j = 0; j < r.blocks[i].size(); ++j) {
          out << (j ? "," : "") << r.blocks[i][j];
        }
        out << '}';
      }
      out << '\n';
    }
    out << "idempotents:";
    for (auto const& e : r.idempotents) {
      out << ' ' << e;
    }
    out << (r.has_zero ? " 0" : "") << '\n';
    if (r.nilpotents) {
      out << "nilpotents: " << *r.nilpotents << '\n';
    }
    if (r.n >= 2) {
      out << "bound: " << r.bound << " (p=" << r.gpd << ")\n";
    }
    for (auto const& a : r.audits) {
      out << "audit " << a.name << ": " << to_string(a.status());
      if (a.status() == AuditStatus::fail && !a.witnesses.empty()) {
        out << " (" << a.witnesses.front();
        if (a.witnesses.size() > 1) {
          out << " and " << a.witnesses.size() - 1 << " more";
        }
        out << ')';
      }
      out << '\n';
    }
  }

}  // namespace semitrans
