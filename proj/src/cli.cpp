#include "semitrans/cli.hpp"

#include <algorithm>  // for reverse
#include <fstream>    // for ifstream, ofstream
#include <iostream>   // for istream, ostream
#include <sstream>    // for ostringstream

#include "CLI11.hpp"
#include "json.hpp"

#include "semitrans/constructors.hpp"
#include "semitrans/error.hpp"
#include "semitrans/io.hpp"
#include "semitrans/report.hpp"
#include "semitrans/search.hpp"

namespace semitrans {

  namespace {
    // Exit code carried out of a subcommand.
    struct Exit {
      int code;
    };

    Semigroup read_input(std::string const& path, std::istream& in) {
      if (path.empty() || path == "-") {
        return read_semigroup_file(in);
      }
      return read_semigroup_file(path);
    }

    std::size_t max_point(std::string const& text) {
      std::size_t best = 0, cur = 0;
      for (char c : text + " ") {
        if (c >= '0' && c <= '9') {
          cur = cur * 10 + static_cast<std::size_t>(c - '0');
        } else {
          best = std::max(best, cur);
          cur  = 0;
        }
      }
      return best;
    }

    // Generators given in cycle notation; the carrier is the union of the
    // points they move.
    RegularGroup parse_group(std::vector<std::string> const& lines) {
      std::size_t degree = 0;
      for (auto const& line : lines) {
        degree = std::max(degree, max_point(line));
      }
      if (degree == 0) {
        throw ParseError("empty group description");
      }
      std::vector<PartialPerm> gens;
      std::uint64_t            carrier_mask = 0;
      for (auto const& line : lines) {
        PartialPerm a = parse(line, degree);
        if (a.domain_mask() != a.image_mask()) {
          throw ParseError("group generator " + line + " is not a permutation");
        }
        carrier_mask |= a.domain_mask();
        gens.push_back(a);
      }
      std::vector<point_type> carrier;
      for (point_type x = 1; x <= degree; ++x) {
        if ((carrier_mask >> (x - 1)) & 1) {
          carrier.push_back(x);
        }
      }
      return RegularGroup::generated_by(carrier, gens);
    }

    RegularGroup read_group_file(std::string const& path) {
      std::ifstream f(path);
      if (!f) {
        throw ParseError("cannot open " + path);
      }
      std::vector<std::string> lines;
      std::string              line;
      while (std::getline(f, line)) {
        auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') {
          continue;
        }
        lines.push_back(line.substr(b));
      }
      return parse_group(lines);
    }

    struct BuildOptions {
      std::string type;
      std::size_t n = 0;
      std::size_t p = 0;
      std::size_t l = 0;
      std::size_t m = 0;
      std::string group;
      std::string group_file;
      std::string partition;
      std::string out;
    };

    int run_build(BuildOptions const& o, std::ostream& out) {
      std::optional<RegularGroup> group;
      if (!o.group.empty()) {
        group = parse_group({o.group});
      } else if (!o.group_file.empty()) {
        group = read_group_file(o.group_file);
      }
      std::optional<Partition> partition;
      if (!o.partition.empty()) {
        partition = parse_partition(o.partition);
      }

      std::optional<Semigroup> s;
      std::string              comment;
      if (o.type == "ref") {
        if (o.p == 0 || o.n % o.p != 0) {
          throw Error("p must divide n");
        }
        std::size_t const l = o.n / o.p;
        if ((o.l != 0 && o.l != l) || (o.m != 0 && o.m != l)) {
          throw Error("the reference construction has n / p = "
                      + std::to_string(l) + " parts");
        }
        Partition parts = partition.value_or(Partition{});
        if (!partition) {
          point_type next = 1;
          parts.resize(l);
          for (auto& part : parts) {
            for (std::size_t i = 0; i < o.p; ++i) {
              part.push_back(next++);
            }
          }
        }
        if (parts.empty()) {
          throw Error("empty partition");
        }
        std::vector<point_type> first = parts.front();
        std::sort(first.begin(), first.end());
        RegularGroup g = group ? group->transported(first, o.n)
                               : RegularGroup::cyclic(first, o.n);
        s              = reference_chain(g, parts);
        comment        = "reference chain (n=" + std::to_string(o.n)
                  + ",p=" + std::to_string(o.p) + ")";
      } else {
        int family = 0;
        if (o.type.size() == 1 && o.type[0] >= '1' && o.type[0] <= '5') {
          family = o.type[0] - '0';
        } else {
          throw Error("--type must be 1..5 or ref");
        }
        TypeParams params = make_params(family, o.n, o.p, o.l);
        if (o.m != 0 && o.m != params.m) {
          throw Error("--m " + std::to_string(o.m) + " is inconsistent with "
                      + label(params));
        }
        params.group     = group;
        params.partition = partition;
        s                = build(params);
        comment          = label(params);
      }
      if (o.out.empty() || o.out == "-") {
        write_semigroup_file(out, *s, comment);
      } else {
        std::ofstream f(o.out);
        if (!f) {
          throw ParseError("cannot write " + o.out);
        }
        write_semigroup_file(f, *s, comment);
      }
      return 0;
    }

    struct AnalyzeOptions {
      std::string                file;
      bool                       json = false;
      bool                       expect_semitransitive = false;
      bool                       expect_audits_pass = false;
      std::optional<std::size_t> expect_size;
    };

    int run_analyze(AnalyzeOptions const& o,
                    std::ostream&         out,
                    std::ostream&         err,
                    std::istream&         in) {
      Semigroup const      s = read_input(o.file, in);
      AnalysisReport const r = analyze(s);
      if (o.json) {
        out << to_json(r) << '\n';
      } else {
        print_text(out, r);
      }
      int code = 0;
      if (o.expect_semitransitive && !r.is_semitransitive) {
        err << "expectation failed: not semitransitive\n";
        code = 1;
      }
      if (o.expect_size && r.size != *o.expect_size) {
        err << "expectation failed: size " << r.size << ", expected "
            << *o.expect_size << '\n';
        code = 1;
      }
      if (o.expect_audits_pass && !all_pass(r.audits)) {
        err << "expectation failed: not every audit passes\n";
        code = 1;
      }
      return code;
    }

    int run_verify_example(int k, bool print, std::ostream& out) {
      if (k < 1 || k > 3) {
        throw ParseError("there are examples 1, 2 and 3 only");
      }
      ExampleCheck const c = build_example(k);
      out << "example " << k << ": " << c.semigroup.size()
          << " elements regenerated\n";
      for (auto const& f : c.flagged) {
        bool const documented = std::find(c.documented.begin(),
                                          c.documented.end(),
                                          f.line)
                                != c.documented.end();
        out << "flagged " << f.line << ": " << f.problem;
        if (f.likely_intended) {
          out << "; likely " << to_string(*f.likely_intended);
        }
        out << (documented ? " (documented)" : " (undocumented)") << '\n';
      }
      for (auto const& a : c.unmatched) {
        out << "missing from transcription: " << to_string(a) << '\n';
      }
      bool const ok = c.confined_to_documented();
      out << "diff confined to documented lines: " << (ok ? "yes" : "no")
          << '\n';
      if (print) {
        write_semigroup_file(out, c.semigroup, "example " + std::to_string(k));
      }
      return ok ? 0 : 1;
    }

    struct SearchOptions {
      std::size_t   n = 2;
      std::size_t   max_size = 0;
      std::string   prune = "lemmas";
      bool          classify = false;
      std::size_t   threads = 1;
      bool          no_symmetry = false;
      std::uint64_t max_nodes = 0;
      bool          allow_large = false;
      bool          json = false;
      bool          progress = false;
      std::vector<std::string> group_files;
    };

    int run_search(SearchOptions const& o, std::ostream& out, std::ostream& err) {
      SearchConfig config;
      config.n = o.n;
      if (o.max_size != 0) {
        config.max_size = o.max_size;
      }
      if (o.prune == "none") {
        config.prune = PruneMode::none;
      } else if (o.prune == "lemmas") {
        config.prune = PruneMode::lemmas;
      } else {
        throw ParseError("--prune must be lemmas or none");
      }
      config.symmetry_breaking = !o.no_symmetry;
      config.threads           = o.threads;
      config.max_nodes         = o.max_nodes;
      config.allow_large       = o.allow_large;
      config.classify          = o.classify;
      for (auto const& f : o.group_files) {
        config.extra_groups.push_back(read_group_file(f));
      }
      if (o.progress) {
        config.progress = [&err](SearchProgress const& p) {
          err << "level " << p.level << ": expanded " << p.nodes_expanded
              << ", frontier " << p.frontier << ", pruned " << p.pruned_size
              << "/" << p.pruned_budget << "/" << p.pruned_idempotents
              << ", limit " << p.max_size << '\n';
        };
      }
      SearchResult const r = minimal_search(config);

      bool unclassified = false;
      for (auto const& c : r.classifications) {
        unclassified = unclassified || c.empty();
      }
      if (o.json) {
        nlohmann::json j;
        j["n"]        = r.n;
        j["complete"] = r.complete;
        j["bound"]    = size_lower_bound(r.n);
        j["minimal_cardinality"]
            = r.minimal_cardinality ? nlohmann::json(*r.minimal_cardinality)
                                    : nullptr;
        nlohmann::json reps = nlohmann::json::array();
        for (std::size_t i = 0; i < r.representatives.size(); ++i) {
          nlohmann::json rep;
          std::vector<std::string> elements;
          for (auto const& a : r.representatives[i]) {
            elements.push_back(to_string(a));
          }
          rep["elements"] = elements;
          if (o.classify) {
            std::vector<std::string> labels;
            for (auto const& m : r.classifications[i]) {
              labels.push_back(m.label);
            }
            rep["matches"] = labels;
          }
          reps.push_back(rep);
        }
        j["representatives"] = reps;
        j["stats"]           = {{"nodes_expanded", r.stats.nodes_expanded},
                                {"closed_sets_seen", r.stats.closed_sets_seen},
                                {"pruned_size", r.stats.pruned_size},
                                {"pruned_budget", r.stats.pruned_budget},
                                {"pruned_idempotents", r.stats.pruned_idempotents}};
        out << j.dump(2) << '\n';
      } else {
        if (r.minimal_cardinality) {
          out << "minimum " << *r.minimal_cardinality << " with "
              << r.representatives.size() << " similarity class"
              << (r.representatives.size() == 1 ? "" : "es") << '\n';
        } else {
          out << "no semitransitive subsemigroup within the size limit\n";
        }
        out << "bound " << size_lower_bound(r.n) << " (p="
            << greatest_proper_divisor(r.n) << ")\n";
        for (std::size_t i = 0; i < r.representatives.size(); ++i) {
          out << "class " << i + 1 << ":";
          for (auto const& a : r.representatives[i]) {
            out << ' ' << to_string(a);
          }
          out << '\n';
          if (o.classify) {
            out << "  matches:";
            if (r.classifications[i].empty()) {
              out << " unclassified";
            }
            for (auto const& m : r.classifications[i]) {
              out << ' ' << m.label;
            }
            out << '\n';
          }
        }
        out << "expanded " << r.stats.nodes_expanded << " closed sets in "
            << r.stats.seconds << " s" << (r.complete ? "" : " (incomplete)")
            << '\n';
      }
      if (!r.complete) {
        err << "search stopped at the node limit\n";
        return 1;
      }
      if (!r.minimal_cardinality || unclassified) {
        return 1;
      }
      return 0;
    }

    int run_similar(std::string const& a, std::string const& b, std::ostream& out) {
      std::istringstream none;
      Semigroup const    sa = read_input(a, none);
      Semigroup const    sb = read_input(b, none);
      if (auto sigma = are_similar(sa, sb)) {
        out << to_string(*sigma) << '\n';
      } else {
        out << "not similar\n";
      }
      return 0;
    }

    int run_sweep(std::size_t lo, std::size_t hi, bool quiet, std::ostream& out) {
      SweepReport const r = verify_bound_sweep(lo, hi);
      for (auto const& e : r.entries) {
        if (quiet && e.ok()) {
          continue;
        }
        out << e.label << ": size " << e.size;
        if (e.ok()) {
          out << " ok\n";
          continue;
        }
        for (auto const& f : e.failures) {
          out << "; " << f;
        }
        out << '\n';
      }
      for (auto n : r.minimum_mismatches) {
        out << "n=" << n << ": least size differs from the bound "
            << size_lower_bound(n) << '\n';
      }
      out << r.entries.size() << " instances, " << (r.ok() ? "all ok" : "FAILED")
          << '\n';
      return r.ok() ? 0 : 1;
    }
  }  // namespace

  int cli_main(std::vector<std::string> const& args,
               std::ostream&                   out,
               std::ostream&                   err,
               std::istream&                   in) {
    CLI::App app{"Semitransitive subsemigroups of the singular part of I_n",
                 "semitrans"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    std::function<int()> action;

    BuildOptions bo;
    auto*        build_cmd = app.add_subcommand("build", "Build a family instance");
    build_cmd->add_option("--type", bo.type, "1..5 or ref")->required();
    build_cmd->add_option("--n", bo.n, "Degree")->required();
    build_cmd->add_option("--p", bo.p, "Block unit, a proper divisor of n")
        ->required();
    build_cmd->add_option("--l", bo.l, "Parts per block (families 4 and 5)");
    build_cmd->add_option("--m", bo.m, "Number of blocks, checked if given");
    auto* group_opt
        = build_cmd->add_option("--group", bo.group, "Generator such as (3,5,4,6)");
    build_cmd->add_option("--group-file", bo.group_file, "One generator per line")
        ->excludes(group_opt);
    build_cmd->add_option("--partition", bo.partition, "Parts such as 1,2|3,4");
    build_cmd->add_option("--out", bo.out, "Output file (default stdout)");
    build_cmd->callback([&] { action = [&] { return run_build(bo, out); }; });

    AnalyzeOptions ao;
    std::size_t    expect_size = 0;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyse a semigroup file");
    analyze_cmd->add_option("file", ao.file, "Semigroup file, - for stdin");
    analyze_cmd->add_flag("--json", ao.json, "Machine-readable report");
    analyze_cmd->add_flag("--expect-semitransitive", ao.expect_semitransitive);
    auto* size_opt = analyze_cmd->add_option("--expect-size", expect_size);
    analyze_cmd->add_flag("--expect-audits-pass", ao.expect_audits_pass);
    analyze_cmd->callback([&] {
      if (size_opt->count() > 0) {
        ao.expect_size = expect_size;
      }
      action = [&] { return run_analyze(ao, out, err, in); };
    });

    int   example = 0;
    bool  print   = false;
    auto* verify_cmd
        = app.add_subcommand("verify-example", "Regenerate and diff a worked example");
    verify_cmd->add_option("k", example, "1, 2 or 3")->required();
    verify_cmd->add_flag("--print", print, "Also print the regenerated semigroup");
    verify_cmd->callback(
        [&] { action = [&] { return run_verify_example(example, print, out); }; });

    SearchOptions so;
    auto* search_cmd = app.add_subcommand("search", "Exhaustive minimality search");
    search_cmd->add_option("--n", so.n, "Degree")->required();
    search_cmd->add_option("--max-size", so.max_size, "Size limit (default bound)");
    search_cmd->add_option("--prune", so.prune, "lemmas or none");
    search_cmd->add_flag("--classify", so.classify, "Classify representatives");
    search_cmd->add_option("--threads", so.threads, "Worker threads");
    search_cmd->add_flag("--no-symmetry", so.no_symmetry, "Keep all relabelings");
    search_cmd->add_option("--max-nodes", so.max_nodes, "Node limit, 0 for none");
    search_cmd->add_flag("--allow-large", so.allow_large, "Permit n = 5, 6");
    search_cmd->add_flag("--json", so.json, "Machine-readable result");
    search_cmd->add_flag("--progress", so.progress, "Progress on stderr");
    search_cmd->add_option("--group-file",
                           so.group_files,
                           "Extra regular group for classification");
    search_cmd->callback([&] { action = [&] { return run_search(so, out, err); }; });

    std::string a, b;
    auto*       similar_cmd
        = app.add_subcommand("similar", "Find a relabeling between two files");
    similar_cmd->add_option("file1", a)->required();
    similar_cmd->add_option("file2", b)->required();
    similar_cmd->callback([&] { action = [&] { return run_similar(a, b, out); }; });

    std::size_t bound_n = 0;
    auto*       bound_cmd = app.add_subcommand("bound", "Print gpd(n) and the bound");
    bound_cmd->add_option("--n", bound_n, "Degree")->required();
    bound_cmd->callback([&] {
      action = [&] {
        out << "p=" << greatest_proper_divisor(bound_n)
            << " bound=" << size_lower_bound(bound_n) << '\n';
        return 0;
      };
    });

    std::size_t lo = 2, hi = 20;
    bool        quiet = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Build and check every family instance");
    sweep_cmd->add_option("--from", lo, "Least n");
    sweep_cmd->add_option("--to", hi, "Greatest n");
    sweep_cmd->add_flag("--quiet", quiet, "Print failures only");
    sweep_cmd->callback([&] { action = [&] { return run_sweep(lo, hi, quiet, out); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }
    try {
      return action();
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
  }

}  // namespace semitrans
