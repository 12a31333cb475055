#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>

#include "semitrans/analysis.hpp"
#include "semitrans/constructors.hpp"
#include "semitrans/error.hpp"
#include "semitrans/io.hpp"
#include "semitrans/report.hpp"
#include "semitrans/search.hpp"

namespace py = pybind11;
using namespace semitrans;

namespace {
  std::vector<std::string> strings(Semigroup const& s) {
    std::vector<std::string> out;
    for (auto const& a : s) {
      out.push_back(to_string(a));
    }
    return out;
  }

  py::object loads(std::string const& text) {
    return py::module_::import("json").attr("loads")(text);
  }
}  // namespace

PYBIND11_MODULE(semitrans, m) {
  m.doc() = "Semitransitive subsemigroups of the singular part of I_n";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<PartialPerm>(m, "PartialPerm")
      .def(py::init([](std::string const& text, std::size_t n) { return parse(text, n); }),
           py::arg("text"),
           py::arg("n"))
      .def_static("identity", &PartialPerm::identity)
      .def_static("zero", [](std::size_t n) { return PartialPerm(n); })
      .def_property_readonly("degree", &PartialPerm::degree)
      .def_property_readonly("rank", &PartialPerm::rank)
      .def("domain", &PartialPerm::domain)
      .def("image", &PartialPerm::image)
      .def("__call__", &PartialPerm::operator())
      .def("inverse", [](PartialPerm const& a) { return inverse(a); })
      .def("is_idempotent", [](PartialPerm const& a) { return is_idempotent(a); })
      .def("is_nilpotent", [](PartialPerm const& a) { return is_nilpotent(a); })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__hash__", [](PartialPerm const& a) { return PartialPermHash{}(a); })
      .def("__str__", [](PartialPerm const& a) { return to_string(a); })
      .def("__repr__", [](PartialPerm const& a) {
        return "PartialPerm('" + to_string(a) + "', " + std::to_string(a.degree()) + ")";
      });

  py::class_<Semigroup>(m, "Semigroup")
      .def_static(
          "closure",
          [](std::vector<PartialPerm> const& gens) { return Semigroup::closure(gens); },
          py::arg("generators"))
      .def_static(
          "from_text",
          [](std::string const& text) {
            std::istringstream in(text);
            return read_semigroup_file(in);
          },
          py::arg("text"))
      .def_static(
          "load",
          [](std::string const& path) { return read_semigroup_file(path); },
          py::arg("path"))
      .def("to_text",
           [](Semigroup const& s) {
             std::ostringstream out;
             write_semigroup_file(out, s);
             return out.str();
           })
      .def_property_readonly("degree", &Semigroup::degree)
      .def_property_readonly("is_closed", &Semigroup::is_closed)
      .def("elements",
           [](Semigroup const& s) { return std::vector<PartialPerm>(s.begin(), s.end()); })
      .def("strings", &strings)
      .def("__len__", &Semigroup::size)
      .def("__contains__", &Semigroup::contains)
      .def(py::self == py::self)
      .def("conjugate", [](Semigroup const& s, PartialPerm const& p) { return conjugate(s, p); })
      .def("inverse", [](Semigroup const& s) { return inverse(s); });

  m.def("analyze",
        [](Semigroup const& s) { return loads(to_json(analyze(s))); },
        py::arg("s"),
        "Full report as a dict: blocks, idempotents, audits and the bound.");
  m.def("is_semitransitive", [](Semigroup const& s) { return is_semitransitive(s); });
  m.def("is_transitive", [](Semigroup const& s) { return is_transitive(s); });
  m.def("is_singular", [](Semigroup const& s) { return is_singular(s); });
  m.def("blocks", [](Semigroup const& s) { return blocks(s).blocks; });
  m.def("are_similar",
        [](Semigroup const& a, Semigroup const& b) { return are_similar(a, b); },
        "A relabeling taking the first to the second, or None.");

  m.def("gpd", &greatest_proper_divisor, py::arg("n"));
  m.def("bound", &size_lower_bound, py::arg("n"));

  m.def(
      "build",
      [](int family,
         std::size_t n,
         std::size_t p,
         std::size_t l,
         std::optional<std::vector<std::string>> group) {
        TypeParams params = make_params(family, n, p, l);
        if (group) {
          std::vector<PartialPerm> gens;
          std::set<point_type>     carrier;
          for (auto const& g : *group) {
            gens.push_back(parse(g, n));
            for (auto x : gens.back().domain()) {
              carrier.insert(x);
            }
          }
          params.group = RegularGroup::generated_by({carrier.begin(), carrier.end()}, gens);
        }
        return build(params);
      },
      py::arg("family"),
      py::arg("n"),
      py::arg("p"),
      py::arg("l") = 0,
      py::arg("group") = py::none(),
      "Build a Type 1..5 instance of size 2n - p + 1.");
  m.def("reference_chain",
        py::overload_cast<std::size_t, std::size_t>(&reference_chain),
        py::arg("n"),
        py::arg("p"));
  m.def(
      "build_example",
      [](int k) {
        auto       c = build_example(k);
        py::list   flagged;
        for (auto const& f : c.flagged) {
          py::dict d;
          d["line"]    = f.line;
          d["problem"] = f.problem;
          d["likely_intended"]
              = f.likely_intended ? py::object(py::str(to_string(*f.likely_intended)))
                                  : py::object(py::none());
          flagged.append(d);
        }
        py::dict out;
        out["semigroup"]        = c.semigroup;
        out["flagged"]          = flagged;
        out["confined"]         = c.confined_to_documented();
        return out;
      },
      py::arg("k"));

  m.def(
      "minimal_search",
      [](std::size_t n,
         std::optional<std::size_t> max_size,
         std::string const& prune,
         bool symmetry_breaking,
         std::size_t threads,
         bool classify,
         bool allow_large) {
        SearchConfig c;
        c.n                 = n;
        c.max_size          = max_size;
        c.symmetry_breaking = symmetry_breaking;
        c.threads           = threads;
        c.classify          = classify;
        c.allow_large       = allow_large;
        if (prune == "none") {
          c.prune = PruneMode::none;
        } else if (prune != "lemmas") {
          throw Error("prune must be lemmas or none");
        }
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = minimal_search(c);
        }
        py::list classes;
        for (std::size_t i = 0; i < r.representatives.size(); ++i) {
          py::dict d;
          d["semigroup"] = r.representatives[i];
          py::list labels;
          if (i < r.classifications.size()) {
            for (auto const& match : r.classifications[i]) {
              labels.append(match.label);
            }
          }
          d["matches"] = labels;
          classes.append(d);
        }
        py::dict out;
        out["n"]                   = r.n;
        out["complete"]            = r.complete;
        out["minimal_cardinality"] = r.minimal_cardinality;
        out["classes"]             = classes;
        out["nodes_expanded"]      = r.stats.nodes_expanded;
        return out;
      },
      py::arg("n"),
      py::arg("max_size")          = py::none(),
      py::arg("prune")             = "lemmas",
      py::arg("symmetry_breaking") = true,
      py::arg("threads")           = 1,
      py::arg("classify")          = false,
      py::arg("allow_large")       = false);

  m.def(
      "sweep",
      [](std::size_t lo, std::size_t hi) {
        auto     r = verify_bound_sweep(lo, hi);
        py::list failures;
        for (auto const& e : r.entries) {
          if (!e.ok()) {
            failures.append(py::make_tuple(e.label, e.failures));
          }
        }
        py::dict out;
        out["instances"] = r.entries.size();
        out["ok"]        = r.ok();
        out["failures"]  = failures;
        return out;
      },
      py::arg("lo") = 2,
      py::arg("hi") = 20);
}
