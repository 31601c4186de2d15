#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "pomo/document.hpp"
#include "pomo/errors.hpp"
#include "pomo/filtration.hpp"
#include "pomo/numbers.hpp"
#include "pomo/reports.hpp"
#include "pomo/search.hpp"

namespace py = pybind11;
using namespace pomo;

namespace {

// reports are nlohmann::json; hand them to python as native objects
py::object to_py(const nlohmann::json& j) {
    auto json_mod = py::module_::import("json");
    return json_mod.attr("loads")(j.dump());
}

MorseFunction function_from_dict(const Poset& X, const py::dict& values) {
    MorseFunction f = MorseFunction::total(X.size());
    for (auto item : values) {
        const std::string id = py::cast<std::string>(item.first);
        std::string literal;
        if (py::isinstance<py::int_>(item.second))
            literal = py::cast<std::string>(py::str(item.second));
        else
            literal = py::cast<std::string>(py::str(item.second));
        f.set(X.index_of(id), parse_rational(literal));
    }
    return f;
}

py::dict function_to_dict(const Poset& X, const MorseFunction& f) {
    py::dict out;
    for (int i = 0; i < X.size(); ++i)
        if (f.defined(i)) out[py::str(X.name_of(i))] = rational_string(f.at(i));
    return out;
}

Matching matching_from_pairs(const Poset& X,
                             const std::vector<std::pair<std::string, std::string>>& edges) {
    Matching M;
    for (const auto& [a, b] : edges) M.edges.emplace_back(X.index_of(a), X.index_of(b));
    M.canonicalize();
    return M;
}

Mode mode_from_string(const std::string& mode) {
    if (mode == "strict") return Mode::Strict;
    if (mode == "permissive") return Mode::Permissive;
    fail(ErrorKind::ValidationError, "mode must be 'strict' or 'permissive'");
}

std::optional<std::vector<int>> down_set_from(const Poset& X,
                                              const std::optional<std::vector<std::string>>& A) {
    if (!A) return std::nullopt;
    return X.indices_of(*A);
}

py::list homology_to_py(const HomologySummary& h) {
    py::list out;
    for (const auto& g : h.groups) {
        py::dict d;
        d["dim"] = g.dim;
        d["betti"] = g.betti;
        py::list torsion;
        for (const auto& t : g.torsion) torsion.append(integer_string(t));
        d["torsion"] = torsion;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_pomo, m) {
    m.doc() = "Morse matchings on finite posets: order complexes, exact homology, filtrations";

    py::register_exception<Error>(m, "PomoError");

    py::class_<Poset>(m, "Poset")
        .def_static(
            "from_relations",
            [](const std::vector<std::string>& elements,
               const std::vector<std::pair<std::string, std::string>>& pairs) {
                return Poset::from_relations(elements, pairs);
            },
            py::arg("elements"), py::arg("pairs"))
        .def("__len__", &Poset::size)
        .def("elements", &Poset::elements)
        .def("less",
             [](const Poset& X, const std::string& a, const std::string& b) {
                 return X.less(X.index_of(a), X.index_of(b));
             })
        .def("covers",
             [](const Poset& X) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [a, b] : X.cover_pairs())
                     out.emplace_back(X.name_of(a), X.name_of(b));
                 return out;
             })
        .def("relations",
             [](const Poset& X) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [a, b] : X.relation_pairs())
                     out.emplace_back(X.name_of(a), X.name_of(b));
                 return out;
             })
        .def("height", &Poset::height)
        .def("height_of",
             [](const Poset& X, const std::string& id) { return X.height_of(X.index_of(id)); })
        .def("principal_down",
             [](const Poset& X, const std::string& id, bool strict) {
                 return X.names_of(X.principal_down(X.index_of(id), strict));
             },
             py::arg("element"), py::arg("strict") = true)
        .def("is_down_set",
             [](const Poset& X, const std::vector<std::string>& ids) {
                 return X.is_down_set(X.indices_of(ids));
             })
        .def("beat_points",
             [](const Poset& X) {
                 std::vector<std::pair<std::string, std::string>> out;
                 for (const auto& [v, kind] : X.beat_points())
                     out.emplace_back(X.name_of(v),
                                      kind == Poset::BeatKind::Up ? "up" : "down");
                 return out;
             })
        .def("__repr__", [](const Poset& X) {
            return "<Poset with " + std::to_string(X.size()) + " elements>";
        });

    m.def("induced_subposet",
          [](const Poset& X, const std::vector<std::string>& ids) {
              return induced_subposet(X, X.indices_of(ids));
          });
    m.def("opposite", &opposite);
    m.def("join", &join);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_static(
            "from_simplices",
            [](const std::vector<std::string>& vertices,
               const std::vector<std::vector<std::string>>& simplices) {
                std::map<std::string, int> index;
                for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
                    index[vertices[i]] = i;
                std::vector<Simplex> sims;
                for (const auto& s : simplices) {
                    Simplex simplex;
                    for (const auto& v : s) {
                        auto it = index.find(v);
                        if (it == index.end())
                            fail(ErrorKind::UnknownElement, "vertex '" + v + "' not declared");
                        simplex.push_back(it->second);
                    }
                    sims.push_back(std::move(simplex));
                }
                return SimplicialComplex::from_simplices(vertices, sims);
            },
            py::arg("vertices"), py::arg("simplices"))
        .def("__len__", &SimplicialComplex::simplex_count)
        .def("dimension", &SimplicialComplex::dimension)
        .def("euler_characteristic", &SimplicialComplex::euler_characteristic)
        .def("simplices",
             [](const SimplicialComplex& L) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& s : L.all_simplices()) {
                     std::vector<std::string> named;
                     for (int v : s) named.push_back(L.vertex_names()[v]);
                     out.push_back(std::move(named));
                 }
                 return out;
             })
        .def("__repr__", [](const SimplicialComplex& L) {
            return "<SimplicialComplex with " + std::to_string(L.simplex_count()) +
                   " simplices, dim " + std::to_string(L.dimension()) + ">";
        });

    m.def("order_complex", py::overload_cast<const Poset&>(&order_complex));
    m.def("order_complex_of",
          [](const Poset& X, const std::vector<std::string>& ids) {
              return order_complex(X, X.indices_of(ids));
          });
    m.def("cone", &cone, py::arg("apex"), py::arg("base"));
    m.def("face_poset", &face_poset);
    m.def("simplicial_join", &simplicial_join);
    m.def("greedy_collapse", &greedy_collapse);

    m.def("reduced_homology",
          [](const SimplicialComplex& L) { return homology_to_py(reduced_homology(L)); });
    m.def("euler_characteristic",
          [](const SimplicialComplex& L) { return L.euler_characteristic(); });
    m.def("sphere_check",
          [](const SimplicialComplex& L, int n) { return sphere_check(L, n); });
    m.def("h_regular_check", &h_regular_check);
    m.def("triviality_verdict",
          [](const SimplicialComplex& L, long long budget) {
              auto v = triviality_verdict(L, budget);
              py::dict out;
              out["status"] = to_string(v.status);
              out["empty_complex"] = v.empty_complex;
              if (v.witness) {
                  py::dict w;
                  w["dim"] = v.witness->dim;
                  w["betti"] = v.witness->betti;
                  out["witness"] = w;
              }
              return out;
          },
          py::arg("complex"), py::arg("budget") = 100000);

    m.def("height_function",
          [](const Poset& X) { return function_to_dict(X, height_function(X)); });
    m.def("validate_function",
          [](const Poset& X, const py::dict& values) {
              auto f = function_from_dict(X, values);
              auto check = validate_function(X, f);
              py::dict out;
              out["ok"] = check.ok;
              if (check.violation)
                  out["violation"] = py::make_tuple(X.name_of(check.violation->first),
                                                    X.name_of(check.violation->second));
              return out;
          });
    m.def("synthesize_function",
          [](const Poset& X, const std::vector<std::pair<std::string, std::string>>& edges) {
              return function_to_dict(X, synthesize_function(X, matching_from_pairs(X, edges)));
          });

    m.def(
        "validate_matching",
        [](const Poset& X, const py::dict& values,
           const std::vector<std::pair<std::string, std::string>>& edges,
           const std::string& mode, const std::optional<std::vector<std::string>>& down_set,
           long long budget) {
            auto f = function_from_dict(X, values);
            auto rep = validate_matching(X, f, matching_from_pairs(X, edges),
                                         mode_from_string(mode), down_set_from(X, down_set),
                                         budget);
            py::dict out;
            out["accepted"] = rep.accepted;
            out["acyclic"] = rep.acyclic;
            out["critical"] = X.names_of(rep.critical);
            out["reasons"] = rep.reasons;
            out["warnings"] = rep.warnings;
            py::list edge_list;
            for (const auto& er : rep.edges) {
                py::dict e;
                e["x"] = X.name_of(er.edge.first);
                e["y"] = X.name_of(er.edge.second);
                e["condition1"] = to_string(er.condition1.status);
                e["condition2"] = er.condition2;
                e["admissible"] = er.admissible(mode_from_string(mode));
                edge_list.append(e);
            }
            out["edges"] = edge_list;
            return out;
        },
        py::arg("poset"), py::arg("values"), py::arg("matching"), py::arg("mode") = "strict",
        py::arg("down_set") = std::nullopt, py::arg("budget") = 100000);

    m.def(
        "filtration_report",
        [](const Poset& X, const py::dict& values,
           const std::vector<std::pair<std::string, std::string>>& edges,
           const std::optional<std::vector<std::string>>& down_set, long long budget) {
            auto f = function_from_dict(X, values);
            auto M = matching_from_pairs(X, edges);
            auto A = down_set_from(X, down_set);
            auto rep = validate_matching(X, f, M, Mode::Permissive, A, budget);
            if (!rep.accepted)
                fail(ErrorKind::InputNotValidated,
                     rep.reasons.empty() ? "matching rejected" : rep.reasons.front());
            auto trace = removal_trace(X, f, M, A);
            auto F = build_filtration(trace, X, f, M, A);
            auto verify = verify_filtration(F);

            py::dict out;
            out["verified"] = verify.all_ok;
            out["chi"] = verify.chi_total;
            out["chi_base"] = verify.chi_base;
            out["cone_contribution"] = verify.cone_contribution;
            py::list levels;
            for (const auto& level : F.levels) {
                py::dict l;
                l["t"] = rational_string(level.t);
                py::list crit;
                for (const auto& info : level.critical) {
                    py::dict c;
                    c["id"] = X.name_of(info.element);
                    c["link"] = X.names_of(info.link);
                    c["homology"] = homology_to_py(info.link_homology);
                    crit.append(c);
                }
                l["critical"] = crit;
                l["lower"] = X.names_of(level.lower);
                l["upper"] = X.names_of(level.upper);
                levels.append(l);
            }
            out["levels"] = levels;
            return out;
        },
        py::arg("poset"), py::arg("values"), py::arg("matching"),
        py::arg("down_set") = std::nullopt, py::arg("budget") = 100000);

    m.def("greedy_matching",
          [](const Poset& X, const py::dict& values, const std::string& order,
             std::uint64_t seed, const std::string& mode, long long budget) {
              ScanOrder so = order == "lex"    ? ScanOrder::Lex
                             : order == "by_f" ? ScanOrder::ByF
                                               : ScanOrder::Random;
              auto M = greedy_matching(X, function_from_dict(X, values), so, seed,
                                       mode_from_string(mode), budget);
              std::vector<std::pair<std::string, std::string>> out;
              for (const auto& [a, b] : M.edges) out.emplace_back(X.name_of(a), X.name_of(b));
              return out;
          },
          py::arg("poset"), py::arg("values"), py::arg("order") = "lex", py::arg("seed") = 0,
          py::arg("mode") = "strict", py::arg("budget") = 100000);

    auto search_to_py = [](const Poset& X, const SearchResult& r) {
        py::dict out;
        out["critical_count"] = r.critical_count;
        out["certified"] = r.certified;
        out["candidates"] = r.candidates;
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [a, b] : r.best.edges) edges.emplace_back(X.name_of(a), X.name_of(b));
        out["edges"] = edges;
        out["function"] = function_to_dict(X, r.function);
        return out;
    };
    m.def("minimize_critical",
          [search_to_py](const Poset& X, int restarts, std::uint64_t seed,
                         const std::string& mode, long long budget) {
              return search_to_py(X, minimize_critical(X, restarts, seed,
                                                       mode_from_string(mode), budget));
          },
          py::arg("poset"), py::arg("restarts") = 32, py::arg("seed") = 0,
          py::arg("mode") = "strict", py::arg("budget") = 100000);
    m.def("exhaustive_min",
          [search_to_py](const Poset& X, int limit, const std::string& mode, long long budget) {
              return search_to_py(X, exhaustive_min(X, limit, mode_from_string(mode), budget));
          },
          py::arg("poset"), py::arg("limit") = 12, py::arg("mode") = "strict",
          py::arg("budget") = 100000);

    py::class_<PosetDocument>(m, "PosetDocument")
        .def_property_readonly("name", [](const PosetDocument& d) { return d.name; })
        .def_property_readonly("poset", [](const PosetDocument& d) { return d.poset; })
        .def_property_readonly("values",
                               [](const PosetDocument& d) -> py::object {
                                   if (!d.values) return py::none();
                                   return function_to_dict(d.poset, *d.values);
                               })
        .def_property_readonly("matching",
                               [](const PosetDocument& d) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const auto& [a, b] : d.matching.edges)
                                       out.emplace_back(d.poset.name_of(a), d.poset.name_of(b));
                                   return out;
                               })
        .def_property_readonly("down_set",
                               [](const PosetDocument& d) -> py::object {
                                   if (!d.has_down_set) return py::none();
                                   return py::cast(d.poset.names_of(d.down_set));
                               });

    m.def("parse_document", &parse_document, py::arg("text"), py::arg("name") = "<input>");
    m.def("load_document", &load_document);
    m.def("serialize", &serialize);

    m.def(
        "run",
        [](const std::string& command, const std::string& text, const py::kwargs& kwargs) {
            CommandOptions opt;
            if (kwargs.contains("mode"))
                opt.mode = mode_from_string(py::cast<std::string>(kwargs["mode"]));
            if (kwargs.contains("budget")) opt.budget = py::cast<long long>(kwargs["budget"]);
            if (kwargs.contains("seed")) opt.seed = py::cast<std::uint64_t>(kwargs["seed"]);
            if (kwargs.contains("height")) opt.use_height = py::cast<bool>(kwargs["height"]);
            if (kwargs.contains("relative")) opt.relative = py::cast<bool>(kwargs["relative"]);
            if (kwargs.contains("restarts")) opt.restarts = py::cast<int>(kwargs["restarts"]);
            if (kwargs.contains("limit")) opt.limit = py::cast<int>(kwargs["limit"]);

            auto doc = parse_document(text);
            CommandResult result;
            if (command == "validate") result = cmd_validate(doc, opt);
            else if (command == "critical") result = cmd_critical(doc, opt);
            else if (command == "filtration") result = cmd_filtration(doc, opt);
            else if (command == "relative-filtration") {
                opt.relative = true;
                result = cmd_filtration(doc, opt);
            } else if (command == "homology") result = cmd_homology(doc, opt);
            else if (command == "hregular") result = cmd_hregular(doc, opt);
            else if (command == "opposite") result = cmd_opposite(doc, opt);
            else if (command == "search") result = cmd_search(doc, opt);
            else if (command == "exhaustive") result = cmd_exhaustive(doc, opt);
            else fail(ErrorKind::ValidationError, "unknown command '" + command + "'");
            return py::make_tuple(to_py(result.data), result.text, result.exit_code);
        },
        py::arg("command"), py::arg("text"));
}
