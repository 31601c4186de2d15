#include "pomo/reports.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pomo/errors.hpp"
#include "pomo/filtration.hpp"
#include "pomo/numbers.hpp"
#include "pomo/search.hpp"

namespace pomo {

using nlohmann::json;

CommandResult::CommandResult() = default;
CommandResult::CommandResult(const CommandResult&) = default;
CommandResult::CommandResult(CommandResult&&) noexcept = default;
CommandResult& CommandResult::operator=(const CommandResult&) = default;
CommandResult& CommandResult::operator=(CommandResult&&) noexcept = default;
CommandResult::~CommandResult() = default;

namespace {

const char* mode_name(Mode m) { return m == Mode::Strict ? "strict" : "permissive"; }

json homology_json(const HomologySummary& h) {
    json out = json::array();
    for (const auto& g : h.groups) {
        json torsion = json::array();
        for (const auto& t : g.torsion) torsion.push_back(integer_string(t));
        out.push_back({{"dim", g.dim}, {"betti", g.betti}, {"torsion", torsion}});
    }
    return out;
}

json names_json(const Poset& X, const std::vector<int>& members) {
    json out = json::array();
    for (int v : members) out.push_back(X.name_of(v));
    return out;
}

// f-levels of the domain with their critical points
json levels_json(const Poset& X, const MorseFunction& f, const std::vector<int>& domain,
                 const std::vector<int>& critical) {
    std::map<Rational, std::vector<int>> by_level;
    for (int v : domain) by_level[f.at(v)];
    for (int v : critical) by_level[f.at(v)].push_back(v);
    json out = json::array();
    for (const auto& [t, crit] : by_level)
        out.push_back({{"t", rational_string(t)}, {"critical", names_json(X, crit)}});
    return out;
}

json edges_json(const Poset& X, const AdmissibilityReport& rep, Mode mode) {
    json out = json::array();
    for (const auto& er : rep.edges) {
        json e = {{"x", X.name_of(er.edge.first)},
                  {"y", X.name_of(er.edge.second)},
                  {"condition1", to_string(er.condition1.status)},
                  {"condition2", er.condition2},
                  {"admissible", er.admissible(mode)}};
        if (er.condition1.empty_complex) e["condition1_empty_link"] = true;
        if (er.condition2_witness) e["condition2_witness"] = X.name_of(*er.condition2_witness);
        out.push_back(std::move(e));
    }
    return out;
}

std::string render_homology(const HomologySummary& h) { return h.to_string(); }

struct Prepared {
    MorseFunction f;
    std::optional<std::vector<int>> down_set;
    std::vector<int> domain;
};

Prepared prepare(const PosetDocument& doc, const CommandOptions& opt, bool need_function) {
    Prepared p;
    const Poset& X = doc.poset;
    if (opt.relative) {
        if (!doc.has_down_set)
            fail(ErrorKind::ValidationError, doc.name + ": --relative requires A lines");
        p.down_set = doc.down_set;
        p.domain = X.complement(doc.down_set);
    } else {
        p.domain.resize(X.size());
        for (int i = 0; i < X.size(); ++i) p.domain[i] = i;
    }
    if (need_function) {
        if (opt.use_height) {
            p.f = height_function(X);
        } else if (doc.values) {
            p.f = *doc.values;
        } else {
            fail(ErrorKind::MissingValue,
                 doc.name + ": no f values in the file; pass --height to use the height function");
        }
        for (int v : p.domain)
            if (!p.f.defined(v))
                fail(ErrorKind::MissingValue, doc.name + ": no f value for '" + X.name_of(v) + "'");
    }
    return p;
}

json validation_json(const PosetDocument& doc, const CommandOptions& opt,
                     const Prepared& p, const AdmissibilityReport& rep) {
    const Poset& X = doc.poset;
    json out;
    out["name"] = doc.name;
    out["mode"] = mode_name(opt.mode);
    out["relative"] = opt.relative;
    out["accepted"] = rep.accepted;
    out["acyclic"] = rep.acyclic;
    out["matching_size"] = static_cast<int>(doc.matching.edges.size());
    out["critical"] = names_json(X, rep.critical);
    out["levels"] = levels_json(X, p.f, p.domain, rep.critical);
    out["edges"] = edges_json(X, rep, opt.mode);
    out["reasons"] = rep.reasons;
    out["warnings"] = rep.warnings;
    if (!rep.acyclic) out["cycle"] = names_json(X, rep.cycle);
    return out;
}

std::string validation_text(const PosetDocument& doc, const CommandOptions& opt,
                            const Prepared& p, const AdmissibilityReport& rep) {
    const Poset& X = doc.poset;
    std::ostringstream out;
    out << doc.name << ": " << (opt.relative ? "relative " : "") << "validation ("
        << mode_name(opt.mode) << ")\n";
    out << "matching: " << doc.matching.edges.size() << " edge(s), "
        << (rep.acyclic ? "acyclic" : "CYCLIC") << "\n";
    for (const auto& er : rep.edges) {
        out << "  (" << X.name_of(er.edge.first) << " < " << X.name_of(er.edge.second)
            << "): condition1=" << to_string(er.condition1.status)
            << (er.condition1.empty_complex ? " [empty link]" : "")
            << " condition2=" << (er.condition2 ? "yes" : "no");
        if (er.condition2_witness) out << " (z=" << X.name_of(*er.condition2_witness) << ")";
        out << (er.admissible(opt.mode) ? "" : "  <- rejected") << "\n";
    }
    out << "critical points (" << rep.critical.size() << "):";
    for (int v : rep.critical) out << " " << X.name_of(v) << " (f=" << rational_string(p.f.at(v)) << ")";
    out << "\n";
    for (const auto& w : rep.warnings) out << "warning: " << w << "\n";
    for (const auto& r : rep.reasons) out << "reason: " << r << "\n";
    out << (rep.accepted ? "accepted" : "rejected") << "\n";
    return out.str();
}

}  // namespace

CommandResult cmd_validate(const PosetDocument& doc, const CommandOptions& opt) {
    auto p = prepare(doc, opt, /*need_function=*/true);
    auto rep = validate_matching(doc.poset, p.f, doc.matching, opt.mode, p.down_set, opt.budget);

    CommandResult out;
    out.data = validation_json(doc, opt, p, rep);
    out.data["command"] = "validate";
    out.text = validation_text(doc, opt, p, rep);
    out.exit_code = rep.accepted ? 0 : 2;
    return out;
}

CommandResult cmd_critical(const PosetDocument& doc, const CommandOptions& opt) {
    auto p = prepare(doc, opt, /*need_function=*/true);
    auto rep = validate_matching(doc.poset, p.f, doc.matching, opt.mode, p.down_set, opt.budget);
    const Poset& X = doc.poset;

    CommandResult out;
    out.data = validation_json(doc, opt, p, rep);
    out.data["command"] = "critical";

    std::ostringstream text;
    text << doc.name << ": " << rep.critical.size() << " critical point(s) ("
         << (rep.accepted ? "accepted" : "rejected") << ")\n";
    std::map<Rational, std::vector<int>> by_level;
    for (int v : rep.critical) by_level[p.f.at(v)].push_back(v);
    for (const auto& [t, crit] : by_level) {
        text << "f=" << rational_string(t) << ":";
        for (int v : crit) text << " " << X.name_of(v);
        text << "\n";
    }
    out.text = text.str();
    out.exit_code = rep.accepted ? 0 : 2;
    return out;
}

CommandResult cmd_homology(const PosetDocument& doc, const CommandOptions&) {
    auto K = order_complex(doc.poset);
    auto h = reduced_homology(K);

    CommandResult out;
    out.data["command"] = "homology";
    out.data["name"] = doc.name;
    out.data["homology"] = homology_json(h);
    out.data["euler_characteristic"] = K.euler_characteristic();
    out.data["dimension"] = K.dimension();
    out.data["simplices"] = K.simplex_count();

    std::ostringstream text;
    text << doc.name << ": order complex has " << K.simplex_count() << " simplices, dimension "
         << K.dimension() << ", chi=" << K.euler_characteristic() << "\n";
    text << "reduced homology: " << render_homology(h) << "\n";
    out.text = text.str();
    return out;
}

CommandResult cmd_descending_link(const PosetDocument& doc, const std::string& element,
                                  const CommandOptions&) {
    const Poset& X = doc.poset;
    int x = X.index_of(element);
    auto link = X.principal_down(x, /*strict=*/true);
    auto K = order_complex(X, link);
    auto h = reduced_homology(K);

    CommandResult out;
    out.data["command"] = "descending-link";
    out.data["name"] = doc.name;
    out.data["element"] = element;
    out.data["members"] = names_json(X, link);
    out.data["homology"] = homology_json(h);
    out.data["euler_characteristic"] = K.euler_characteristic();

    std::ostringstream text;
    text << doc.name << ": descending link of " << element << " has " << link.size()
         << " element(s):";
    for (int v : link) text << " " << X.name_of(v);
    text << "\nreduced homology: " << render_homology(h) << "\n";
    out.text = text.str();
    return out;
}

CommandResult cmd_hregular(const PosetDocument& doc, const CommandOptions&) {
    const Poset& X = doc.poset;

    CommandResult out;
    out.data["command"] = "hregular";
    out.data["name"] = doc.name;
    json rows = json::array();
    bool all_ok = true;
    std::ostringstream text;
    for (int x = 0; x < X.size(); ++x) {
        auto link = X.principal_down(x, true);
        const int expected = X.height_of(x) - 1;
        const bool ok = sphere_check(order_complex(X, link), expected);
        all_ok = all_ok && ok;
        rows.push_back({{"id", X.name_of(x)},
                        {"height", X.height_of(x)},
                        {"expected_sphere_dim", expected},
                        {"ok", ok}});
        text << X.name_of(x) << ": height " << X.height_of(x) << ", link "
             << (ok ? "is" : "is NOT") << " a homology S^" << expected << "\n";
    }
    out.data["elements"] = rows;
    out.data["h_regular"] = all_ok;
    out.text = doc.name + ": " + (all_ok ? "h-regular" : "not h-regular") + "\n" + text.str();
    return out;
}

CommandResult cmd_filtration(const PosetDocument& doc, const CommandOptions& opt) {
    auto p = prepare(doc, opt, /*need_function=*/true);
    auto rep = validate_matching(doc.poset, p.f, doc.matching, opt.mode, p.down_set, opt.budget);
    const Poset& X = doc.poset;

    CommandResult out;
    out.data = validation_json(doc, opt, p, rep);
    out.data["command"] = opt.relative ? "relative-filtration" : "filtration";

    if (!rep.accepted) {
        out.text = validation_text(doc, opt, p, rep) + "filtration not built (matching rejected)\n";
        out.exit_code = 2;
        return out;
    }

    auto trace = removal_trace(X, p.f, doc.matching, p.down_set);
    auto F = build_filtration(trace, X, p.f, doc.matching, p.down_set);
    auto verify = verify_filtration(F);
    auto cw = cw_summary(F);

    json jtrace = json::array();
    for (const auto& step : trace.steps) {
        if (step.is_pair)
            jtrace.push_back({{"remove", "pair"}, {"x", X.name_of(step.x)}, {"y", X.name_of(step.y)}});
        else
            jtrace.push_back({{"remove", "critical"}, {"x", X.name_of(step.x)}});
    }
    out.data["trace"] = jtrace;

    std::ostringstream text;
    text << validation_text(doc, opt, p, rep);
    if (opt.relative)
        text << "base A (" << F.base.size() << "):" << [&] {
            std::string s;
            for (int v : F.base) s += " " + X.name_of(v);
            return s;
        }() << "\n";

    json jlevels = json::array();
    for (std::size_t i = 0; i < F.levels.size(); ++i) {
        const auto& level = F.levels[i];
        const auto& check = verify.stages[i];
        json jl;
        jl["t"] = rational_string(level.t);
        json jcrit = json::array();
        for (const auto& info : level.critical)
            jcrit.push_back({{"id", X.name_of(info.element)},
                             {"link", names_json(X, info.link)},
                             {"homology", homology_json(info.link_homology)}});
        jl["critical"] = jcrit;
        json jpairs = json::array();
        for (const auto& [x, y] : level.pairs)
            jpairs.push_back({X.name_of(x), X.name_of(y)});
        jl["pairs"] = jpairs;
        jl["lower"] = names_json(X, level.lower);
        jl["upper"] = names_json(X, level.upper);
        jl["homology_equal"] = check.homology_equal;
        jl["euler_ok"] = check.euler_ok;
        jlevels.push_back(std::move(jl));

        text << "t=" << rational_string(level.t) << ": X_" << i << " has "
             << level.lower.size() << " elements, X~_" << i << " has " << level.upper.size()
             << "; criticals:";
        if (level.critical.empty()) text << " none";
        for (const auto& info : level.critical)
            text << " " << X.name_of(info.element) << " [link "
                 << render_homology(info.link_homology) << "]";
        text << "; homology_equal=" << (check.homology_equal ? "yes" : "NO")
             << " euler_ok=" << (check.euler_ok ? "yes" : "NO") << "\n";
    }
    out.data["filtration"] = jlevels;
    out.data["verified"] = verify.all_ok;
    out.data["global"] = {{"euler_ok", verify.global_euler_ok},
                          {"chi", verify.chi_total},
                          {"chi_base", verify.chi_base},
                          {"cone_contribution", verify.cone_contribution},
                          {"final_matches_direct", verify.final_matches_direct}};

    json jcw;
    jcw["all_spherical"] = cw.all_spherical;
    jcw["discrete_space"] = cw.discrete_space;
    jcw["component_count"] = cw.component_count;
    if (cw.all_spherical) jcw["cells"] = cw.cells;
    if (cw.all_spherical) jcw["morse_inequalities_ok"] = cw.morse_inequalities_ok;
    json jentries = json::array();
    for (const auto& e : cw.entries) {
        const char* kind = e.cls.kind == CwClass::Empty     ? "empty"
                           : e.cls.kind == CwClass::Sphere  ? "sphere"
                           : e.cls.kind == CwClass::Trivial ? "trivial"
                                                            : "other";
        json je = {{"id", X.name_of(e.element)},
                   {"t", rational_string(e.t)},
                   {"height", e.height},
                   {"class", kind},
                   {"homology", homology_json(e.link_homology)}};
        if (e.cls.kind == CwClass::Sphere) je["sphere_dim"] = e.cls.sphere_dim;
        jentries.push_back(std::move(je));
    }
    jcw["critical"] = jentries;
    out.data["cw"] = jcw;

    text << "global: chi(K(X))=" << verify.chi_total << " = chi(K(A))=" << verify.chi_base
         << " + cones=" << verify.cone_contribution
         << (verify.global_euler_ok ? " (ok)" : " (MISMATCH)") << "\n";
    text << "final stage homology matches direct computation: "
         << (verify.final_matches_direct ? "yes" : "NO") << "\n";
    if (cw.all_spherical) {
        text << "all descending links are spheres; Morse vector:";
        for (std::size_t d = 0; d < cw.cells.size(); ++d) text << " " << cw.cells[d];
        text << (cw.morse_inequalities_ok ? " (betti_d <= cells_d ok)" : " (MORSE INEQUALITY FAILS)")
             << "\n";
    }
    if (cw.discrete_space)
        text << "all links above height 0 are trivial: homotopy discrete with "
             << cw.component_count << " point(s)\n";
    text << (verify.all_ok ? "filtration verified" : "FILTRATION CHECKS FAILED") << "\n";
    out.text = text.str();
    out.exit_code = verify.all_ok ? 0 : 2;
    return out;
}

namespace {

json search_json(const Poset& X, const SearchResult& result, const char* command) {
    json out;
    out["command"] = command;
    out["mode"] = mode_name(result.mode);
    out["critical_count"] = result.critical_count;
    out["certified"] = result.certified;
    out["candidates"] = result.candidates;
    json edges = json::array();
    for (const auto& [x, y] : result.best.edges)
        edges.push_back({X.name_of(x), X.name_of(y)});
    out["edges"] = edges;
    json fn;
    for (int i = 0; i < X.size(); ++i) fn[X.name_of(i)] = rational_string(result.function.at(i));
    out["function"] = fn;
    return out;
}

std::string search_text(const Poset& X, const SearchResult& result, const std::string& name,
                        const char* command) {
    std::ostringstream out;
    out << name << ": " << command << " (" << mode_name(result.mode) << ") examined "
        << result.candidates << " candidate(s)\n";
    out << (result.certified ? "certified minimum " : "best found ") << result.critical_count
        << " critical point(s) with " << result.best.edges.size() << " edge(s):";
    for (const auto& [x, y] : result.best.edges)
        out << " (" << X.name_of(x) << "," << X.name_of(y) << ")";
    out << "\nsynthesized function:";
    for (int i = 0; i < X.size(); ++i)
        out << " " << X.name_of(i) << "=" << rational_string(result.function.at(i));
    out << "\n";
    return out.str();
}

}  // namespace

CommandResult cmd_search(const PosetDocument& doc, const CommandOptions& opt) {
    auto result = minimize_critical(doc.poset, opt.restarts, opt.seed, opt.mode, opt.budget);
    CommandResult out;
    out.data = search_json(doc.poset, result, "search");
    out.data["name"] = doc.name;
    out.text = search_text(doc.poset, result, doc.name, "search");
    return out;
}

CommandResult cmd_exhaustive(const PosetDocument& doc, const CommandOptions& opt) {
    auto result = exhaustive_min(doc.poset, opt.limit, opt.mode, opt.budget);
    CommandResult out;
    out.data = search_json(doc.poset, result, "exhaustive");
    out.data["name"] = doc.name;
    out.text = search_text(doc.poset, result, doc.name, "exhaustive");
    return out;
}

CommandResult cmd_join(const PosetDocument& left, const PosetDocument& right,
                       const CommandOptions&) {
    PosetDocument joined;
    joined.name = left.name + "+" + right.name;
    joined.poset = join(left.poset, right.poset);
    const int nx = left.poset.size();

    if (left.values && right.values) {
        bool total = true;
        for (int i = 0; i < left.poset.size(); ++i) total = total && left.values->defined(i);
        for (int j = 0; j < right.poset.size(); ++j) total = total && right.values->defined(j);
        if (total && nx > 0 && right.poset.size() > 0) {
            Rational max_f = left.values->at(0), min_g = right.values->at(0);
            for (int i = 0; i < nx; ++i) max_f = std::max(max_f, left.values->at(i));
            for (int j = 0; j < right.poset.size(); ++j)
                min_g = std::min(min_g, right.values->at(j));
            const Rational shift = max_f - min_g + 1;
            MorseFunction f = MorseFunction::total(joined.poset.size());
            for (int i = 0; i < nx; ++i) f.set(i, left.values->at(i));
            for (int j = 0; j < right.poset.size(); ++j)
                f.set(nx + j, right.values->at(j) + shift);
            joined.values = std::move(f);
        }
    }
    joined.matching = left.matching;
    for (const auto& [a, b] : right.matching.edges)
        joined.matching.edges.emplace_back(nx + a, nx + b);
    joined.matching.canonicalize();

    CommandResult out;
    std::string doc_text = serialize(joined);
    out.data["command"] = "join";
    out.data["name"] = joined.name;
    out.data["elements"] = json(joined.poset.elements());
    out.data["document"] = doc_text;
    out.text = doc_text;
    return out;
}

CommandResult cmd_opposite(const PosetDocument& doc, const CommandOptions&) {
    PosetDocument flipped;
    flipped.name = doc.name + ".op";
    flipped.poset = opposite(doc.poset);
    // f-values do not transfer (they would decrease along covers); A would
    // become an up-set; matching edges survive with endpoints swapped.
    for (const auto& [x, y] : doc.matching.edges) flipped.matching.edges.emplace_back(y, x);
    flipped.matching.canonicalize();

    CommandResult out;
    std::string doc_text = serialize(flipped);
    out.data["command"] = "opposite";
    out.data["name"] = flipped.name;
    out.data["document"] = doc_text;
    out.text = doc_text;
    return out;
}

}  // namespace pomo
