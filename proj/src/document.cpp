#include "pomo/document.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "pomo/errors.hpp"
#include "pomo/numbers.hpp"

namespace pomo {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
    fail(ErrorKind::ParseError, name + ":" + std::to_string(line) + ": " + msg);
}

[[noreturn]] void invalid(const std::string& name, int line, const std::string& msg) {
    fail(ErrorKind::ValidationError, name + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

bool PosetDocument::values_total_on(const std::vector<int>& domain) const {
    if (!values) return false;
    for (int v : domain)
        if (!values->defined(v)) return false;
    return true;
}

PosetDocument parse_document(const std::string& text, const std::string& name) {
    struct RawEdge {
        std::string a, b;
        int line;
    };
    std::vector<std::string> elements;
    std::map<std::string, int> declared;  // id -> line of declaration
    std::map<std::string, std::pair<Rational, int>> raw_values;
    std::vector<RawEdge> raw_rels, raw_matching;
    std::vector<std::pair<std::string, int>> raw_down;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(line));
        if (tokens.empty()) continue;
        const std::string& directive = tokens[0];

        if (directive == "p") {
            if (tokens.size() < 2 || tokens.size() > 3)
                parse_fail(name, lineno, "expected 'p <id> [f=<value>]'");
            const std::string& id = tokens[1];
            if (declared.count(id))
                parse_fail(name, lineno, "element '" + id + "' already declared on line " +
                                             std::to_string(declared[id]));
            declared[id] = lineno;
            elements.push_back(id);
            if (tokens.size() == 3) {
                if (tokens[2].rfind("f=", 0) != 0)
                    parse_fail(name, lineno, "expected f=<value>, got '" + tokens[2] + "'");
                try {
                    raw_values[id] = {parse_rational(tokens[2].substr(2)), lineno};
                } catch (const Error&) {
                    parse_fail(name, lineno, "bad rational literal '" + tokens[2].substr(2) + "'");
                }
            }
        } else if (directive == "rel" || directive == "m") {
            if (tokens.size() != 3)
                parse_fail(name, lineno, "expected '" + directive + " <a> <b>'");
            (directive == "rel" ? raw_rels : raw_matching)
                .push_back({tokens[1], tokens[2], lineno});
        } else if (directive == "A") {
            if (tokens.size() < 2) parse_fail(name, lineno, "expected 'A <id> [<id> ...]'");
            for (std::size_t i = 1; i < tokens.size(); ++i)
                raw_down.emplace_back(tokens[i], lineno);
        } else {
            parse_fail(name, lineno, "unknown directive '" + directive + "'");
        }
    }

    auto check_declared = [&](const std::string& id, int at) {
        if (!declared.count(id)) parse_fail(name, at, "unknown element '" + id + "'");
    };

    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : raw_rels) {
        check_declared(e.a, e.line);
        check_declared(e.b, e.line);
        pairs.emplace_back(e.a, e.b);
    }

    PosetDocument doc;
    doc.name = name;
    try {
        doc.poset = Poset::from_relations(elements, pairs);
    } catch (const Error& err) {
        fail(ErrorKind::ValidationError, name + ": " + err.what());
    }

    for (const auto& e : raw_matching) {
        check_declared(e.a, e.line);
        check_declared(e.b, e.line);
        int a = doc.poset.index_of(e.a), b = doc.poset.index_of(e.b);
        if (!doc.poset.covers_pair(a, b))
            invalid(name, e.line,
                    "matching edge '" + e.a + " " + e.b + "' is not a cover pair after reduction");
        doc.matching.edges.emplace_back(a, b);
    }
    doc.matching.canonicalize();

    if (!raw_down.empty()) {
        doc.has_down_set = true;
        for (const auto& [id, at] : raw_down) {
            check_declared(id, at);
            doc.down_set.push_back(doc.poset.index_of(id));
        }
        std::sort(doc.down_set.begin(), doc.down_set.end());
        doc.down_set.erase(std::unique(doc.down_set.begin(), doc.down_set.end()),
                           doc.down_set.end());
        if (!doc.poset.is_down_set(doc.down_set))
            fail(ErrorKind::ValidationError, name + ": A is not a down-set");
    }

    if (!raw_values.empty()) {
        MorseFunction f = MorseFunction::total(doc.poset.size());
        f.values.assign(static_cast<std::size_t>(doc.poset.size()), std::nullopt);
        for (const auto& [id, vl] : raw_values) f.set(doc.poset.index_of(id), vl.first);
        doc.values = std::move(f);

        // Morse property: on the complement when A is marked, else on X.
        std::vector<int> domain;
        if (doc.has_down_set) {
            domain = doc.poset.complement(doc.down_set);
        } else {
            domain.resize(doc.poset.size());
            for (int i = 0; i < doc.poset.size(); ++i) domain[i] = i;
        }
        for (int v : domain)
            if (!doc.values->defined(v))
                fail(ErrorKind::ValidationError,
                     name + ": no f value for '" + doc.poset.name_of(v) + "'" +
                         (doc.has_down_set ? " (values must cover the complement of A)" : ""));
        auto check = validate_function(doc.poset, *doc.values, domain);
        if (!check.ok)
            fail(ErrorKind::ValidationError,
                 name + ": values are not a Morse function: f(" +
                     doc.poset.name_of(check.violation->first) + ") >= f(" +
                     doc.poset.name_of(check.violation->second) + ") on a cover");
    }
    return doc;
}

PosetDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();

    std::string base = path;
    if (auto slash = base.find_last_of("/\\"); slash != std::string::npos)
        base = base.substr(slash + 1);
    if (auto dot = base.find_last_of('.'); dot != std::string::npos && dot > 0)
        base = base.substr(0, dot);
    return parse_document(buffer.str(), base);
}

std::string serialize(const PosetDocument& doc) {
    std::ostringstream out;
    const Poset& X = doc.poset;
    for (int i = 0; i < X.size(); ++i) {
        out << "p " << X.name_of(i);
        if (doc.values && doc.values->defined(i))
            out << " f=" << rational_string(doc.values->at(i));
        out << "\n";
    }
    for (const auto& [a, b] : X.cover_pairs())
        out << "rel " << X.name_of(a) << " " << X.name_of(b) << "\n";
    for (const auto& [a, b] : doc.matching.edges)
        out << "m " << X.name_of(a) << " " << X.name_of(b) << "\n";
    if (doc.has_down_set && !doc.down_set.empty()) {
        out << "A";
        for (int v : doc.down_set) out << " " << X.name_of(v);
        out << "\n";
    }
    return out.str();
}

}  // namespace pomo
