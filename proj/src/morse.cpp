#include "pomo/morse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pomo/errors.hpp"

namespace pomo {

const Rational& MorseFunction::at(int i) const {
    if (!values[i].has_value())
        fail(ErrorKind::MissingValue, "no Morse value for element index " + std::to_string(i));
    return *values[i];
}

MorseFunction height_function(const Poset& X) {
    MorseFunction f = MorseFunction::total(X.size());
    for (int i = 0; i < X.size(); ++i) f.set(i, Rational(X.height_of(i)));
    return f;
}

namespace {

std::vector<int> whole_domain(const Poset& X) {
    std::vector<int> all(X.size());
    for (int i = 0; i < X.size(); ++i) all[i] = i;
    return all;
}

// cover pairs of the subposet induced on `domain`, display-sorted
std::vector<std::pair<int, int>> domain_covers(const Poset& X, const std::vector<int>& domain) {
    std::vector<std::pair<int, int>> out;
    for (int a : domain)
        for (int b : domain) {
            if (!X.less(a, b)) continue;
            bool direct = true;
            for (int z : domain)
                if (X.less(a, z) && X.less(z, b)) {
                    direct = false;
                    break;
                }
            if (direct) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

void require_defined(const Poset& X, const MorseFunction& f, const std::vector<int>& domain) {
    for (int v : domain)
        if (!f.defined(v))
            fail(ErrorKind::MissingValue, "no Morse value for '" + X.name_of(v) + "'");
}

}  // namespace

FunctionCheck validate_function(const Poset& X, const MorseFunction& f) {
    return validate_function(X, f, whole_domain(X));
}

FunctionCheck validate_function(const Poset& X, const MorseFunction& f,
                                const std::vector<int>& domain) {
    require_defined(X, f, domain);
    FunctionCheck out;
    for (const auto& [a, b] : domain_covers(X, domain)) {
        if (!(f.at(a) < f.at(b))) {
            out.ok = false;
            out.violation = {a, b};
            return out;
        }
    }
    return out;
}

bool functions_equivalent(const Poset& X, const MorseFunction& f, const MorseFunction& g) {
    return functions_equivalent(X, f, g, whole_domain(X));
}

bool functions_equivalent(const Poset& X, const MorseFunction& f, const MorseFunction& g,
                          const std::vector<int>& domain) {
    require_defined(X, f, domain);
    require_defined(X, g, domain);
    for (int a : domain)
        for (int b : domain)
            if ((f.at(a) < f.at(b)) != (g.at(a) < g.at(b))) return false;
    return true;
}

void Matching::canonicalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Matching::contains_element(int v) const {
    for (const auto& [x, y] : edges)
        if (x == v || y == v) return true;
    return false;
}

std::optional<int> Matching::partner(int v) const {
    for (const auto& [x, y] : edges) {
        if (x == v) return y;
        if (y == v) return x;
    }
    return std::nullopt;
}

Digraph reversed_digraph(const Poset& X, const Matching& M) {
    return reversed_digraph(X, M, whole_domain(X));
}

Digraph reversed_digraph(const Poset& X, const Matching& M, const std::vector<int>& domain) {
    std::set<std::pair<int, int>> matched(M.edges.begin(), M.edges.end());
    std::vector<bool> in_domain(X.size(), false);
    for (int v : domain) in_domain[v] = true;

    std::vector<int> used(X.size(), 0);
    for (const auto& [x, y] : M.edges) {
        if (!in_domain[x] || !in_domain[y])
            fail(ErrorKind::NotAMatching, "edge (" + X.name_of(x) + "," + X.name_of(y) +
                                              ") leaves the complement");
        ++used[x];
        ++used[y];
    }
    for (int v = 0; v < X.size(); ++v)
        if (used[v] > 1)
            fail(ErrorKind::NotAMatching, "element '" + X.name_of(v) + "' is in two edges");

    auto covers = domain_covers(X, domain);
    std::set<std::pair<int, int>> cover_set(covers.begin(), covers.end());
    for (const auto& e : M.edges)
        if (!cover_set.count(e))
            fail(ErrorKind::NotAMatching, "edge (" + X.name_of(e.first) + "," +
                                              X.name_of(e.second) + ") is not a cover pair");

    Digraph G;
    G.n = X.size();
    G.out.assign(G.n, {});
    for (const auto& [a, b] : covers) {
        if (matched.count({a, b}))
            G.out[a].push_back(b);  // matched: upward
        else
            G.out[b].push_back(a);  // unmatched: downward
    }
    return G;
}

AcyclicityResult is_acyclic(const Digraph& G) {
    std::vector<int> indeg(G.n, 0);
    for (int v = 0; v < G.n; ++v)
        for (int w : G.out[v]) ++indeg[w];
    std::deque<int> queue;
    for (int v = 0; v < G.n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    int seen = 0;
    std::vector<bool> removed(G.n, false);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        removed[v] = true;
        ++seen;
        for (int w : G.out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    AcyclicityResult out;
    if (seen == G.n) return out;

    // walk inside the leftover until a vertex repeats, then cut the cycle
    out.acyclic = false;
    int start = 0;
    while (removed[start]) ++start;
    std::vector<int> order;
    std::vector<int> pos(G.n, -1);
    int v = start;
    while (pos[v] < 0) {
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
        for (int w : G.out[v])
            if (!removed[w]) {
                v = w;
                break;
            }
    }
    out.cycle.assign(order.begin() + pos[v], order.end());
    return out;
}

AcyclicityResult is_acyclic(const Poset& X, const Matching& M) {
    return is_acyclic(reversed_digraph(X, M));
}

bool EdgeReport::admissible(Mode mode) const {
    if (!condition2) return false;
    switch (condition1.status) {
        case Triviality::CollapsibleCertified: return true;
        case Triviality::NotTrivial: return false;
        case Triviality::HomologyTrivialUnresolved: return mode == Mode::Permissive;
    }
    return false;
}

EdgeReport edge_admissible(const Poset& X, const MorseFunction& f, std::pair<int, int> edge,
                           long long budget, const std::optional<std::vector<int>>& down_set) {
    EdgeReport rep;
    rep.edge = edge;
    const auto [x, y] = edge;

    // condition (1): deleted descending link, always taken in the full poset
    std::vector<int> link;
    for (int v : X.principal_down(y, /*strict=*/true))
        if (v != x) link.push_back(v);
    rep.condition1 = triviality_verdict(order_complex(X, link), budget);

    // condition (2): quantified over the complement in relative mode
    std::vector<int> domain = down_set ? X.complement(*down_set) : whole_domain(X);
    rep.condition2 = true;
    for (int z : domain) {
        if (z == x || z == y) continue;
        if (f.at(x) < f.at(z) && f.at(z) < f.at(y)) {
            rep.condition2 = false;
            rep.condition2_witness = z;
            break;
        }
    }
    return rep;
}

AdmissibilityReport validate_matching(const Poset& X, const MorseFunction& f, const Matching& M,
                                      Mode mode, const std::optional<std::vector<int>>& down_set,
                                      long long budget) {
    AdmissibilityReport rep;
    rep.mode = mode;
    rep.relative = down_set.has_value();

    std::vector<int> domain;
    if (down_set) {
        if (!X.is_down_set(*down_set))
            fail(ErrorKind::NotADownSet, "A is not closed under going down");
        domain = X.complement(*down_set);
    } else {
        domain = whole_domain(X);
    }

    auto fcheck = validate_function(X, f, domain);
    if (!fcheck.ok) {
        rep.reasons.push_back("not a Morse function: f(" + X.name_of(fcheck.violation->first) +
                              ") >= f(" + X.name_of(fcheck.violation->second) + ") on a cover");
    }

    auto G = reversed_digraph(X, M, domain);  // throws NotAMatching
    auto acyc = is_acyclic(G);
    rep.acyclic = acyc.acyclic;
    if (!acyc.acyclic) {
        rep.cycle = acyc.cycle;
        std::string names;
        for (int v : acyc.cycle) names += (names.empty() ? "" : " -> ") + X.name_of(v);
        rep.reasons.push_back("H_M has a directed cycle: " + names);
    }

    for (const auto& e : M.edges) {
        auto er = edge_admissible(X, f, e, budget, down_set);
        const std::string label = "(" + X.name_of(e.first) + "," + X.name_of(e.second) + ")";
        if (er.condition1.status == Triviality::NotTrivial) {
            rep.reasons.push_back("edge " + label +
                                  " fails condition (1): deleted link has non-trivial reduced "
                                  "homology in dim " +
                                  std::to_string(er.condition1.witness->dim));
        }
        if (er.condition1.status == Triviality::HomologyTrivialUnresolved) {
            std::string what = er.condition1.empty_complex
                                   ? "deleted link is empty"
                                   : "deleted link is homology-trivial but not certified collapsible";
            if (mode == Mode::Permissive)
                rep.warnings.push_back("edge " + label + " accepted permissively: " + what);
            else
                rep.reasons.push_back("edge " + label + " fails condition (1) in strict mode: " + what);
        }
        if (!er.condition2) {
            rep.reasons.push_back("edge " + label + " fails condition (2): f(" +
                                  X.name_of(*er.condition2_witness) + ") lies strictly between");
        }
        rep.edges.push_back(std::move(er));
    }

    for (int v : domain)
        if (!M.contains_element(v)) rep.critical.push_back(v);
    std::sort(rep.critical.begin(), rep.critical.end());

    bool edges_ok = true;
    for (const auto& er : rep.edges)
        if (!er.admissible(mode)) edges_ok = false;
    rep.accepted = fcheck.ok && rep.acyclic && edges_ok;
    return rep;
}

PathPropertyResult check_path_property(const Poset& X, const MorseFunction& f, const Matching& M,
                                       const std::optional<std::vector<int>>& down_set) {
    std::vector<int> domain = down_set ? X.complement(*down_set) : whole_domain(X);
    auto G = reversed_digraph(X, M, domain);

    // reachability by at least one edge
    const int n = G.n;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s : domain) {
        std::deque<int> queue(G.out[s].begin(), G.out[s].end());
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (reach[s][v]) continue;
            reach[s][v] = true;
            for (int w : G.out[v]) queue.push_back(w);
        }
    }

    PathPropertyResult out;
    for (int s : domain)
        for (int t : domain) {
            if (!reach[s][t]) continue;
            for (int z : domain) {
                if (f.at(s) < f.at(z) && f.at(z) < f.at(t)) {
                    // reconstruct one s -> t path for the report
                    std::vector<int> parent(n, -1);
                    std::deque<int> queue{s};
                    std::vector<bool> seen(n, false);
                    seen[s] = true;
                    while (!queue.empty()) {
                        int v = queue.front();
                        queue.pop_front();
                        if (v == t) break;
                        for (int w : G.out[v])
                            if (!seen[w]) {
                                seen[w] = true;
                                parent[w] = v;
                                queue.push_back(w);
                            }
                    }
                    out.holds = false;
                    out.z = z;
                    for (int v = t; v != -1; v = parent[v]) out.path.push_back(v);
                    std::reverse(out.path.begin(), out.path.end());
                    return out;
                }
            }
        }
    return out;
}

MorseFunction synthesize_function(const Poset& X, const Matching& M) {
    auto acyc = is_acyclic(X, M);
    if (!acyc.acyclic) fail(ErrorKind::CyclicMatching, "H_M has a directed cycle");

    // contract matched pairs in the up-oriented cover digraph
    const int n = X.size();
    std::vector<int> rep(n);
    for (int i = 0; i < n; ++i) rep[i] = i;
    for (const auto& [x, y] : M.edges) {
        rep[x] = std::min(x, y);
        rep[y] = std::min(x, y);
    }

    std::vector<std::set<int>> succ(n);
    for (const auto& [a, b] : X.cover_pairs()) {
        if (rep[a] == rep[b]) continue;  // the matched cover itself
        succ[rep[a]].insert(rep[b]);
    }

    // longest-path levels over the contraction; a cycle here means no Morse
    // function can make every matched pair value-consecutive
    std::vector<int> state(n, 0), level(n, 0);  // 0 unvisited, 1 active, 2 done
    bool cyclic = false;
    auto dfs = [&](auto&& self, int v) -> int {
        if (state[v] == 1) {
            cyclic = true;
            return 0;
        }
        if (state[v] == 2) return level[v];
        state[v] = 1;
        int lvl = 0;
        for (int w : succ[v]) lvl = std::max(lvl, self(self, w) + 1);
        state[v] = 2;
        return level[v] = lvl;
    };
    int top = 0;
    for (int i = 0; i < n && !cyclic; ++i)
        if (rep[i] == i) top = std::max(top, dfs(dfs, i));
    if (cyclic)
        fail(ErrorKind::SynthesisFailed,
             "matched-pair contraction is cyclic; no function satisfies condition (2)");

    MorseFunction f = MorseFunction::total(n);
    for (int i = 0; i < n; ++i) {
        // levels count longest paths to a sink; flip so values increase upward
        Rational base(top - level[rep[i]]);
        bool upper = false;
        for (const auto& [x, y] : M.edges)
            if (y == i) upper = true;
        f.set(i, upper ? base + Rational(1, 2) : base);
    }

    // postcondition is checked, not assumed
    if (!validate_function(X, f).ok)
        fail(ErrorKind::SynthesisFailed, "synthesized values are not a Morse function");
    for (const auto& [x, y] : M.edges)
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            if (f.at(x) < f.at(z) && f.at(z) < f.at(y))
                fail(ErrorKind::SynthesisFailed, "synthesized values violate condition (2)");
        }
    return f;
}

JoinMorseData induced_join_morse(const Poset& X, const MorseFunction& f, const Matching& M,
                                 const Poset& Y, const MorseFunction& g, const Matching& N,
                                 Mode mode, long long budget) {
    auto left = validate_matching(X, f, M, mode, std::nullopt, budget);
    if (!left.accepted)
        fail(ErrorKind::InputNotValidated, "left input rejected: " +
                                               (left.reasons.empty() ? "?" : left.reasons.front()));
    auto right = validate_matching(Y, g, N, mode, std::nullopt, budget);
    if (!right.accepted)
        fail(ErrorKind::InputNotValidated,
             "right input rejected: " + (right.reasons.empty() ? "?" : right.reasons.front()));

    JoinMorseData out;
    out.join_poset = join(X, Y);
    const int nx = X.size();

    Rational max_f(0), min_g(0);
    for (int i = 0; i < X.size(); ++i)
        if (i == 0 || f.at(i) > max_f) max_f = f.at(i);
    for (int j = 0; j < Y.size(); ++j)
        if (j == 0 || g.at(j) < min_g) min_g = g.at(j);
    const Rational shift = max_f - min_g + 1;

    out.function = MorseFunction::total(out.join_poset.size());
    for (int i = 0; i < X.size(); ++i) out.function.set(i, f.at(i));
    for (int j = 0; j < Y.size(); ++j) out.function.set(nx + j, g.at(j) + shift);

    out.matching = M;
    for (const auto& [a, b] : N.edges) out.matching.edges.emplace_back(nx + a, nx + b);
    out.matching.canonicalize();

    // re-verify rather than trust the construction
    out.report = validate_matching(out.join_poset, out.function, out.matching, mode,
                                   std::nullopt, budget);
    return out;
}

}  // namespace pomo
