#include "pomo/filtration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pomo/errors.hpp"

namespace pomo {

namespace {

std::vector<int> whole_domain(const Poset& X) {
    std::vector<int> all(X.size());
    for (int i = 0; i < X.size(); ++i) all[i] = i;
    return all;
}

}  // namespace

RemovalTrace removal_trace(const Poset& X, const MorseFunction& f, const Matching& M,
                           const std::optional<std::vector<int>>& down_set) {
    std::vector<bool> in_base(X.size(), false);
    if (down_set) {
        if (!X.is_down_set(*down_set)) fail(ErrorKind::NotADownSet, "A is not a down-set");
        for (int v : *down_set) in_base[v] = true;
    }

    std::map<int, int> partner_up, partner_down;  // x -> y and y -> x per matched (x,y)
    for (const auto& [x, y] : M.edges) {
        partner_up[x] = y;
        partner_down[y] = x;
    }

    std::vector<bool> alive(X.size(), true);
    RemovalTrace trace;

    while (true) {
        std::vector<int> live;  // removable part, display order
        for (int v = 0; v < X.size(); ++v)
            if (alive[v] && !in_base[v]) live.push_back(v);
        if (live.empty()) break;

        // covers of the current complement subposet
        std::set<std::pair<int, int>> covers;
        for (int a : live)
            for (int b : live) {
                if (!X.less(a, b)) continue;
                bool direct = true;
                for (int z : live)
                    if (X.less(a, z) && X.less(z, b)) {
                        direct = false;
                        break;
                    }
                if (direct) covers.insert({a, b});
            }

        // sources of H_M on the current complement
        std::vector<int> sources;
        for (int v : live) {
            bool source = true;
            if (auto it = partner_down.find(v); it != partner_down.end() && alive[it->second])
                source = false;  // matched edge points up into v
            if (source) {
                for (int w : live)
                    if (covers.count({v, w})) {
                        auto up = partner_up.find(v);
                        const bool matched_up = up != partner_up.end() && up->second == w;
                        if (!matched_up) {
                            source = false;  // unmatched cover above points down into v
                            break;
                        }
                    }
            }
            if (source) sources.push_back(v);
        }
        if (sources.empty())
            fail(ErrorKind::InvariantBroken, "no source node in the remaining complement");

        int x = sources.front();
        for (int s : sources)
            if (f.at(s) > f.at(x)) x = s;  // ties fall to display order via front-first scan

        bool maximal = true;
        for (int v = 0; v < X.size(); ++v)
            if (alive[v] && X.less(x, v)) maximal = false;

        if (maximal) {
            if (partner_up.count(x) && alive[partner_up[x]])
                fail(ErrorKind::InvariantBroken,
                     "maximal source '" + X.name_of(x) + "' is matched");
            trace.steps.push_back({false, x, -1});
            alive[x] = false;
            continue;
        }

        std::vector<int> ups;
        for (int w : live)
            if (covers.count({x, w})) ups.push_back(w);
        if (ups.size() != 1)
            fail(ErrorKind::InvariantBroken,
                 "non-maximal source '" + X.name_of(x) + "' has no unique cover");
        int y = ups.front();
        auto it = partner_up.find(x);
        if (it == partner_up.end() || it->second != y)
            fail(ErrorKind::InvariantBroken, "unique cover of '" + X.name_of(x) +
                                                 "' is not its matched partner");
        bool y_maximal = true;
        for (int v = 0; v < X.size(); ++v)
            if (alive[v] && X.less(y, v)) y_maximal = false;
        if (!y_maximal)
            fail(ErrorKind::InvariantBroken,
                 "matched cover '" + X.name_of(y) + "' is not maximal at removal time");

        trace.steps.push_back({true, x, y});
        alive[x] = false;
        alive[y] = false;
    }
    return trace;
}

Filtration build_filtration(const RemovalTrace& trace, const Poset& X, const MorseFunction& f,
                            const Matching& M, const std::optional<std::vector<int>>& down_set) {
    Filtration F;
    F.host = X;
    F.function = f;
    F.relative = down_set.has_value();
    if (down_set) F.base = *down_set;

    std::vector<int> domain =
        down_set ? X.complement(*down_set) : whole_domain(X);

    // t_0 < ... < t_r: the distinct values of f on the domain
    std::vector<Rational> levels;
    for (int v : domain) levels.push_back(f.at(v));
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::set<int> matched;
    for (const auto& [x, y] : M.edges) {
        matched.insert(x);
        matched.insert(y);
    }

    // position of each pair in the removal sequence, for the reverse ordering
    std::map<std::pair<int, int>, int> removal_pos;
    for (int i = 0; i < static_cast<int>(trace.steps.size()); ++i)
        if (trace.steps[i].is_pair)
            removal_pos[{trace.steps[i].x, trace.steps[i].y}] = i;

    std::vector<int> current = F.base;
    std::sort(current.begin(), current.end());

    for (const auto& t : levels) {
        FiltrationLevel level;
        level.t = t;

        for (int v : domain)
            if (!matched.count(v) && f.at(v) == t) {
                CriticalInfo info;
                info.element = v;
                info.link = X.principal_down(v, /*strict=*/true);
                info.link_homology = reduced_homology(order_complex(X, info.link));
                level.critical.push_back(std::move(info));
            }

        for (const auto& info : level.critical) current.push_back(info.element);
        std::sort(current.begin(), current.end());
        level.lower = current;

        std::vector<std::pair<int, int>> pairs;
        for (const auto& [x, y] : M.edges)
            if (f.at(x) == t) pairs.emplace_back(x, y);
        std::sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
            return removal_pos.at(a) > removal_pos.at(b);  // inverse removal order
        });
        level.pairs = pairs;
        for (const auto& [x, y] : pairs) {
            current.push_back(x);
            current.push_back(y);
        }
        std::sort(current.begin(), current.end());
        level.upper = current;

        F.levels.push_back(std::move(level));
    }

    if (static_cast<int>(current.size()) != X.size())
        fail(ErrorKind::InvariantBroken, "filtration does not exhaust the poset");
    return F;
}

StageReport verify_filtration(const Filtration& F) {
    StageReport rep;
    const Poset& X = F.host;

    auto chi_of = [&](const std::vector<int>& members) {
        return order_complex(X, members).euler_characteristic();
    };

    std::vector<int> previous = F.base;
    long long chi_prev = chi_of(previous);
    rep.chi_base = chi_prev;

    rep.all_ok = true;
    for (int i = 0; i < static_cast<int>(F.levels.size()); ++i) {
        const auto& level = F.levels[i];
        StageCheck check;
        check.level = i;

        auto lower_complex = order_complex(X, level.lower);
        auto upper_complex = order_complex(X, level.upper);
        check.chi_lower = lower_complex.euler_characteristic();
        check.chi_upper = upper_complex.euler_characteristic();

        long long cone_sum = 0;
        for (const auto& info : level.critical)
            cone_sum += 1 - order_complex(X, info.link).euler_characteristic();
        check.euler_ok = (check.chi_lower == chi_prev + cone_sum);

        check.homology_equal =
            (reduced_homology(lower_complex) == reduced_homology(upper_complex));

        if (!check.euler_ok || !check.homology_equal) rep.all_ok = false;
        chi_prev = check.chi_upper;
        rep.stages.push_back(check);
    }

    rep.chi_total = order_complex(X).euler_characteristic();
    rep.cone_contribution = 0;
    for (const auto& level : F.levels)
        for (const auto& info : level.critical)
            rep.cone_contribution += 1 - order_complex(X, info.link).euler_characteristic();
    rep.global_euler_ok = (rep.chi_total == rep.chi_base + rep.cone_contribution);
    if (!rep.global_euler_ok) rep.all_ok = false;

    const std::vector<int>& last =
        F.levels.empty() ? F.base : F.levels.back().upper;
    rep.final_matches_direct =
        (reduced_homology(order_complex(X, last)) == reduced_homology(order_complex(X)));
    if (!rep.final_matches_direct) rep.all_ok = false;
    return rep;
}

CwSummary cw_summary(const Filtration& F) {
    CwSummary out;
    const Poset& X = F.host;

    out.all_spherical = true;
    out.discrete_space = true;
    for (const auto& level : F.levels) {
        for (const auto& info : level.critical) {
            CwEntry entry;
            entry.element = info.element;
            entry.t = level.t;
            entry.height = X.height_of(info.element);
            entry.link_homology = info.link_homology;

            const bool empty_link = info.link.empty();
            if (empty_link) {
                entry.cls.kind = CwClass::Empty;
                entry.cls.sphere_dim = -1;
            } else if (info.link_homology.trivial()) {
                entry.cls.kind = CwClass::Trivial;
            } else {
                entry.cls.kind = CwClass::Other;
                for (int d = 0; d <= X.height_of(info.element); ++d)
                    if (sphere_check(info.link_homology, d, false)) {
                        entry.cls.kind = CwClass::Sphere;
                        entry.cls.sphere_dim = d;
                        break;
                    }
            }

            if (entry.cls.kind != CwClass::Empty && entry.cls.kind != CwClass::Sphere)
                out.all_spherical = false;
            if (entry.height > 0 && entry.cls.kind != CwClass::Trivial)
                out.discrete_space = false;
            if (entry.cls.kind == CwClass::Empty) ++out.component_count;
            out.entries.push_back(std::move(entry));
        }
    }

    auto h = reduced_homology(order_complex(X));
    const int dim = order_complex(X).dimension();
    out.betti.assign(std::max(dim + 1, 1), 0);
    if (!X.empty()) out.betti[0] = h.betti(0) + 1;  // unreduced in degree 0
    for (int d = 1; d <= dim; ++d) out.betti[d] = h.betti(d);

    if (out.all_spherical) {
        int top = 0;
        for (const auto& e : out.entries) top = std::max(top, e.cls.sphere_dim + 1);
        out.cells.assign(std::max(top + 1, static_cast<int>(out.betti.size())), 0);
        for (const auto& e : out.entries) ++out.cells[e.cls.sphere_dim + 1];
        out.morse_inequalities_ok = true;
        for (std::size_t d = 0; d < out.betti.size(); ++d) {
            long long cells_d = d < out.cells.size() ? out.cells[d] : 0;
            if (out.betti[d] > cells_d) out.morse_inequalities_ok = false;
        }
    }
    return out;
}

}  // namespace pomo
