#include "pomo/homology.hpp"

#include <algorithm>
#include <sstream>

#include "pomo/snf.hpp"

namespace pomo {

bool HomologySummary::trivial() const {
    for (const auto& g : groups)
        if (!g.trivial()) return false;
    return true;
}

long long HomologySummary::betti(int d) const {
    for (const auto& g : groups)
        if (g.dim == d) return g.betti;
    return 0;
}

std::vector<Integer> HomologySummary::torsion_at(int d) const {
    for (const auto& g : groups)
        if (g.dim == d) return g.torsion;
    return {};
}

std::optional<HomologyGroup> HomologySummary::first_nonzero() const {
    for (const auto& g : groups)
        if (!g.trivial()) return g;
    return std::nullopt;
}

std::string HomologySummary::to_string() const {
    std::ostringstream out;
    bool any = false;
    for (const auto& g : groups) {
        if (g.trivial()) continue;
        if (any) out << " ";
        any = true;
        out << "H~" << g.dim << "=";
        bool first = true;
        for (long long i = 0; i < g.betti; ++i) {
            out << (first ? "" : "+") << "Z";
            first = false;
        }
        for (const auto& t : g.torsion) {
            out << (first ? "" : "+") << "Z/" << t;
            first = false;
        }
    }
    if (!any) return "0";
    return out.str();
}

bool operator==(const HomologySummary& a, const HomologySummary& b) {
    auto normalized = [](const HomologySummary& h) {
        std::vector<HomologyGroup> gs = h.groups;
        while (!gs.empty() && gs.back().trivial()) gs.pop_back();
        return gs;
    };
    auto ga = normalized(a), gb = normalized(b);
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (ga[i].dim != gb[i].dim || ga[i].betti != gb[i].betti ||
            ga[i].torsion != gb[i].torsion)
            return false;
    }
    return true;
}

HomologySummary reduced_homology(const SimplicialComplex& L) {
    HomologySummary out;
    const int dim = L.dimension();
    if (dim < 0) return out;

    std::vector<SmithSummary> snf(dim + 1);
    for (int d = 0; d <= dim; ++d) snf[d] = smith_normal_form(boundary_matrix(L, d));

    for (int d = 0; d <= dim; ++d) {
        HomologyGroup g;
        g.dim = d;
        const long long n_d = static_cast<long long>(L.count_in_dim(d));
        const long long rank_d = snf[d].rank;
        const long long rank_up = (d + 1 <= dim) ? snf[d + 1].rank : 0;
        g.betti = n_d - rank_d - rank_up;
        if (d + 1 <= dim) g.torsion = snf[d + 1].torsion();
        out.groups.push_back(std::move(g));
    }
    return out;
}

bool sphere_check(const HomologySummary& h, int n, bool is_empty_complex) {
    if (n == -1) return is_empty_complex;
    if (is_empty_complex) return false;
    for (const auto& g : h.groups) {
        if (!g.torsion.empty()) return false;
        if (g.dim == n ? g.betti != 1 : g.betti != 0) return false;
    }
    return h.betti(n) == 1;  // also fails when n exceeds the dimension
}

bool sphere_check(const SimplicialComplex& L, int n) {
    if (n < -1) return false;
    return sphere_check(reduced_homology(L), n, L.empty());
}

bool h_regular_check(const Poset& X) {
    for (int x = 0; x < X.size(); ++x) {
        auto link = X.principal_down(x, /*strict=*/true);
        if (!sphere_check(order_complex(X, link), X.height_of(x) - 1)) return false;
    }
    return true;
}

}  // namespace pomo
