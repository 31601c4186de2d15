#include "pomo/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pomo {

namespace {

using SimplexSet = std::set<Simplex>;  // lex order doubles as the pair order

// number of proper cofaces present, per simplex
std::map<Simplex, int> coface_counts(const SimplexSet& sims) {
    std::map<Simplex, int> count;
    for (const auto& s : sims) count[s] = 0;
    for (const auto& t : sims) {
        const int k = static_cast<int>(t.size());
        for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
            // proper non-empty subsets
            Simplex face;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(t[b]);
            auto it = count.find(face);
            if (it != count.end()) ++it->second;
        }
    }
    return count;
}

void remove_with_counts(SimplexSet& sims, std::map<Simplex, int>& count, const Simplex& s) {
    const int k = static_cast<int>(s.size());
    for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
        Simplex face;
        for (int b = 0; b < k; ++b)
            if (mask & (1u << b)) face.push_back(s[b]);
        auto it = count.find(face);
        if (it != count.end()) --it->second;
    }
    sims.erase(s);
    count.erase(s);
}

// the unique proper coface of a free simplex (one dimension up)
Simplex unique_coface(const SimplexSet& sims, const Simplex& s) {
    for (const auto& t : sims) {
        if (t.size() != s.size() + 1) continue;
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) return t;
    }
    return {};
}

SimplexSet to_set(const SimplicialComplex& L) {
    auto all = L.all_simplices();
    return SimplexSet(all.begin(), all.end());
}

SimplicialComplex from_set(const SimplicialComplex& origin, const SimplexSet& sims) {
    return SimplicialComplex::from_simplices(origin.vertex_names(),
                                             std::vector<Simplex>(sims.begin(), sims.end()));
}

bool is_single_vertex(const SimplexSet& sims) {
    return sims.size() == 1 && sims.begin()->size() == 1;
}

std::string state_key(const SimplexSet& sims) {
    std::ostringstream out;
    for (const auto& s : sims) {
        for (int v : s) out << v << ',';
        out << ';';
    }
    return out.str();
}

}  // namespace

SimplicialComplex greedy_collapse(const SimplicialComplex& L) {
    SimplexSet sims = to_set(L);
    auto count = coface_counts(sims);

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (const auto& s : sims) {
            if (count.at(s) != 1) continue;
            Simplex t = unique_coface(sims, s);
            remove_with_counts(sims, count, t);
            remove_with_counts(sims, count, s);
            progressed = true;
            break;  // restart at the lex-smallest candidate
        }
    }
    return from_set(L, sims);
}

namespace {

// DFS over collapse sequences. Returns true if some sequence reaches a
// single vertex; decrements budget per expanded state.
bool search_collapses(SimplexSet& sims, std::map<Simplex, int>& count, long long& budget,
                      std::unordered_set<std::string>& visited) {
    if (is_single_vertex(sims)) return true;
    if (budget <= 0) return false;
    --budget;
    if (!visited.insert(state_key(sims)).second) return false;

    std::vector<Simplex> free_faces;
    for (const auto& s : sims)
        if (count.at(s) == 1) free_faces.push_back(s);

    for (const auto& s : free_faces) {
        if (!sims.count(s) || count.at(s) != 1) continue;
        Simplex t = unique_coface(sims, s);
        remove_with_counts(sims, count, t);
        remove_with_counts(sims, count, s);
        if (search_collapses(sims, count, budget, visited)) return true;
        // undo
        sims.insert(s);
        sims.insert(t);
        count = coface_counts(sims);
    }
    return false;
}

}  // namespace

bool collapse_search(const SimplicialComplex& L, long long budget) {
    if (L.empty()) return false;
    SimplexSet sims = to_set(L);
    auto count = coface_counts(sims);
    std::unordered_set<std::string> visited;
    return search_collapses(sims, count, budget, visited);
}

const char* to_string(Triviality t) {
    switch (t) {
        case Triviality::CollapsibleCertified: return "CollapsibleCertified";
        case Triviality::HomologyTrivialUnresolved: return "HomologyTrivialUnresolved";
        case Triviality::NotTrivial: return "NotTrivial";
    }
    return "?";
}

TrivialityVerdict triviality_verdict(const SimplicialComplex& L, long long budget) {
    TrivialityVerdict v;
    if (L.empty()) {
        // Not contractible, but carries no non-zero reduced homology in
        // dimensions >= 0 either; flagged so validators can warn.
        v.status = Triviality::HomologyTrivialUnresolved;
        v.empty_complex = true;
        return v;
    }

    auto h = reduced_homology(L);
    if (!h.trivial()) {
        v.status = Triviality::NotTrivial;
        v.witness = h.first_nonzero();
        return v;
    }

    auto collapsed = greedy_collapse(L);
    if (collapsed.simplex_count() == 1 && collapsed.dimension() == 0) {
        v.status = Triviality::CollapsibleCertified;
        return v;
    }
    if (collapse_search(L, budget)) {
        v.status = Triviality::CollapsibleCertified;
        return v;
    }
    v.status = Triviality::HomologyTrivialUnresolved;
    return v;
}

}  // namespace pomo
