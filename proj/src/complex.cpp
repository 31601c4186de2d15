#include "pomo/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pomo/errors.hpp"

namespace pomo {

SimplicialComplex SimplicialComplex::from_simplices(std::vector<std::string> vertex_names,
                                                    const std::vector<Simplex>& simplices) {
    std::set<Simplex> closed;
    // close downward over non-empty subsets
    for (const Simplex& s : simplices) {
        Simplex sorted = s;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        const int k = static_cast<int>(sorted.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Simplex face;
            for (int b = 0; b < k; ++b)
                if (mask & (1u << b)) face.push_back(sorted[b]);
            closed.insert(std::move(face));
        }
    }

    SimplicialComplex L;
    L.vertex_names_ = std::move(vertex_names);
    for (const Simplex& s : closed) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d >= static_cast<int>(L.by_dim_.size())) L.by_dim_.resize(d + 1);
        L.by_dim_[d].push_back(s);
    }
    for (auto& level : L.by_dim_) std::sort(level.begin(), level.end());
    L.rebuild_index();
    return L;
}

void SimplicialComplex::rebuild_index() {
    index_.clear();
    for (const auto& level : by_dim_)
        for (int i = 0; i < static_cast<int>(level.size()); ++i) index_.emplace(level[i], i);
}

std::size_t SimplicialComplex::simplex_count() const {
    std::size_t total = 0;
    for (const auto& level : by_dim_) total += level.size();
    return total;
}

std::size_t SimplicialComplex::count_in_dim(int d) const {
    if (d < 0 || d > dimension()) return 0;
    return by_dim_[d].size();
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) > 0; }

int SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) fail(ErrorKind::UnknownElement, "simplex not in complex");
    return it->second;
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(simplex_count());
    for (const auto& level : by_dim_) out.insert(out.end(), level.begin(), level.end());
    return out;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[d].size());
    return chi;
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const {
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out << ",";
        out << vertex_names_[s[i]];
    }
    out << "}";
    return out.str();
}

SimplicialComplex order_complex(const Poset& X) {
    std::vector<int> all(X.size());
    for (int i = 0; i < X.size(); ++i) all[i] = i;
    return order_complex(X, all);
}

SimplicialComplex order_complex(const Poset& X, const std::vector<int>& members) {
    // Enumerate chains by ascending extension; each chain appears exactly
    // once in its own poset order, then gets re-sorted by display index.
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<Simplex> chains;
    Simplex current;
    auto extend = [&](auto&& self, int last) -> void {
        chains.push_back(current);
        for (int v : sorted) {
            if (!X.less(last, v)) continue;
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    for (int v : sorted) {
        current.push_back(v);
        extend(extend, v);
        current.pop_back();
    }

    return SimplicialComplex::from_simplices(X.elements(), chains);
}

SimplicialComplex cone(const std::string& apex, const SimplicialComplex& base) {
    for (const auto& name : base.vertex_names())
        if (name == apex) fail(ErrorKind::ApexCollision, "apex '" + apex + "' is a base vertex");

    std::vector<std::string> names = base.vertex_names();
    const int apex_index = static_cast<int>(names.size());
    names.push_back(apex);

    std::vector<Simplex> sims;
    sims.push_back({apex_index});
    for (const Simplex& s : base.all_simplices()) {
        sims.push_back(s);
        Simplex with_apex = s;
        with_apex.push_back(apex_index);
        sims.push_back(std::move(with_apex));
    }
    return SimplicialComplex::from_simplices(std::move(names), sims);
}

Poset face_poset(const SimplicialComplex& L) {
    const auto sims = L.all_simplices();
    std::vector<std::string> names;
    names.reserve(sims.size());
    for (const auto& s : sims) names.push_back(L.simplex_label(s));

    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < sims.size(); ++i)
        for (std::size_t j = 0; j < sims.size(); ++j) {
            if (sims[i].size() >= sims[j].size()) continue;
            if (std::includes(sims[j].begin(), sims[j].end(), sims[i].begin(), sims[i].end()))
                pairs.emplace_back(names[i], names[j]);
        }
    return Poset::from_relations(names, pairs);
}

SimplicialComplex simplicial_join(const SimplicialComplex& K, const SimplicialComplex& T) {
    std::vector<std::string> names = K.vertex_names();
    const int offset = static_cast<int>(names.size());
    for (const auto& id : T.vertex_names()) {
        for (const auto& existing : K.vertex_names())
            if (existing == id)
                fail(ErrorKind::DuplicateElement, "join requires disjoint vertex sets ('" + id + "')");
        names.push_back(id);
    }

    const auto left = K.all_simplices();
    std::vector<Simplex> right;
    for (const Simplex& t : T.all_simplices()) {
        Simplex shifted = t;
        for (int& v : shifted) v += offset;
        right.push_back(std::move(shifted));
    }

    std::vector<Simplex> sims;
    sims.insert(sims.end(), left.begin(), left.end());
    sims.insert(sims.end(), right.begin(), right.end());
    for (const Simplex& s : left)
        for (const Simplex& t : right) {
            Simplex both = s;
            both.insert(both.end(), t.begin(), t.end());
            sims.push_back(std::move(both));
        }
    return SimplicialComplex::from_simplices(std::move(names), sims);
}

}  // namespace pomo
