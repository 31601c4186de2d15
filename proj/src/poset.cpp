#include "pomo/poset.hpp"

#include <algorithm>

#include "pomo/errors.hpp"

namespace pomo {

namespace {

// Warshall closure; n stays at desk scale so the cubic pass is fine.
void transitive_closure(std::vector<std::vector<bool>>& rel) {
    const int n = static_cast<int>(rel.size());
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!rel[i][k]) continue;
            for (int j = 0; j < n; ++j)
                if (rel[k][j]) rel[i][j] = true;
        }
}

}  // namespace

Poset Poset::from_relations(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
    Poset X;
    X.names_ = elements;
    for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
        if (!X.index_.emplace(elements[i], i).second)
            fail(ErrorKind::DuplicateElement, "element '" + elements[i] + "' declared twice");
    }
    const int n = X.size();
    X.less_.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : pairs) {
        int i = X.index_of(a), j = X.index_of(b);
        if (i == j) fail(ErrorKind::CycleDetected, "reflexive pair '" + a + " < " + a + "'");
        X.less_[i][j] = true;
    }
    transitive_closure(X.less_);
    for (int i = 0; i < n; ++i)
        if (X.less_[i][i])
            fail(ErrorKind::CycleDetected, "relation has a cycle through '" + X.names_[i] + "'");
    X.rebuild_covers();
    return X;
}

void Poset::rebuild_covers() {
    const int n = size();
    covers_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!less_[i][j]) continue;
            bool direct = true;
            for (int k = 0; k < n && direct; ++k)
                if (less_[i][k] && less_[k][j]) direct = false;
            covers_[i][j] = direct;
        }
}

int Poset::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) fail(ErrorKind::UnknownElement, "no element '" + id + "'");
    return it->second;
}

std::optional<int> Poset::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (covers_[i][j]) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> Poset::relation_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
            if (less_[i][j]) out.emplace_back(i, j);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Poset::upper_covers(int a) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (covers_[a][j]) out.push_back(j);
    return out;
}

std::vector<int> Poset::lower_covers(int a) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (covers_[j][a]) out.push_back(j);
    return out;
}

int Poset::height_of(int a) const {
    // longest chain in {y : y <= a}, measured in edges
    std::vector<int> memo(size(), -1);
    auto depth = [&](auto&& self, int v) -> int {
        if (memo[v] >= 0) return memo[v];
        int best = 0;
        for (int u = 0; u < size(); ++u)
            if (covers_[u][v]) best = std::max(best, self(self, u) + 1);
        return memo[v] = best;
    };
    return depth(depth, a);
}

int Poset::height() const {
    int best = size() == 0 ? 0 : 0;
    for (int i = 0; i < size(); ++i) best = std::max(best, height_of(i));
    return best;
}

std::vector<int> Poset::principal_down(int a, bool strict) const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (less_[i][a] || (!strict && i == a)) out.push_back(i);
    return out;
}

bool Poset::is_down_set(const std::vector<int>& members) const {
    std::vector<bool> in(size(), false);
    for (int v : members) in[v] = true;
    for (int v : members)
        for (int u = 0; u < size(); ++u)
            if (less_[u][v] && !in[u]) return false;
    return true;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool maximal = true;
        for (int j = 0; j < size() && maximal; ++j)
            if (less_[i][j]) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i) {
        bool minimal = true;
        for (int j = 0; j < size() && minimal; ++j)
            if (less_[j][i]) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<std::pair<int, Poset::BeatKind>> Poset::beat_points() const {
    std::vector<std::pair<int, BeatKind>> out;
    for (int i = 0; i < size(); ++i) {
        if (upper_covers(i).size() == 1) out.emplace_back(i, BeatKind::Up);
        if (lower_covers(i).size() == 1) out.emplace_back(i, BeatKind::Down);
    }
    return out;
}

std::vector<int> Poset::indices_of(const std::vector<std::string>& ids) const {
    std::vector<int> out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(index_of(id));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Poset::complement(const std::vector<int>& members) const {
    std::vector<bool> in(size(), false);
    for (int v : members) in[v] = true;
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

std::vector<std::string> Poset::names_of(const std::vector<int>& members) const {
    std::vector<std::string> out;
    out.reserve(members.size());
    for (int v : members) out.push_back(names_[v]);
    return out;
}

Poset induced_subposet(const Poset& X, const std::vector<int>& members) {
    std::vector<int> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    Poset S;
    const int n = static_cast<int>(sorted.size());
    S.names_.reserve(n);
    for (int v : sorted) {
        S.index_.emplace(X.names_[v], static_cast<int>(S.names_.size()));
        S.names_.push_back(X.names_[v]);
    }
    S.less_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (X.less_[sorted[i]][sorted[j]]) S.less_[i][j] = true;
    S.rebuild_covers();
    return S;
}

Poset opposite(const Poset& X) {
    Poset Y;
    Y.names_ = X.names_;
    Y.index_ = X.index_;
    const int n = X.size();
    Y.less_.assign(n, std::vector<bool>(n, false));
    Y.covers_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Y.less_[i][j] = X.less_[j][i];
            Y.covers_[i][j] = X.covers_[j][i];
        }
    return Y;
}

Poset join(const Poset& X, const Poset& Y) {
    bool collision = false;
    for (const auto& id : Y.names_)
        if (X.index_.count(id)) collision = true;

    auto name_left = [&](const std::string& id) { return collision ? "L." + id : id; };
    auto name_right = [&](const std::string& id) { return collision ? "R." + id : id; };

    Poset J;
    const int nx = X.size(), ny = Y.size(), n = nx + ny;
    J.names_.reserve(n);
    for (const auto& id : X.names_) J.names_.push_back(name_left(id));
    for (const auto& id : Y.names_) J.names_.push_back(name_right(id));
    for (int i = 0; i < n; ++i) J.index_.emplace(J.names_[i], i);

    J.less_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < nx; ++j) J.less_[i][j] = X.less_[i][j];
    for (int i = 0; i < ny; ++i)
        for (int j = 0; j < ny; ++j) J.less_[nx + i][nx + j] = Y.less_[i][j];
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) J.less_[i][nx + j] = true;
    J.rebuild_covers();
    return J;
}

}  // namespace pomo
