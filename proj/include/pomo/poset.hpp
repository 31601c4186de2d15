#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pomo {

// Finite poset. Elements carry opaque string identifiers with a stable
// display order (construction order); all set-valued results are sorted by
// display index. The strict order is stored transitively closed, and the
// cover relation is its transitive reduction.
class Poset {
public:
    Poset() = default;

    // Closes `pairs` transitively; rejects cycles and duplicate ids.
    // Pairs may be any valid strict-order pairs, not only covers.
    static Poset from_relations(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& pairs);

    int size() const { return static_cast<int>(names_.size()); }
    bool empty() const { return names_.empty(); }
    const std::vector<std::string>& elements() const { return names_; }
    const std::string& name_of(int i) const { return names_[i]; }

    int index_of(const std::string& id) const;  // throws UnknownElement
    std::optional<int> find(const std::string& id) const;

    bool less(int a, int b) const { return less_[a][b]; }  // a < b
    bool comparable(int a, int b) const { return less_[a][b] || less_[b][a]; }
    bool covers_pair(int lower, int upper) const { return covers_[lower][upper]; }

    // Cover pairs (lower, upper), sorted by (lower, upper) display index.
    std::vector<std::pair<int, int>> cover_pairs() const;
    // All strict-order pairs (a, b) with a < b, same ordering.
    std::vector<std::pair<int, int>> relation_pairs() const;

    std::vector<int> upper_covers(int a) const;
    std::vector<int> lower_covers(int a) const;

    int height() const;
    int height_of(int a) const;  // height of {y : y <= a}

    // strict=false: U_a = {y : y <= a};  strict=true: the descending link.
    std::vector<int> principal_down(int a, bool strict) const;

    bool is_down_set(const std::vector<int>& members) const;

    std::vector<int> maximal_elements() const;
    std::vector<int> minimal_elements() const;

    enum class BeatKind { Up, Down };
    // Up beat points have a unique cover above, down beat points a unique
    // cover below; an element may be both.
    std::vector<std::pair<int, BeatKind>> beat_points() const;

    // Validated, sorted, deduplicated index set from identifiers.
    std::vector<int> indices_of(const std::vector<std::string>& ids) const;
    std::vector<int> complement(const std::vector<int>& members) const;
    std::vector<std::string> names_of(const std::vector<int>& members) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<bool>> less_;    // transitively closed strict order
    std::vector<std::vector<bool>> covers_;  // transitive reduction

    void rebuild_covers();
    friend Poset induced_subposet(const Poset&, const std::vector<int>&);
    friend Poset opposite(const Poset&);
    friend Poset join(const Poset&, const Poset&);
};

// Restriction of the order to `members`; covers are recomputed inside the
// subset (they need not be covers of the host).
Poset induced_subposet(const Poset& X, const std::vector<int>& members);

Poset opposite(const Poset& X);

// Ordinal sum: everything in X below everything in Y. On identifier
// collision every id is prefixed "L." / "R.".
Poset join(const Poset& X, const Poset& Y);

}  // namespace pomo
