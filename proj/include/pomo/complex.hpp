#pragma once

#include <map>
#include <string>
#include <vector>

#include "pomo/poset.hpp"

namespace pomo {

// Simplex: sorted list of vertex indices into the owning complex.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex, all simplices stored explicitly and
// grouped by dimension. The empty complex (no vertices) is legal.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closes the given simplices downward and adds every named vertex that
    // appears in a simplex. Vertices not used by any simplex are kept as
    // isolated 0-simplices only if listed in `vertex_names` and present in
    // some simplex; order_complex always lists every element as a chain.
    static SimplicialComplex from_simplices(std::vector<std::string> vertex_names,
                                            const std::vector<Simplex>& simplices);

    bool empty() const { return by_dim_.empty(); }
    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t simplex_count() const;
    std::size_t count_in_dim(int d) const;

    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<std::vector<Simplex>>& simplices_by_dim() const { return by_dim_; }
    const std::vector<Simplex>& simplices_of_dim(int d) const { return by_dim_[d]; }

    bool contains(const Simplex& s) const;
    // Position of s among the dim-sorted simplices of its dimension.
    int index_of(const Simplex& s) const;

    // All simplices ordered by (dimension, lexicographic vertex list).
    std::vector<Simplex> all_simplices() const;

    long long euler_characteristic() const;

    std::string simplex_label(const Simplex& s) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<Simplex>> by_dim_;  // by_dim_[d]: sorted lex
    std::map<Simplex, int> index_;              // simplex -> index within its dim

    void rebuild_index();
};

// Complex of non-empty chains of X; dimension equals height(X).
SimplicialComplex order_complex(const Poset& X);
// Same, over the subposet induced on `members` (vertex names from X).
SimplicialComplex order_complex(const Poset& X, const std::vector<int>& members);

// Simplicial cone with the given apex; cone over the empty complex is a
// single vertex. Throws ApexCollision if the apex names an existing vertex.
SimplicialComplex cone(const std::string& apex, const SimplicialComplex& base);

// Poset of simplices ordered by proper inclusion. Element ids are the
// simplex labels; display order is (dimension, lexicographic).
Poset face_poset(const SimplicialComplex& L);

// K ∪ T ∪ {σ ∪ τ}; vertex sets must be disjoint (named apart by caller).
SimplicialComplex simplicial_join(const SimplicialComplex& K, const SimplicialComplex& T);

}  // namespace pomo
