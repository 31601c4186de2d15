#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pomo/complex.hpp"
#include "pomo/numbers.hpp"

namespace pomo {

struct HomologyGroup {
    int dim = 0;
    long long betti = 0;
    std::vector<Integer> torsion;  // coefficients > 1, divisibility-ordered

    bool trivial() const { return betti == 0 && torsion.empty(); }
};

// Reduced integer homology, one entry per dimension 0..dim(L).
struct HomologySummary {
    std::vector<HomologyGroup> groups;

    bool trivial() const;
    long long betti(int d) const;
    std::vector<Integer> torsion_at(int d) const;
    // First non-trivial group, if any.
    std::optional<HomologyGroup> first_nonzero() const;
    std::string to_string() const;  // e.g. "H~0=0 H~1=Z+Z/2"

    friend bool operator==(const HomologySummary& a, const HomologySummary& b);
};

// Computed by Smith normal form on the augmented chain complex.
HomologySummary reduced_homology(const SimplicialComplex& L);

// Homology-sphere proxy: reduced homology equals that of S^n (n = -1 means
// the empty complex). Necessary for the homotopy claim, not sufficient.
bool sphere_check(const SimplicialComplex& L, int n);
bool sphere_check(const HomologySummary& h, int n, bool is_empty_complex);

// Every descending link has the homology of a sphere of dimension
// height(x) - 1.
bool h_regular_check(const Poset& X);

}  // namespace pomo
