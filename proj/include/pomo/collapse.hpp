#pragma once

#include <optional>

#include "pomo/complex.hpp"
#include "pomo/homology.hpp"

namespace pomo {

// Repeatedly removes the lexicographically smallest free pair (a simplex
// with exactly one proper coface, together with that coface) until none
// remains. Each step is an elementary collapse, so the result has the same
// homotopy type.
SimplicialComplex greedy_collapse(const SimplicialComplex& L);

// Backtracking search over collapse sequences, exploring at most `budget`
// steps. True iff some sequence reaches a single vertex.
bool collapse_search(const SimplicialComplex& L, long long budget);

enum class Triviality {
    CollapsibleCertified,        // collapses to a point: contractible
    HomologyTrivialUnresolved,   // reduced homology vanishes, no certificate
    NotTrivial,                  // non-zero reduced homology
};

const char* to_string(Triviality t);

struct TrivialityVerdict {
    Triviality status = Triviality::HomologyTrivialUnresolved;
    std::optional<HomologyGroup> witness;  // for NotTrivial
    bool empty_complex = false;

    bool certified_trivial() const { return status == Triviality::CollapsibleCertified; }
};

// Tiered decision: homology refutation, then greedy collapse, then the
// bounded backtracking search. The empty complex is reported as
// HomologyTrivialUnresolved with empty_complex set: it has no non-zero
// reduced homology in dimensions >= 0, but it is not contractible either.
TrivialityVerdict triviality_verdict(const SimplicialComplex& L, long long budget);

}  // namespace pomo
