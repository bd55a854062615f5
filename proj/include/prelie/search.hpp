#pragma once

#include "prelie/algebra.hpp"
#include "prelie/forms.hpp"

#include <vector>

namespace prelie {

/// Candidate entry values lo..hi divided by each denominator, deduplicated
/// and sorted.
std::vector<Rational> grid_values(long lo, long hi, const std::vector<long>& denominators = {1});

// Early-exit predicates used by the grid searches; they follow the
// defining identities directly and skip the cross-checking of the full
// verdict functions. Property tests pin them to the checked paths.
bool torsion_vanishes(const Algebra& a, const Matrix& op);
bool rota_baxter_holds(const Algebra& a, const Matrix& op, const Rational& weight);
bool s_bracket_vanishes(const Algebra& a, const Matrix& sym);

struct GridSearchResult {
    std::vector<Matrix> hits; // in lexicographic entry order
    std::size_t candidates = 0;
};

GridSearchResult search_nijenhuis(const Algebra& a, const std::vector<Rational>& values);
GridSearchResult search_rota_baxter(const Algebra& a, const Rational& weight,
                                    const std::vector<Rational>& values);
/// Enumerates symmetric matrices only.
GridSearchResult search_smatrix(const Algebra& a, const std::vector<Rational>& values);

} // namespace prelie
