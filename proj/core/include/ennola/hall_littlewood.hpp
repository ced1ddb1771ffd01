#pragma once

#include <functional>
#include <vector>

#include "ennola/partition.hpp"
#include "ennola/symfunc.hpp"
#include "ennola/types.hpp"

namespace ennola {

/// Semistandard tableau stored row by row.
using Tableau = std::vector<std::vector<int>>;

/// All semistandard tableaux of shape nu and content lambda.
std::vector<Tableau> semistandard_tableaux(const Partition& nu, const Partition& lambda);

/// Row reading word: rows from bottom to top, each left to right.
std::vector<int> reading_word(const Tableau& t);

/// Lascoux-Schuetzenberger charge of a word whose content is a partition.
int charge(const std::vector<int>& word);

/// K_{nu lambda}(q) as a sum of q^charge over tableaux (memoized).
PolyQU kostka_foulkes(const Partition& nu, const Partition& lambda);

/// q^{n(lambda)} K_{nu lambda}(1/q).
PolyQU transformed_kostka(const Partition& nu, const Partition& lambda);

/// H~_lambda(x; q) = sum_nu K~_{nu lambda}(q) s_nu, one alphabet, Schur basis.
SymFunc transformed_hl(const Partition& lambda);

/// prod_i base(omega^i)(x^{d_i}; q^{d_i})^{m_i}, in the power-sum basis.
SymFunc extend_to_type(const std::function<SymFunc(const Partition&)>& base, const Type& omega);

}  // namespace ennola
