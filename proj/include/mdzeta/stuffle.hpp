#pragma once

#include <utility>

#include "mdzeta/symbol.hpp"

namespace mdzeta {

/// Quasi-shuffle of classical multiple zeta values over interleavings of
/// the two increasing index chains, with diagonal merges.
LinearCombo mzv_stuffle(const MzvSymbol& s1, const MzvSymbol& s2);

/// Real-quadratic infinite-sum shuffle: the product of two depth-1 values
/// decomposed over the nine regions cut out by the mu- and nu-coordinate
/// trichotomies.
LinearCombo stuffle_real(std::pair<int, int> e1, std::pair<int, int> e2);

/// Imaginary-quadratic infinite-sum shuffle over the strict total order on
/// C+. Supports depth 1 x 1 (three terms) and depth 2 x 1 / 1 x 2 (five
/// terms, the unmerged ones depth 3 and carried for printing only).
LinearCombo stuffle_imaginary(const MdzvSymbol& s1, const MdzvSymbol& s2);

/// Change of variables gamma = beta - alpha: every Sub1(a,b;c,d) becomes
/// Sup1(a,b;c,d), coefficients preserved and merged.
LinearCombo lemma_rewrite(const LinearCombo& c);

}  // namespace mdzeta
