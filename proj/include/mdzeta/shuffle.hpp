#pragma once

#include <utility>
#include <vector>

#include "mdzeta/symbol.hpp"

namespace mdzeta {

/// One slot of an iterated-integral word, ordered by decreasing integration
/// variable. A Source slot carries the summed 2-form of its factor (the
/// f_0 cell of the diagrams); an Integrator slot is a bare volume form.
enum class SlotKind { Source, Integrator };

struct Slot {
  SlotKind kind = SlotKind::Source;
  int factor = 0;  // 0 = alpha generator, 1 = beta generator
  friend bool operator==(const Slot&, const Slot&) = default;
};

using AxisWord = std::vector<Slot>;

/// Per-axis interleavings of two factors' slot words.
struct ShuffleDiagram {
  AxisWord axis1;
  AxisWord axis2;
};

/// All order-preserving merges of p slots with q slots as 0/1 patterns,
/// deterministic order, C(p+q, p) of them.
std::vector<std::vector<int>> interleavings(int p, int q);

/// One denominator factor produced by scanning an axis: the sum of the
/// activated generators (bit 0 = alpha, bit 1 = beta) raised to `exponent`.
struct AxisFactor {
  int gens = 0;
  int exponent = 0;
  friend bool operator==(const AxisFactor&, const AxisFactor&) = default;
};

/// Scans slots in decreasing-variable order. A Source activates its
/// generator; every slot then contributes one factor of the sum of the
/// activated generators; consecutive equal sums merge into one power.
/// Throws MalformedDiagram if an Integrator precedes every Source.
std::vector<AxisFactor> axis_scan(const AxisWord& word);

/// Scans both axes and canonicalizes to Sup1 (both axes keyed by the same
/// generator) or SupRho (keyed by different generators; relabeled so the
/// axis-2 lone generator is alpha, valid because the double sum is
/// symmetric in the pair of summation variables).
MdzvSymbol diagram_to_symbol(const ShuffleDiagram& d);

struct DiagramExpansion {
  std::vector<ShuffleDiagram> diagrams;
  LinearCombo combo;
};

/// Emits every diagram of the product of two depth-1 factors. A factor with
/// exponents (a; c) contributes the words [Source, Integrator^(a-1)] on
/// axis 1 and [Source, Integrator^(c-1)] on axis 2; the product runs over
/// all C(a+b, a) * C(c+d, c) interleavings, each mapped to its symbol with
/// coefficient +1.
DiagramExpansion integral_shuffle_diagrams(std::pair<int, int> e1, std::pair<int, int> e2);
LinearCombo integral_shuffle(std::pair<int, int> e1, std::pair<int, int> e2);

/// Word shuffle of classical multiple zeta values: encode each factor as
/// [Source, Integrator^(m1-1), Source, Integrator^(m2-1), ...], merge,
/// decode with the one-axis scan.
LinearCombo mzv_shuffle(const MzvSymbol& s1, const MzvSymbol& s2);

}  // namespace mdzeta
