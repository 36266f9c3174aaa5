#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mdzeta/numeric.hpp"
#include "mdzeta/symbol.hpp"

namespace mdzeta {

/// A linear combination asserted to sum to zero, obtained by equating two
/// expansions of the same product (combo = stuffle - integral shuffle,
/// after the Sub1 -> Sup1 rewrite).
struct Relation {
  Signature signature = Signature::Real;
  std::pair<int, int> e1{0, 0};
  std::pair<int, int> e2{0, 0};
  LinearCombo combo;
  std::string provenance;
  bool mzv = false;
};

Relation derive_relation(Signature signature, std::pair<int, int> e1, std::pair<int, int> e2);

/// Classical analogue: mzv_stuffle - mzv_shuffle of two MZV factors.
Relation derive_mzv_relation(const MzvSymbol& s1, const MzvSymbol& s2);

/// Hard-coded transcriptions of the printed relations for the (2;2)x(2;2)
/// product, in combo orientation (stuffle minus shuffle, everything equal
/// to zero).
bool has_printed_transcription(const Relation& r);
LinearCombo printed_transcription(Signature signature);

struct CoeffDiff {
  Symbol symbol;
  Rational engine;
  Rational printed;
};

/// Symbol-by-symbol coefficient diff of a derived (2;2)x(2;2) relation
/// against the printed transcription. Empty means exact agreement.
std::vector<CoeffDiff> compare_with_printed(const Relation& r);

struct SymbolLine {
  Symbol symbol;
  Rational coeff;
  std::complex<double> value;
  double tail = 0.0;
};

struct VerificationReport {
  Relation relation;
  std::string domain;
  std::vector<Truncation> truncations;   // ascending; last is the requested one
  std::vector<SymbolLine> per_symbol;    // at the largest truncation
  std::vector<double> residuals;         // |sum c_i v_i| per truncation
  double budget = 0.0;                   // sum |c_i| tail_i at the largest
  double floor_tol = 1e-9;
  std::string verdict;                   // pass / fail / inconclusive
  // Residuals of the printed transcription over the same symbol values,
  // present when a transcription exists for this relation.
  std::vector<double> printed_residuals;
  std::vector<CoeffDiff> printed_diff;
  bool has_printed_variant = false;
};

/// Evaluates the relation at {T/2, 3T/4, T}, reports residuals against the
/// combined tail budget. Verdict is pass iff the final residual is at most
/// max(budget, floor_tol).
VerificationReport verify_numeric(const Relation& r, const EvalDomain& domain,
                                  const Truncation& trunc, double floor_tol = 1e-9);

std::string to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

}  // namespace mdzeta
