#pragma once

#include <optional>
#include <utility>

#include "semiord/spectrum.hpp"
#include "semiord/witness.hpp"

namespace semiord {

/// Outcome of the full decision procedure for "is there a nonzero a with
/// a x <= a y" over the coefficientwise order.
struct DecisionOutcome {
  enum class Kind {
    WitnessFound,       // power + catalytic witness, both re-verified
    ImpossibleForever,  // spectrum point with φ(x) > φ(y): no witness exists
    BudgetExhausted,    // neither found within the budget
  };
  Kind kind;
  std::optional<PowerWitness> power;
  std::optional<CatalyticWitness> catalytic;
  DominanceVerdict spectrum;
};

inline std::string to_string(DecisionOutcome::Kind k) {
  switch (k) {
    case DecisionOutcome::Kind::WitnessFound: return "WitnessFound";
    case DecisionOutcome::Kind::ImpossibleForever: return "ImpossibleForever";
    case DecisionOutcome::Kind::BudgetExhausted: return "BudgetExhausted";
  }
  return "?";
}

/// (1) a strict reverse inequality at any spectrum point excludes witnesses
/// outright (easy direction); (2) otherwise search the (k, n) grid — ties in
/// the spectrum do not block witnesses; (3) report budget exhaustion with
/// the spectrum evidence.
inline DecisionOutcome dominance_decide(const PositiveConstantPolynomial& x,
                                        const PositiveConstantPolynomial& y, const Polynomial& u,
                                        const SearchBudget& budget = {}) {
  DominanceVerdict verdict = strict_dominance_check(x, y, u);
  if (verdict.kind == DominanceVerdict::Kind::RefutedAt)
    return {DecisionOutcome::Kind::ImpossibleForever, std::nullopt, std::nullopt,
            std::move(verdict)};

  if (auto w = power_witness_search(x, y, u, budget.k_max, budget.n_max)) {
    auto cat = catalytic_from_power(x, y, u, *w);
    return {DecisionOutcome::Kind::WitnessFound, std::move(w), std::move(cat),
            std::move(verdict)};
  }
  return {DecisionOutcome::Kind::BudgetExhausted, std::nullopt, std::nullopt,
          std::move(verdict)};
}

}  // namespace semiord
