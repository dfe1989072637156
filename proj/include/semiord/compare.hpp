#pragma once

#include <string>

namespace semiord {

/// Outcome of comparing two elements of a preordered structure.
///
/// Equivalent means both directions hold; it is deliberately not collapsed
/// to equality. Unknown is reserved for semi-decision procedures (ordered
/// fractions under a search budget) and is never returned by the concrete
/// instances themselves.
enum class Comparison {
  LessStrict,
  GreaterStrict,
  Equivalent,
  Incomparable,
  Unknown,
};

/// Builds the four-valued outcome from the two one-sided relations.
inline Comparison comparison_from(bool le, bool ge) {
  if (le && ge) return Comparison::Equivalent;
  if (le) return Comparison::LessStrict;
  if (ge) return Comparison::GreaterStrict;
  return Comparison::Incomparable;
}

inline bool holds_le(Comparison c) {
  return c == Comparison::LessStrict || c == Comparison::Equivalent;
}

inline bool holds_ge(Comparison c) {
  return c == Comparison::GreaterStrict || c == Comparison::Equivalent;
}

inline Comparison reversed(Comparison c) {
  switch (c) {
    case Comparison::LessStrict: return Comparison::GreaterStrict;
    case Comparison::GreaterStrict: return Comparison::LessStrict;
    default: return c;
  }
}

/// Componentwise meet, used by product instances and coefficientwise orders.
inline Comparison meet(Comparison a, Comparison b) {
  if (a == Comparison::Unknown || b == Comparison::Unknown) return Comparison::Unknown;
  const bool le = holds_le(a) && holds_le(b);
  const bool ge = holds_ge(a) && holds_ge(b);
  return comparison_from(le, ge);
}

inline std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::LessStrict: return "LessStrict";
    case Comparison::GreaterStrict: return "GreaterStrict";
    case Comparison::Equivalent: return "Equivalent";
    case Comparison::Incomparable: return "Incomparable";
    case Comparison::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace semiord
