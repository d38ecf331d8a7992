#pragma once

// Deliberate corruptions used to show that the verification suites can fail.
// Every operator that accepts a Mutation ignores the ones not addressed to it.

#include <optional>
#include <string>
#include <string_view>

namespace awvec {

enum class Mutation {
  None,
  T1ReflectionSign,       // sign of the f[1/z] term in T1 flipped
  Y12DroppedFactor,       // factor (aq - z) dropped from the f[z/q] term of Y12
  Y21PrintedDenominator,  // first term of Y21 over (1 - qz^2) instead of (q - z^2)
  BesselOddSign,          // sign of the odd part of the nonsymmetric Bessel function flipped
  JacobiAlphaBetaSign,    // (alpha - beta) replaced by (beta - alpha) in the Jacobi Y operator
};

inline std::string_view mutation_name(Mutation m) {
  switch (m) {
    case Mutation::None: return "none";
    case Mutation::T1ReflectionSign: return "t1_reflection_sign";
    case Mutation::Y12DroppedFactor: return "y12_dropped_factor";
    case Mutation::Y21PrintedDenominator: return "y21_printed_denominator";
    case Mutation::BesselOddSign: return "bessel_odd_sign";
    case Mutation::JacobiAlphaBetaSign: return "jacobi_alpha_beta_sign";
  }
  return "none";
}

inline std::optional<Mutation> parse_mutation(std::string_view s) {
  for (Mutation m : {Mutation::None, Mutation::T1ReflectionSign, Mutation::Y12DroppedFactor,
                     Mutation::Y21PrintedDenominator, Mutation::BesselOddSign, Mutation::JacobiAlphaBetaSign})
    if (mutation_name(m) == s) return m;
  return std::nullopt;
}

}  // namespace awvec
