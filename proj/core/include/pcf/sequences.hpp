#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pcf/series.hpp"

namespace pcf {

struct UnknownSequence : std::invalid_argument {
  explicit UnknownSequence(std::string_view name)
      : std::invalid_argument("unknown sequence name: " + std::string(name)) {}
};

// Closed enumeration; unknown names are rejected at parse time.
enum class SequenceName {
  Factorial,                 // n!
  Derangement,               // D_n = n! sum (-1)^k/k!, starts 1,0,1,2,9,...
  Arrangement,               // A_n = n! sum 1/k!, starts 1,2,5,16,65,...
  Indecomposable,            // I_n, I_0 = 0: 0,1,1,3,13,71,...
  IndecomposableDerangement, // D'_n, D'_0 = -1: -1,0,1,2,8,40,...
  Reversion,                 // G_n, G_0 = 0, G_1 = -1: 0,-1,1,0,1,4,22,...
  StabilizedIntervalFree,    // J_n: 1,1,1,2,7,34,...
  Harmonic,                  // H_n as exact rationals, H_0 = 0
};

// Accepts the single-letter symbols D, A, I, D', G, J, H (D' also as
// "Dprime") and the spelled-out names.
std::optional<SequenceName> parse_sequence_name(std::string_view s);
std::string sequence_token(SequenceName name);

// First N+1 terms, exact.  I, D', G and J are produced from the factorial
// series via recip/revert, so they stay consistent with the generating
// function identities by construction.
std::vector<Rational> gen_sequence(SequenceName name, std::size_t n);

// Coefficients [n!/0!, n!/1!, ..., n!/n!] of p_n(t) = n! sum_k t^k/k!.
// p_n(0) = n!, p_n(-1) = D_n, p_n(1) = A_n.
std::vector<Rational> p_poly(std::size_t n);

// The factorial series sum_{k<=n} k! X^k.
Series factorial_series(std::size_t n);

}  // namespace pcf
