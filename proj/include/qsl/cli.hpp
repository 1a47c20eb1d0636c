#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qsl/quantum_probability.hpp"

namespace qsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line. args[0] is the program name. Reports go to out,
/// diagnostics to err; returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Four decimals, never "-0.0000".
std::string format_fixed4(double x);

/// "0.4409-0.0817i" style.
std::string format_complex4(QuantumProbability p);

/// 17 significant digits; parses back to the same double.
std::string format_full(double x);

}  // namespace qsl::cli
