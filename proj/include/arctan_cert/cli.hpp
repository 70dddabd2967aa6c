#pragma once

#include "arctan_cert/approximant.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arctan_cert::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kSatisfied = 0, kViolated = 1, kUsage = 2 };

inline constexpr std::string_view kCsvHeader = "family,n,interval,sup_error,arg_max,claimed_bound,satisfied";

struct FamilySpec {
    std::string family;
    std::optional<unsigned> n;
    std::optional<double> m; // cheb only: approximate atan(m x)

    /// Approximant for this spec with the given side; validates n.
    Approximant approximant(Side side = Side::Value) const;
};

/// "master:1..6" -> six specs; "sf" -> one; "cf:3" -> one.
std::vector<FamilySpec> parse_family_range(std::string_view text);

/// Scientific notation with 17 significant digits.
std::string format_scalar(double v);

/// Runs the tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace arctan_cert::cli
