#pragma once

#include <string>

#include "cyclesync/panel.hpp"
#include "cyclesync/synthgen.hpp"

namespace cyclesync {

/// Parse "MIN:MAX" (months) into a band. Throws std::invalid_argument on
/// malformed syntax or MIN >= MAX.
[[nodiscard]] BandSpec parse_band(const std::string& text);

/// Parse "STEP:DELTA" into a common kick (step is a sample index, delta is
/// in radians). Throws std::invalid_argument on malformed syntax.
[[nodiscard]] CommonKick parse_kick(const std::string& text);

/// Entry point shared by the binary and the CLI tests. Returns the process
/// exit status: 0 on success, nonzero after printing a diagnostic to
/// stderr. Never writes outside the directory given by --out.
int run_cli(int argc, const char* const* argv);

}  // namespace cyclesync
