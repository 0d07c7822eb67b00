#pragma once

// CSV and JSON renderings of step functions and experiment reports.
// Exact rational columns always precede float columns.

#include <json.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "farey/convergence.hpp"
#include "farey/dilation.hpp"
#include "farey/step_function.hpp"
#include "farey/verification.hpp"

namespace farey {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Header plus one row per retained jump:
/// breakpoint_num,breakpoint_den,value_num,value_den,value_float
void write_step_csv(std::ostream& out, const StepFunction& step);

nlohmann::json to_json(const ConvergenceReport& report);
nlohmann::json to_json(const VerificationResult& result);
nlohmann::json to_json(const MinFReport& report);
nlohmann::json to_json(const DilationReport& report);

std::string iso8601_utc_now();

/// Writes through a temp file in the target directory and renames into
/// place. Throws IoError on failure.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace farey
