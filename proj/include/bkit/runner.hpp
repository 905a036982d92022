#pragma once

#include <string>
#include <vector>

#include "bkit/report.hpp"
#include "bkit/specfile.hpp"

namespace bkit::run {

/// Executes one verification command against a parsed domain spec and
/// returns the report rows. Throws std::invalid_argument when the command
/// does not apply to the spec kind.
std::vector<report::ReportRow> run_command(const std::string& command,
                                           const spec::DomainSpecFile& spec,
                                           unsigned seed = 1);

const std::vector<std::string>& command_names();

}  // namespace bkit::run
