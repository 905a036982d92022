#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bkit::report {

/// How the computed value relates to the reference.
enum class Cmp { AbsDiff, AtMost, AtLeast };

struct ReportRow {
    std::string name;
    std::string inputs;
    double value = 0.0;
    double reference = 0.0;
    Cmp cmp = Cmp::AbsDiff;
    double tol = 0.0;
    std::string provenance;  // closed-form | theory | self-consistency
    bool pass = false;
};

ReportRow eq_row(std::string name, std::string inputs, double value, double reference,
                 double tol, std::string provenance);
ReportRow le_row(std::string name, std::string inputs, double value, double bound,
                 double tol, std::string provenance);
ReportRow ge_row(std::string name, std::string inputs, double value, double bound,
                 double tol, std::string provenance);

bool all_pass(const std::vector<ReportRow>& rows);

/// Text summary followed by tab-delimited machine rows, one line per check.
void write_report(std::ostream& os, const std::string& title,
                  const std::vector<ReportRow>& rows);

}  // namespace bkit::report
