#include "bkit/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace bkit::report {

namespace {
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

bool evaluate(const ReportRow& r) {
    switch (r.cmp) {
        case Cmp::AbsDiff: return std::abs(r.value - r.reference) <= r.tol;
        case Cmp::AtMost: return r.value <= r.reference + r.tol;
        case Cmp::AtLeast: return r.value >= r.reference - r.tol;
    }
    return false;
}
}  // namespace

ReportRow eq_row(std::string name, std::string inputs, double value, double reference,
                 double tol, std::string provenance) {
    ReportRow r{std::move(name), std::move(inputs), value, reference, Cmp::AbsDiff, tol,
                std::move(provenance), false};
    r.pass = evaluate(r);
    return r;
}

ReportRow le_row(std::string name, std::string inputs, double value, double bound,
                 double tol, std::string provenance) {
    ReportRow r{std::move(name), std::move(inputs), value, bound, Cmp::AtMost, tol,
                std::move(provenance), false};
    r.pass = evaluate(r);
    return r;
}

ReportRow ge_row(std::string name, std::string inputs, double value, double bound,
                 double tol, std::string provenance) {
    ReportRow r{std::move(name), std::move(inputs), value, bound, Cmp::AtLeast, tol,
                std::move(provenance), false};
    r.pass = evaluate(r);
    return r;
}

bool all_pass(const std::vector<ReportRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

void write_report(std::ostream& os, const std::string& title,
                  const std::vector<ReportRow>& rows) {
    int passed = 0;
    for (const auto& r : rows) passed += r.pass ? 1 : 0;
    os << "== " << title << " ==\n";
    os << passed << "/" << rows.size() << " checks passed\n";
    for (const auto& r : rows) {
        if (!r.pass) {
            os << "  FAILED: " << r.name << " value=" << fmt(r.value)
               << " reference=" << fmt(r.reference) << " tol=" << fmt(r.tol) << "\n";
        }
    }
    os << "\n";
    const char* cmp_name[] = {"absdiff", "atmost", "atleast"};
    for (const auto& r : rows) {
        os << "check\t" << r.name << '\t' << (r.inputs.empty() ? "-" : r.inputs) << '\t'
           << fmt(r.value) << '\t' << fmt(r.reference) << '\t'
           << cmp_name[static_cast<int>(r.cmp)] << '\t' << fmt(r.tol) << '\t'
           << r.provenance << '\t' << (r.pass ? "PASS" : "FAIL") << '\n';
    }
}

}  // namespace bkit::report
