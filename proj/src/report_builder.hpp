#pragma once

#include <cmath>
#include <initializer_list>
#include <limits>

#include "invmeans/report.hpp"

namespace invmeans::detail {

/// Max-violation accumulator. The first sample attaining the maximum keeps
/// the witness, so merging partial results in sample order is deterministic.
class ReportBuilder {
public:
    void add(double violation, std::initializer_list<double> witness)
    {
        if (std::isnan(violation))
            violation = std::numeric_limits<double>::infinity();
        ++report_.samples_checked;
        if (report_.samples_checked == 1 || violation > report_.worst_violation) {
            report_.worst_violation = violation;
            report_.witness.assign(witness);
        }
    }

    void add_with_witness(double violation, std::vector<double> witness)
    {
        if (std::isnan(violation))
            violation = std::numeric_limits<double>::infinity();
        ++report_.samples_checked;
        if (report_.samples_checked == 1 || violation > report_.worst_violation) {
            report_.worst_violation = violation;
            report_.witness = std::move(witness);
        }
    }

    void merge(const ScanReport& part)
    {
        if (part.samples_checked == 0)
            return;
        if (report_.samples_checked == 0 || part.worst_violation > report_.worst_violation) {
            report_.worst_violation = part.worst_violation;
            report_.witness = part.witness;
        }
        report_.samples_checked += part.samples_checked;
    }

    ScanReport finish(double tolerance) &&
    {
        if (report_.samples_checked == 0)
            report_.worst_violation = 0;
        report_.passed = report_.worst_violation <= tolerance;
        return std::move(report_);
    }

    const ScanReport& partial() const { return report_; }

private:
    ScanReport report_;
};

} // namespace invmeans::detail
