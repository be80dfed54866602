#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bq {

struct ReportDetail {
    std::string label;
    double value = 0.0;
};

/// Outcome of one residual/property check: pass holds iff max_abs <= tol.
struct Report {
    std::string check;
    double max_abs = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::vector<ReportDetail> details;
    std::optional<std::uint64_t> seed;
    std::string error; // non-empty when the check aborted with a named error
};

inline Report make_report(std::string check, double max_abs, double tol) {
    Report r;
    r.check = std::move(check);
    r.max_abs = max_abs;
    r.tol = tol;
    r.pass = max_abs <= tol;
    return r;
}

inline Report make_error_report(std::string check, std::string error_name, double tol = 0.0) {
    Report r;
    r.check = std::move(check);
    r.max_abs = 0.0;
    r.tol = tol;
    r.pass = false;
    r.error = std::move(error_name);
    return r;
}

} // namespace bq
