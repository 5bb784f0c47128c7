#include "trisect/verifier.hpp"

#include "json.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>

namespace trisect::verifier {

std::string shortest(double v) {
    if (v == 0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string sig_digits(double v, int digits) {
    if (v == 0) v = 0;  // drops the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

std::optional<ReportFormat> parse_format(std::string_view text) {
    if (text == "text") return ReportFormat::text;
    if (text == "json-lines" || text == "jsonl") return ReportFormat::json_lines;
    if (text == "csv") return ReportFormat::csv;
    return std::nullopt;
}

namespace {

void write_text(std::ostream& out, const SweepReport& rep) {
    const auto pts = rep.grid.points();
    out << "method        " << methods::short_name(rep.method) << '\n';
    out << "backend       " << rep.backend << '\n';
    out << "grid          " << sig_digits(rep.grid.start) << " .. " << sig_digits(rep.grid.stop) << " step "
        << sig_digits(rep.grid.step) << " (" << pts.size() << " points)\n";
    out << "excluded      ";
    if (rep.excluded.empty()) out << "none";
    for (std::size_t i = 0; i < rep.excluded.size(); ++i) out << (i ? ", " : "") << sig_digits(rep.excluded[i].theta);
    out << '\n';
    out << "fixed points  ";
    if (rep.fixed_points.empty()) out << "none";
    for (std::size_t i = 0; i < rep.fixed_points.size(); ++i) out << (i ? ", " : "") << sig_digits(rep.fixed_points[i]);
    out << "\n\n";

    out << std::left << std::setw(22) << "claim" << std::right << std::setw(7) << "pass" << std::setw(7) << "fail"
        << std::setw(7) << "excl" << std::setw(22) << "max residual" << std::setw(20) << "worst theta" << '\n';
    std::size_t failing = 0;
    for (const auto& s : rep.summary) {
        failing += s.failed;
        out << std::left << std::setw(22) << s.claim_id << std::right << std::setw(7) << s.passed << std::setw(7)
            << s.failed << std::setw(7) << s.excluded << std::setw(22) << sig_digits(s.max_residual) << std::setw(20)
            << sig_digits(s.worst_theta) << '\n';
    }
    out << '\n';
    out << "max residual  " << sig_digits(rep.max_residual) << '\n';
    if (failing == 0) {
        out << "status        PASS\n";
    } else {
        out << "status        FAIL (" << failing << " failing evaluations)\n";
    }
}

void write_json_lines(std::ostream& out, const SweepReport& rep) {
    const std::string method = methods::short_name(rep.method);
    for (const auto& r : rep.results) {
        nlohmann::ordered_json j;
        j["method"] = method;
        j["theta_deg"] = r.theta;
        j["claim_id"] = r.claim_id;
        j["residual_deg"] = r.residual;
        j["pass"] = r.pass;
        out << j.dump() << '\n';
    }
}

void write_csv(std::ostream& out, const SweepReport& rep) {
    const std::string method = methods::short_name(rep.method);
    out << "method,theta_deg,claim_id,residual_deg,pass\n";
    for (const auto& r : rep.results) {
        out << method << ',' << shortest(r.theta) << ',' << r.claim_id << ',' << shortest(r.residual) << ','
            << (r.pass ? "true" : "false") << '\n';
    }
}

}  // namespace

void write_report(std::ostream& out, const SweepReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::text: write_text(out, report); break;
        case ReportFormat::json_lines: write_json_lines(out, report); break;
        case ReportFormat::csv: write_csv(out, report); break;
    }
}

}  // namespace trisect::verifier
