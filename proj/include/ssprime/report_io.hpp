#pragma once

// CensusReport serialization. CSV: one checkpoint per row with columns
// x,pi_ss,pi_good,lambda_hat,bound_ratio,recip_sum (six fractional digits)
// and a trailing commented ss-prime list. JSON: a single object carrying
// the same checkpoints plus family metadata.

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ssprime/census.hpp"

namespace ssp {

inline void emit_csv(const CensusReport& report, std::ostream& os) {
    os << "x,pi_ss,pi_good,lambda_hat,bound_ratio,recip_sum\n";
    char buf[128];
    for (const Checkpoint& cp : report.checkpoints) {
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu,%.6f,%.6f,%.6f\n",
                      static_cast<unsigned long long>(cp.x),
                      static_cast<unsigned long long>(cp.pi_ss),
                      static_cast<unsigned long long>(cp.pi_good),
                      cp.lambda_hat, cp.bound_ratio, cp.recip_sum);
        os << buf;
    }
    os << "# ss_primes:";
    for (std::uint64_t p : report.ss_primes) os << ' ' << p;
    os << '\n';
}

inline nlohmann::json report_to_json(const CensusReport& report) {
    nlohmann::json j;
    j["family"] = report.family;
    j["x_max"] = report.x_max;
    j["alpha"] = report.alpha;
    j["checkpoints"] = nlohmann::json::array();
    for (const Checkpoint& cp : report.checkpoints) {
        j["checkpoints"].push_back({{"x", cp.x},
                                    {"pi_ss", cp.pi_ss},
                                    {"pi_good", cp.pi_good},
                                    {"lambda_hat", cp.lambda_hat},
                                    {"bound_ratio", cp.bound_ratio},
                                    {"recip_sum", cp.recip_sum}});
    }
    j["ss_primes"] = report.ss_primes;
    return j;
}

inline void emit_json(const CensusReport& report, std::ostream& os) {
    os << report_to_json(report).dump(2) << '\n';
}

inline std::string emit_to_string(const CensusReport& report, const std::string& format) {
    std::ostringstream os;
    if (format == "csv")
        emit_csv(report, os);
    else if (format == "json")
        emit_json(report, os);
    else
        throw std::invalid_argument("emit_report: unknown format '" + format + "'");
    return os.str();
}

inline void emit_report(const CensusReport& report, const std::string& format, const std::string& path) {
    std::string payload = emit_to_string(report, format);
    if (path.empty() || path == "-") {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open '" + path + "' for writing");
    out << payload;
    if (!out) throw std::runtime_error("emit_report: write failed for '" + path + "'");
}

}  // namespace ssp
