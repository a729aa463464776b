#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace lcn {

constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kReportSchema = "locochrome-report/1";

inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string content_hash(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return std::string(buf);
}

struct ClaimRow {
    std::string claim;
    std::string expected;
    std::string computed;
    std::string status;  // pass | fail | skipped:<reason>
};

struct VerificationReport {
    std::string theorem;
    std::vector<ClaimRow> rows;
    double wall_ms = 0;
    std::uint64_t seed = 0;

    void add(const std::string& claim, const std::string& expected, const std::string& computed,
             bool ok) {
        rows.push_back({claim, expected, computed, ok ? "pass" : "fail"});
    }
    void skip(const std::string& claim, const std::string& reason) {
        rows.push_back({claim, "", "", "skipped:" + reason});
    }
    bool pass() const {
        for (const auto& r : rows)
            if (r.status == "fail") return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema"] = kReportSchema;
        j["version"] = kToolVersion;
        j["theorem"] = theorem;
        j["seed"] = seed;
        j["wall_ms"] = wall_ms;
        j["status"] = pass() ? "pass" : "fail";
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            j["rows"].push_back({{"claim", r.claim},
                                 {"expected", r.expected},
                                 {"computed", r.computed},
                                 {"status", r.status}});
        return j;
    }

    std::string to_text() const {
        std::string out = "theorem " + theorem + "\n";
        for (const auto& r : rows) {
            out += "  [" + r.status + "] " + r.claim;
            if (!r.expected.empty())
                out += " (expected " + r.expected + ", computed " + r.computed + ")";
            out += "\n";
        }
        out += pass() ? "PASS\n" : "FAIL\n";
        return out;
    }
};

class WallTimer {
   public:
    WallTimer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

   private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace lcn
