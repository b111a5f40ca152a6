#include "uryson/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace uryson {

void Report::add_pass(const std::string& check, const std::string& anchor, const std::string& digest) {
    records_.push_back(CheckRecord{check, anchor, true, digest, "", "", ""});
}

void Report::add_fail(const std::string& check, const std::string& anchor, const std::string& digest,
                      const std::string& expected, const std::string& actual, const std::string& witness) {
    records_.push_back(CheckRecord{check, anchor, false, digest, expected, actual, witness});
}

std::size_t Report::failed() const {
    std::size_t n = 0;
    for (const auto& r : records_)
        if (!r.passed) ++n;
    return n;
}

std::string Report::machine_text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        nlohmann::json line;
        line["check"] = r.check;
        line["anchor"] = r.anchor;
        line["status"] = r.passed ? "pass" : "fail";
        std::string witness = r.witness;
        if (!r.passed && !r.expected.empty())
            witness = "expected=" + r.expected + " actual=" + r.actual +
                      (witness.empty() ? "" : " " + witness);
        line["witness"] = witness;
        os << line.dump() << "\n";
    }
    nlohmann::json summary;
    summary["type"] = "summary";
    summary["suite"] = suite_;
    summary["seed"] = seed_;
    summary["total"] = total();
    summary["failed"] = failed();
    os << summary.dump() << "\n";
    return os.str();
}

std::string Report::table_text() const {
    std::ostringstream os;
    for (const auto& r : records_) {
        os << (r.passed ? "pass  " : "FAIL  ") << std::left << std::setw(34) << r.check << " " << r.anchor
           << "\n";
        if (!r.passed) {
            if (!r.expected.empty()) os << "      expected " << r.expected << ", got " << r.actual << "\n";
            if (!r.witness.empty()) os << "      witness: " << r.witness << "\n";
            if (!r.inputs_digest.empty()) os << "      inputs: " << r.inputs_digest << "\n";
        }
    }
    os << "suite " << suite_ << ": " << (total() - failed()) << "/" << total() << " checks passed (seed "
       << seed_ << ")\n";
    return os.str();
}

std::string fnv1a_digest(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace uryson
