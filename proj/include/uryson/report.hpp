#ifndef URYSON_REPORT_HPP
#define URYSON_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace uryson {

/// One verified fact. `anchor` names the mathematical statement the check
/// exercises (stable identifiers, also used to group table output); failures
/// always carry a witness.
struct CheckRecord {
    std::string check;
    std::string anchor;
    bool passed = true;
    std::string inputs_digest;
    std::string expected;
    std::string actual;
    std::string witness;
};

class Report {
public:
    Report(std::string suite, std::uint64_t seed) : suite_(std::move(suite)), seed_(seed) {}

    void add(CheckRecord record) { records_.push_back(std::move(record)); }
    void add_pass(const std::string& check, const std::string& anchor, const std::string& digest);
    void add_fail(const std::string& check, const std::string& anchor, const std::string& digest,
                  const std::string& expected, const std::string& actual, const std::string& witness);

    const std::vector<CheckRecord>& records() const { return records_; }
    const std::string& suite() const { return suite_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t total() const { return records_.size(); }
    std::size_t failed() const;
    bool all_passed() const { return failed() == 0; }

    /// One JSON object per line (fields check, anchor, status, witness),
    /// followed by a summary line; byte-deterministic for a given
    /// (suite, seed, records) triple.
    std::string machine_text() const;
    std::string table_text() const;

private:
    std::string suite_;
    std::uint64_t seed_;
    std::vector<CheckRecord> records_;
};

/// FNV-1a hex digest used for the inputs_digest field.
std::string fnv1a_digest(const std::string& data);

}  // namespace uryson

#endif
