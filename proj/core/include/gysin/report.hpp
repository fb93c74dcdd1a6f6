// Findings and verification reports shared by every checker.

#ifndef GYSIN_REPORT_HPP
#define GYSIN_REPORT_HPP

#include <string>
#include <vector>

namespace gysin {

enum class Severity { failure, alarm, note };

struct Finding {
    std::string check;     // e.g. "algebra.assoc", "gysin.ker_psi"
    std::string location;  // subgroup key, pair "[..]<[..]", or diagram cell
    int degree = -1;       // -1 when not tied to a degree
    std::string message;
    Severity severity = Severity::failure;

    friend bool operator==(const Finding&, const Finding&) = default;
};

std::string to_string(Severity s);

struct SubgroupInvariants {
    std::string key;
    int rank = 0;
    std::size_t total_dim = 0;
    int norm = -1;  // -1 for a zero algebra
    bool connected = false;
    bool biconnected = false;
};

struct VerificationReport {
    std::vector<Finding> findings;
    std::vector<SubgroupInvariants> invariants;

    bool passed() const;
    std::size_t failure_count() const;
    void add(Finding f) { findings.push_back(std::move(f)); }
    void fail(std::string check, std::string location, int degree, std::string message);
    void merge(VerificationReport other);
    // Canonical order: location, check, degree, message.
    void sort();
};

}  // namespace gysin

#endif  // GYSIN_REPORT_HPP
