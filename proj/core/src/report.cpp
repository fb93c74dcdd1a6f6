#include "gysin/report.hpp"

#include <algorithm>
#include <tuple>

namespace gysin {

std::string to_string(Severity s)
{
    switch (s) {
    case Severity::failure:
        return "failure";
    case Severity::alarm:
        return "alarm";
    case Severity::note:
        return "note";
    }
    return "unknown";
}

bool VerificationReport::passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const
{
    return static_cast<std::size_t>(std::count_if(findings.begin(), findings.end(), [](const Finding& f) {
        return f.severity != Severity::note;
    }));
}

void VerificationReport::fail(std::string check, std::string location, int degree, std::string message)
{
    findings.push_back({std::move(check), std::move(location), degree, std::move(message), Severity::failure});
}

void VerificationReport::merge(VerificationReport other)
{
    findings.insert(findings.end(), std::make_move_iterator(other.findings.begin()),
                    std::make_move_iterator(other.findings.end()));
    invariants.insert(invariants.end(), std::make_move_iterator(other.invariants.begin()),
                      std::make_move_iterator(other.invariants.end()));
}

void VerificationReport::sort()
{
    std::sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.location, a.check, a.degree, a.message) < std::tie(b.location, b.check, b.degree, b.message);
    });
    findings.erase(std::unique(findings.begin(), findings.end()), findings.end());
}

}  // namespace gysin
