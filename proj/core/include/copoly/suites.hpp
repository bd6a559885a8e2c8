#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace copoly {

struct SuiteReport {
    SuiteReport() = default;
    explicit SuiteReport(std::string suite) : name(std::move(suite)) {}

    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    /// First few failing cases, human readable.
    std::vector<std::string> failed_cases;

    bool passed() const noexcept { return failures == 0; }
    void record(bool ok, const std::string& description);
};

/// Suite names accepted by run_suite, in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one identity suite over all labeled graphs with at most `max_n`
/// vertices (individual suites cap the order where their cost explodes).
/// Returns nullopt for an unknown name.
std::optional<SuiteReport> run_suite(std::string_view name, int max_n);

}  // namespace copoly
