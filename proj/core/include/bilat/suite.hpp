#ifndef BILAT_SUITE_HPP
#define BILAT_SUITE_HPP

#include <bilat/error.hpp>
#include <bilat/report.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bilat {

/// Configuration for one suite run. count and max_size scale the randomized
/// portions when nonzero; pinned golden instances and exhaustive sweeps
/// always run. Identical configs give identical reports up to timing.
struct SuiteConfig {
    std::uint64_t seed = 1;
    int count = 0;
    int max_size = 0;
    bool mutate = false;
    std::vector<std::string> groups;  // empty = every group (mutation only with mutate)
    Limits limits;
};

/// All law group names, in execution order. "mutation" runs only when
/// selected explicitly or via SuiteConfig::mutate.
const std::vector<std::string>& suite_group_names();

/// Executes the selected law groups over pinned and generated instances.
/// Failures are report content, not exceptions.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace bilat

#endif
