#ifndef BILAT_REPORT_HPP
#define BILAT_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bilat {

/// One evaluated law instance. detail carries the counterexample payload
/// (cells, pairs, element names) when the law fails, and a short summary
/// (instance counts) when it passes.
struct LawResult {
    std::string group;
    std::string law;
    bool pass = false;
    std::string detail;
};

/// Outcome of one structured check (verify_morita, lemma identities, ...).
class CheckReport {
public:
    void add(std::string group, std::string law, bool pass, std::string detail = "") {
        results_.push_back({std::move(group), std::move(law), pass, std::move(detail)});
    }
    void merge(const CheckReport& other) {
        results_.insert(results_.end(), other.results_.begin(), other.results_.end());
    }
    bool pass() const {
        for (const auto& r : results_)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& r : results_)
            if (!r.pass) ++n;
        return n;
    }
    const std::vector<LawResult>& results() const { return results_; }

private:
    std::vector<LawResult> results_;
};

/// Aggregated outcome of a property-suite run: per-law outcomes plus seed
/// provenance and timing. Timing is excluded from determinism comparisons.
struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;
    std::map<std::string, double> group_ms;
    double total_ms = 0.0;

    bool pass() const {
        for (const auto& r : laws)
            if (!r.pass) return false;
        return true;
    }
    std::size_t failed_count() const {
        std::size_t n = 0;
        for (const auto& r : laws)
            if (!r.pass) ++n;
        return n;
    }
};

}  // namespace bilat

#endif
