#ifndef QH_REPORT_HPP
#define QH_REPORT_HPP

#include <string>
#include <vector>

namespace qh {

// batch-runner configuration; `cases` is a glob over registry ids
struct RunConfig {
    std::string cases = "*";
    bool symbolic = false;
    int seeds = 3;
    unsigned seed = 1;
    int truncation = 3;
};

struct CaseReport {
    std::string id;
    std::string status;  // ok | shape-mismatch | scale-not-constant |
                         // branch-mismatch | error
    std::string accessory;
    std::string gauge_witness;
    long long millis = 0;
    std::string detail;  // empty unless status != ok
};

struct SuiteReport {
    int total = 0, ok = 0, failed = 0;
    unsigned seed = 1;
    std::string mode;
    std::vector<CaseReport> cases;
};

// every runnable id, in registry order (the blow-up/substitution cases
// followed by the two limit-theorem checks)
std::vector<std::string> registry_ids();

// '*' and '?' wildcards
bool glob_match(const std::string& pattern, const std::string& s);

// runs one id under the configuration; throws UnknownCase
CaseReport run_case(const std::string& id, const RunConfig& cfg);

// runs all ids matching cfg.cases and aggregates in registry order
SuiteReport run_suite(const RunConfig& cfg);

std::string emit_json(const SuiteReport& r);
std::string emit_markdown(const SuiteReport& r);

// registry listing for --list: one line per id with its pipeline sketch
std::string registry_listing();

}  // namespace qh

#endif
