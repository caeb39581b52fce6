#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewgor/algebra.hpp"
#include "skewgor/presentation.hpp"
#include "skewgor/trivector.hpp"

namespace skewgor {

// One expected value with its provenance.
struct Expectation {
    std::string value;
    std::string provenance;  // published | published-corrected | derived
    std::string note;
};

struct CatalogEntry {
    std::string id;
    std::string kind;  // trivector | skew_presentation | comm_presentation | extension
    std::string def;   // form text, presentation text, or base ring id
    std::string note;
    std::map<std::string, Expectation> expect;

    bool has(const std::string& key) const { return expect.count(key) != 0; }
    const Expectation& get(const std::string& key) const { return expect.at(key); }
};

class Catalog {
public:
    explicit Catalog(std::string dir);
    static std::string default_dir();

    std::vector<std::string> ids() const;
    const CatalogEntry& load(const std::string& id) const;

    // construction helpers shared by the runner and the CLI
    TriVector form(const CatalogEntry& e) const;
    AlgebraPresentation presentation(const CatalogEntry& e) const;
    AlgebraPtr ring(const CatalogEntry& e, int top = 12) const;

private:
    std::string dir_;
    std::map<std::string, CatalogEntry> entries_;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RunReport {
    std::string id;
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string str() const;
    std::string json() const;
};

struct RunOptions {
    int series_degree = 20;   // depth for dual Hilbert series comparisons
    int gb_cap = 20;          // Groebner truncation
    int box_h = 4, box_j = 10;
    int koszul_h = 5;
    int threads = 1;
    bool skip_slow = false;   // skip the R33-class deep computations
};

// Executes the pipeline appropriate to the entry kind and diffs every
// expectation; computation refusals are reported, not hidden.
RunReport run_entry(const Catalog& cat, const std::string& id, const RunOptions& opt);

}  // namespace skewgor
