#ifndef MG_CHECKS_HPP
#define MG_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mg/hn.hpp"
#include "mg/rep.hpp"

namespace mg {

// Seeded corpora and the per-module invariant suites behind `check`.
// Everything downstream of the seed is deterministic, so two runs with the
// same seed produce byte-identical reports.

struct Corpus {
    std::vector<Representation> reps;  // seeded A2 and A3 representations over F_2
    std::vector<StabilityCondition> a2_charges;
    std::vector<StabilityCondition> a3_charges;

    const std::vector<StabilityCondition>& charges_for(const Representation& rep) const;
};

Corpus build_corpus(std::uint64_t seed, int count_per_quiver = 100, int max_total_dim = 6);

struct CheckItem {
    std::string name;
    bool passed = false;
    long long samples = 0;
    double worst = 0.0;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    bool passed = false;
    std::vector<CheckItem> items;

    std::string to_json() const;
};

// suite names: geometry, hn, polygon, mass-triangle, twist, growth, all
SuiteReport run_suite(const std::string& name, std::uint64_t seed);
bool known_suite(const std::string& name);

}  // namespace mg

#endif
