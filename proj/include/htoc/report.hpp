#pragma once

//! Per-trial records, aggregates with confidence intervals, and the fixed
//! CSV schemas emitted by the command-line driver. CSV output is fully
//! deterministic (shortest round-trip number formatting, no wall times);
//! wall-clock fields only appear in the JSON detail.

#include <string>
#include <vector>

#include "htoc/common.hpp"

namespace htoc::report {

struct TrialRow {
    u64 trial = 0;
    std::string status;            // found | abort | reject | error
    bool verified = false;         // planted secret was available and compared
    bool correct = false;          // only meaningful when verified
    std::vector<u32> u;            // recovered element exponents (empty if none)
    u64 samples = 0;               // fourier samples drawn
    u64 copies = 0;                // oracle state copies consumed
    u64 queries = 0;               // action / oracle queries
    double fidelity = 1.0;         // min fidelity observed in the trial
    double wall_ms = 0.0;          // JSON only
    std::string note;              // free-form detail (JSON only)
};

struct Aggregate {
    u64 trials = 0;
    u64 found = 0;
    u64 aborts = 0;
    u64 rejects = 0;
    u64 errors = 0;
    u64 verified = 0;
    u64 correct = 0;
    u64 samples = 0;
    u64 copies = 0;
    u64 queries = 0;
    double min_fidelity = 1.0;

    void add(const TrialRow& row);
    double abort_rate() const { return trials ? static_cast<double>(aborts) / trials : 0.0; }
    double found_rate() const { return trials ? static_cast<double>(found) / trials : 0.0; }
    double correct_rate() const {
        return verified ? static_cast<double>(correct) / verified : 0.0;
    }
};

//! Wilson score upper confidence bound for a binomial rate. Default z is the
//! two-sided 99% quantile.
double wilson_upper(u64 successes, u64 trials, double z = 2.5758293035489004);

//! Shortest decimal string that round-trips the double (deterministic).
std::string format_double(double v);

//! Exponent vector as semicolon-joined digits, CSV safe. Empty -> "-".
std::string format_element(const std::vector<u32>& u);

//! Echo of the experiment configuration placed in front of every aggregate.
struct RunMeta {
    std::string command;
    u32 p = 0;
    std::size_t n = 0;
    u64 trials = 0;
    u64 seed = 0;
    std::string mode;
    double epsilon = 0.0;
    std::string group;  // built-in key or fixture path (may be empty)
};

//! Aggregate CSV: one fixed header line plus one row.
std::string aggregate_csv(const RunMeta& meta, const Aggregate& agg);

struct DistributionRow {
    u64 k = 0;
    u32 c = 0;
    double exact = 0.0;
    double empirical = 0.0;
    bool has_empirical = false;
};

//! Distribution table CSV: k,c,exact[,empirical,abs_diff]. The total
//! variation distance is half the sum of the abs_diff column.
std::string distribution_csv(const std::vector<DistributionRow>& rows);

}  // namespace htoc::report
