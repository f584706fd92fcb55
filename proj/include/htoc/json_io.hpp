#pragma once

//! JSON loading and saving for group presentations, label actions, and
//! per-trial reports. Parse and schema errors are reported as InputError
//! with the originating file and field path in the message.

#include <string>
#include <vector>

#include "htoc/action.hpp"
#include "htoc/report.hpp"

namespace htoc::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

groups::PolycyclicGroupSpec load_group_text(const std::string& text,
                                            const std::string& origin = "<string>");
groups::PolycyclicGroupSpec load_group_file(const std::string& path);

orbit::QuantumAction load_action_text(const std::string& text,
                                      const std::string& origin = "<string>");
orbit::QuantumAction load_action_file(const std::string& path);

std::string group_json(const groups::PolycyclicGroupSpec& spec);
//! Serializing an action replays every generator on every label, so it
//! issues queries on the way out.
std::string action_json(const orbit::QuantumAction& action);

std::string trials_json(const report::RunMeta& meta, const report::Aggregate& agg,
                        const std::vector<report::TrialRow>& rows);

std::string distribution_json(const report::RunMeta& meta,
                              const std::vector<report::DistributionRow>& rows,
                              double tv_distance);

}  // namespace htoc::io
