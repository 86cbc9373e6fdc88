#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mia/partition.hpp"
#include "mia/stats.hpp"

namespace mia {

struct MembershipDecision {
    std::string record_id;
    bool in_train = false;
    CategoryId category;
    bool correct_prediction = false;
    CaseKind case_used = CaseKind::AlwaysIn;
    bool used_fallback = false;   // category absent or unusable, aggregate stats applied
    bool inverted_gap = false;    // stats used had train accuracy below test accuracy
};

// The two-branch Bayes rule on raw parameters; q may sit at 0 or 1 (see
// report_in_when_correct).
bool bayes_verdict(double q, double p0, double p1, bool correct);
bool bayes_verdict(const GlobalStats& stats, bool correct);

// Baseline that ignores the model entirely: in-train iff q >= 1/2.
bool take_the_typical_verdict(double train_fraction);

// One decision per record, input order preserved. Records are validated
// against the label-space size of the first record; a malformed record aborts
// with its id.
std::vector<MembershipDecision> bayes_attack(const GlobalStats& stats,
                                             std::span<const PredictionRecord> records);

// Categorical variant: each record is decided with the stats of its category.
// Records whose category is absent from the map, or whose stats cannot drive
// the rule (positive mass on a side with no recorded accuracy), fall back to
// the aggregate stats and are flagged; with no fallback available this is a
// FallbackUnavailable error.
std::vector<MembershipDecision> categorical_bayes_attack(
    const PartitionScheme& scheme, const std::map<CategoryId, CategoryStats>& per_category,
    const std::optional<GlobalStats>& fallback, std::span<const PredictionRecord> records);

// Same decision logic with caller-supplied category assignments, for inputs
// whose categories are not derivable from record contents (categorical
// simulations).
std::vector<MembershipDecision> categorical_bayes_attack_with_categories(
    const std::map<CategoryId, CategoryStats>& per_category,
    const std::optional<GlobalStats>& fallback, std::span<const PredictionRecord> records,
    std::span<const CategoryId> categories);

}  // namespace mia
