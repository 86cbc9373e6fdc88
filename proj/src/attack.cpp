#include "mia/attack.hpp"

#include <string>

namespace mia {

namespace {

struct RuleParams {
    double q = 0.0;
    double p0 = 0.0;
    double p1 = 0.0;
    bool inverted_gap = false;
};

// A category can drive the rule when both accuracies are known, or when its
// train fraction is degenerate (0 or 1) and the verdict is forced regardless
// of the unknown side.
std::optional<RuleParams> usable_params(const CategoryStats& stats) {
    const double mass = stats.mass();
    if (mass <= 0.0) return std::nullopt;
    const double q = stats.train_mass / mass;
    if (q <= 0.0 || q >= 1.0) {
        return RuleParams{q, stats.train_accuracy.value_or(0.0), stats.test_accuracy.value_or(0.0),
                          false};
    }
    if (!stats.complete()) return std::nullopt;
    return RuleParams{q, *stats.train_accuracy, *stats.test_accuracy,
                      *stats.train_accuracy < *stats.test_accuracy};
}

MembershipDecision decide(const RuleParams& params, const PredictionRecord& record,
                          CategoryId category, bool used_fallback) {
    MembershipDecision d;
    d.record_id = record.id;
    d.category = std::move(category);
    d.correct_prediction = predicted_label(record) == record.true_label;
    d.in_train = bayes_verdict(params.q, params.p0, params.p1, d.correct_prediction);
    d.case_used = rule_pattern(params.q, params.p0, params.p1);
    d.used_fallback = used_fallback;
    d.inverted_gap = params.inverted_gap;
    return d;
}

int shared_label_count(std::span<const PredictionRecord> records) {
    const int label_count = static_cast<int>(records.front().probs.size());
    for (const PredictionRecord& r : records) validate_record(r, label_count);
    return label_count;
}

}  // namespace

bool bayes_verdict(double q, double p0, double p1, bool correct) {
    return correct ? report_in_when_correct(q, p0, p1) : report_in_when_incorrect(q, p0, p1);
}

bool bayes_verdict(const GlobalStats& stats, bool correct) {
    stats.validate();
    return bayes_verdict(stats.train_fraction, stats.train_accuracy, stats.test_accuracy, correct);
}

bool take_the_typical_verdict(double train_fraction) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        fail_precondition("BadTrainFraction", "train fraction must lie strictly inside (0,1)");
    }
    return train_fraction >= 0.5;
}

std::vector<MembershipDecision> bayes_attack(const GlobalStats& stats,
                                             std::span<const PredictionRecord> records) {
    stats.validate();
    std::vector<MembershipDecision> decisions;
    if (records.empty()) return decisions;
    shared_label_count(records);

    const RuleParams params{stats.train_fraction, stats.train_accuracy, stats.test_accuracy,
                            !stats.gap_ok()};
    decisions.reserve(records.size());
    for (const PredictionRecord& record : records) {
        decisions.push_back(decide(params, record, CategoryId{}, false));
    }
    return decisions;
}

std::vector<MembershipDecision> categorical_bayes_attack(
    const PartitionScheme& scheme, const std::map<CategoryId, CategoryStats>& per_category,
    const std::optional<GlobalStats>& fallback, std::span<const PredictionRecord> records) {
    std::vector<MembershipDecision> decisions;
    if (records.empty()) return decisions;
    shared_label_count(records);

    std::vector<CategoryId> categories;
    categories.reserve(records.size());
    for (const PredictionRecord& record : records) {
        categories.push_back(assign_category(scheme, record));
    }
    return categorical_bayes_attack_with_categories(per_category, fallback, records, categories);
}

std::vector<MembershipDecision> categorical_bayes_attack_with_categories(
    const std::map<CategoryId, CategoryStats>& per_category,
    const std::optional<GlobalStats>& fallback, std::span<const PredictionRecord> records,
    std::span<const CategoryId> categories) {
    if (records.size() != categories.size()) {
        fail_precondition("CategoryMismatch", "one category per record required");
    }
    for (const auto& [id, stats] : per_category) stats.validate();
    if (fallback) fallback->validate();

    std::optional<RuleParams> fallback_params;
    if (fallback) {
        fallback_params = RuleParams{fallback->train_fraction, fallback->train_accuracy,
                                     fallback->test_accuracy, !fallback->gap_ok()};
    }

    std::vector<MembershipDecision> decisions;
    decisions.reserve(records.size());
    for (size_t i = 0; i < records.size(); ++i) {
        std::optional<RuleParams> params;
        if (const auto it = per_category.find(categories[i]); it != per_category.end()) {
            params = usable_params(it->second);
        }
        bool used_fallback = false;
        if (!params) {
            if (!fallback_params) {
                fail_precondition("FallbackUnavailable",
                                  "record '" + records[i].id + "' maps to category '" +
                                      category_id_to_string(categories[i]) +
                                      "' with no usable stats and no fallback was supplied");
            }
            params = fallback_params;
            used_fallback = true;
        }
        decisions.push_back(decide(*params, records[i], categories[i], used_fallback));
    }
    return decisions;
}

}  // namespace mia
