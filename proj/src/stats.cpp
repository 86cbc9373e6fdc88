#include "mia/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mia {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0 && std::isfinite(x); }

[[noreturn]] void reject_inverted_gap(const GlobalStats& stats) {
    fail_precondition("InvertedGap",
                      "train accuracy " + std::to_string(stats.train_accuracy) +
                          " below test accuracy " + std::to_string(stats.test_accuracy) +
                          "; closed-form metrics are proven only for p0 >= p1");
}

}  // namespace

int case_number(CaseKind kind) { return static_cast<int>(kind); }

CaseKind case_from_number(int number) {
    if (number < 1 || number > 4) {
        fail_input("BadCaseNumber", "case number must be 1..4, got " + std::to_string(number));
    }
    return static_cast<CaseKind>(number);
}

void GlobalStats::validate() const {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        fail_precondition("BadTrainFraction", "train fraction must lie strictly inside (0,1), got " +
                                                  std::to_string(train_fraction));
    }
    if (!in_unit_interval(train_accuracy) || !in_unit_interval(test_accuracy)) {
        fail_precondition("BadAccuracy", "accuracies must lie in [0,1]");
    }
}

void CategoryStats::validate() const {
    if (!(train_mass >= 0.0) || !(test_mass >= 0.0) || train_mass > 1.0 || test_mass > 1.0 ||
        mass() > 1.0 + 1e-12) {
        fail_precondition("BadCategoryMass", "category masses must lie in [0,1]");
    }
    if ((train_accuracy && !in_unit_interval(*train_accuracy)) ||
        (test_accuracy && !in_unit_interval(*test_accuracy))) {
        fail_precondition("BadAccuracy", "category accuracies must lie in [0,1]");
    }
}

bool report_in_when_correct(double q, double p0, double p1) {
    if (q <= 0.0) return false;  // no training mass: never report in-train
    if (q >= 1.0) return true;   // no testing mass: always report in-train
    return q * p0 >= (1.0 - q) * p1;
}

bool report_in_when_incorrect(double q, double p0, double p1) {
    if (q <= 0.0) return false;
    if (q >= 1.0) return true;
    return q * (1.0 - p0) >= (1.0 - q) * (1.0 - p1);
}

CaseKind rule_pattern(double q, double p0, double p1) {
    const bool in_correct = report_in_when_correct(q, p0, p1);
    const bool in_incorrect = report_in_when_incorrect(q, p0, p1);
    if (in_correct && in_incorrect) return CaseKind::AlwaysIn;
    if (!in_correct && !in_incorrect) return CaseKind::NeverIn;
    if (in_correct) return CaseKind::FollowCorrectness;
    return CaseKind::InvertCorrectness;
}

ExpectedConfusion expected_confusion(double q, double p0, double p1, CaseKind rule) {
    const bool in_correct =
        rule == CaseKind::AlwaysIn || rule == CaseKind::FollowCorrectness;
    const bool in_incorrect =
        rule == CaseKind::AlwaysIn || rule == CaseKind::InvertCorrectness;

    ExpectedConfusion c;
    c.tp = q * (p0 * (in_correct ? 1.0 : 0.0) + (1.0 - p0) * (in_incorrect ? 1.0 : 0.0));
    c.fp = (1.0 - q) * (p1 * (in_correct ? 1.0 : 0.0) + (1.0 - p1) * (in_incorrect ? 1.0 : 0.0));
    c.fn = q - c.tp;
    c.tn = (1.0 - q) - c.fp;
    return c;
}

CaseKind classify_case(const GlobalStats& stats) {
    stats.validate();
    return rule_pattern(stats.train_fraction, stats.train_accuracy, stats.test_accuracy);
}

// Per-pattern closed forms. The InvertCorrectness branch is reachable with
// p0 >= p1 only on the degenerate boundary p0 = p1 = 1, q < 1/2, where the
// misclassification branch of the rule fires with probability zero; the
// rule's true expected metrics are still well defined and produced here.
double expected_accuracy(const GlobalStats& stats) {
    stats.validate();
    if (!stats.gap_ok()) reject_inverted_gap(stats);

    const double q = stats.train_fraction;
    const double p0 = stats.train_accuracy;
    const double p1 = stats.test_accuracy;
    switch (classify_case(stats)) {
        case CaseKind::AlwaysIn:
            return q;
        case CaseKind::NeverIn:
            return 1.0 - q;
        case CaseKind::FollowCorrectness:
            return q * p0 + (1.0 - q) * (1.0 - p1);
        case CaseKind::InvertCorrectness:
            return q * (1.0 - p0) + (1.0 - q) * p1;
    }
    fail_internal("UnreachableCase", "case classification returned an unknown value");
}

std::optional<double> expected_precision(const GlobalStats& stats) {
    stats.validate();
    if (!stats.gap_ok()) reject_inverted_gap(stats);

    const double q = stats.train_fraction;
    const double p0 = stats.train_accuracy;
    const double p1 = stats.test_accuracy;
    switch (classify_case(stats)) {
        case CaseKind::AlwaysIn:
            // Every record is reported in-train, so a fraction q of the
            // reports is right: q / (q + (1-q)) = q.
            return q;
        case CaseKind::NeverIn:
            // No in-train reports at all; the ratio has an empty denominator.
            return std::nullopt;
        case CaseKind::FollowCorrectness:
            return q * p0 / (q * p0 + (1.0 - q) * p1);
        case CaseKind::InvertCorrectness: {
            const double reported = q * (1.0 - p0) + (1.0 - q) * (1.0 - p1);
            if (reported <= 0.0) return std::nullopt;
            return q * (1.0 - p0) / reported;
        }
    }
    fail_internal("UnreachableCase", "case classification returned an unknown value");
}

double expected_recall(const GlobalStats& stats) {
    stats.validate();
    if (!stats.gap_ok()) reject_inverted_gap(stats);

    switch (classify_case(stats)) {
        case CaseKind::AlwaysIn:
            return 1.0;
        case CaseKind::NeverIn:
            return 0.0;
        case CaseKind::FollowCorrectness:
            // q*p0 / (q*p0 + q*(1-p0)) = p0
            return stats.train_accuracy;
        case CaseKind::InvertCorrectness:
            return 1.0 - stats.train_accuracy;
    }
    fail_internal("UnreachableCase", "case classification returned an unknown value");
}

VulnerabilityBound vulnerability_lower_bound(const GlobalStats& stats) {
    stats.validate();
    if (!stats.gap_ok()) reject_inverted_gap(stats);

    const double q = stats.train_fraction;
    const double follow = q * stats.train_accuracy + (1.0 - q) * (1.0 - stats.test_accuracy);

    VulnerabilityBound b;
    b.bound = std::max({q, 1.0 - q, follow});
    b.weak_bound = std::max({q, 1.0 - q, std::min(q, 1.0 - q) * (1.0 + stats.gap())});
    if (b.bound < b.weak_bound || b.weak_bound < 0.5) {
        fail_internal("BoundChainViolated", "bound >= weak_bound >= 1/2 failed");
    }
    return b;
}

ExpectedMetrics expected_metrics(const GlobalStats& stats) {
    ExpectedMetrics m;
    m.accuracy = expected_accuracy(stats);
    m.precision = expected_precision(stats);
    m.recall = expected_recall(stats);
    m.rule_case = classify_case(stats);
    m.lower_bound = vulnerability_lower_bound(stats).bound;
    m.gap = stats.gap();
    return m;
}

DerivedCategory derive_category_quantities(const CategoryStats& category) {
    category.validate();
    const double d = category.mass();
    if (d <= 0.0) {
        fail_precondition("EmptyCategory", "category carries no mass");
    }
    if (category.train_mass > 0.0 && !category.train_accuracy) {
        fail_precondition("UndefinedAccuracy", "positive train mass with no train accuracy");
    }
    if (category.test_mass > 0.0 && !category.test_accuracy) {
        fail_precondition("UndefinedAccuracy", "positive test mass with no test accuracy");
    }

    DerivedCategory out;
    out.mass = d;
    out.train_fraction = category.train_mass / d;
    const double train_part =
        category.train_mass > 0.0 ? *category.train_accuracy * category.train_mass : 0.0;
    const double test_part =
        category.test_mass > 0.0 ? *category.test_accuracy * category.test_mass : 0.0;
    out.accuracy = (train_part + test_part) / d;
    return out;
}

AggregateStats aggregate_categories(std::span<const CategoryStats> categories) {
    double total_mass = 0.0;
    for (const CategoryStats& c : categories) total_mass += c.mass();
    if (std::abs(total_mass - 1.0) > 1e-9) {
        fail_precondition("MassMismatch", "category masses sum to " + std::to_string(total_mass) +
                                              ", expected 1 within 1e-9");
    }

    AggregateStats agg;
    for (const CategoryStats& c : categories) {
        if (c.mass() <= 0.0) continue;
        const DerivedCategory d = derive_category_quantities(c);
        agg.train_fraction += d.train_fraction * d.mass;  // = d_train
        agg.accuracy += d.accuracy * d.mass;
    }
    return agg;
}

}  // namespace mia
