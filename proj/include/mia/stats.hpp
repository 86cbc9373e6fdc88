#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mia/errors.hpp"

namespace mia {

// The membership rule asks two questions of the triple
// (train fraction q, train accuracy p0, test accuracy p1):
//
//   correctly classified:   report in-train iff q*p0      >= (1-q)*p1
//   misclassified:          report in-train iff q*(1-p0)  >= (1-q)*(1-p1)
//
// The two answers give four decision patterns. Values 1-4 are the wire
// encoding used in stats and decision files.
enum class CaseKind : int {
    AlwaysIn = 1,           // both hold: report in-train for every record
    NeverIn = 2,            // neither holds: report not-in-train for every record
    FollowCorrectness = 3,  // in-train exactly when the model got the record right
    InvertCorrectness = 4,  // in-train exactly when the model got it wrong
};

int case_number(CaseKind kind);
CaseKind case_from_number(int number);

// Aggregate behaviour of a model over one train/test split.
struct GlobalStats {
    double train_fraction = 0.5;  // q, in (0,1)
    double train_accuracy = 1.0;  // p0, in [0,1]
    double test_accuracy = 1.0;   // p1, in [0,1]

    // generalization gap g = p0 - p1
    double gap() const { return train_accuracy - test_accuracy; }

    // All optimality and bound statements assume the model does at least as
    // well on data it trained on.
    bool gap_ok() const { return train_accuracy >= test_accuracy; }

    void validate() const;
};

// Behaviour of a model restricted to one category of a partition. Masses are
// fractions of the whole dump; an accuracy may be absent only for a side that
// was never observed (its mass is then typically zero).
struct CategoryStats {
    double train_mass = 0.0;  // size of the category's train part
    double test_mass = 0.0;   // size of the category's test part
    std::optional<double> train_accuracy;
    std::optional<double> test_accuracy;

    double mass() const { return train_mass + test_mass; }
    bool complete() const { return train_accuracy.has_value() && test_accuracy.has_value(); }

    void validate() const;
};

// (d_i, q_i, p_i) for one category.
struct DerivedCategory {
    double mass = 0.0;            // d_i = d_train + d_test
    double train_fraction = 0.0;  // q_i = d_train / d_i
    double accuracy = 0.0;        // p_i = (p_train*d_train + p_test*d_test) / d_i
};

// (q, p) over a whole partition.
struct AggregateStats {
    double train_fraction = 0.0;  // q = sum q_i d_i
    double accuracy = 0.0;        // p = sum p_i d_i
};

struct ExpectedMetrics {
    double accuracy = 0.0;
    std::optional<double> precision;  // absent when the rule never reports in-train
    double recall = 0.0;
    CaseKind rule_case = CaseKind::AlwaysIn;
    double lower_bound = 0.0;
    double gap = 0.0;
};

struct VulnerabilityBound {
    double bound = 0.0;       // max{q, 1-q, q*p0 + (1-q)*(1-p1)}
    double weak_bound = 0.0;  // max{q, 1-q, min{q,1-q}*(1+g)}
};

// Probability masses of the four confusion cells under a decision pattern,
// normalized to total mass 1.
struct ExpectedConfusion {
    double tp = 0.0;  // in-train verdict, train member
    double fp = 0.0;  // in-train verdict, test member
    double tn = 0.0;
    double fn = 0.0;
};

// --- decision-rule primitives ------------------------------------------------
//
// These accept the full closed ranges q, p0, p1 in [0,1]. The endpoints q = 0
// and q = 1 are the limits of the Bayes posterior: a category known to hold no
// training data can never be reported in-train, and vice versa.

bool report_in_when_correct(double q, double p0, double p1);
bool report_in_when_incorrect(double q, double p0, double p1);
CaseKind rule_pattern(double q, double p0, double p1);

ExpectedConfusion expected_confusion(double q, double p0, double p1, CaseKind rule);

// --- closed-form metrics ------------------------------------------------------

// Total on valid stats; reports the literal inequality pattern.
CaseKind classify_case(const GlobalStats& stats);

// The metric formulas below are proven only for p0 >= p1 and reject inverted
// inputs with an InvertedGap precondition error.
double expected_accuracy(const GlobalStats& stats);
std::optional<double> expected_precision(const GlobalStats& stats);
double expected_recall(const GlobalStats& stats);
VulnerabilityBound vulnerability_lower_bound(const GlobalStats& stats);
ExpectedMetrics expected_metrics(const GlobalStats& stats);

// --- category identities -------------------------------------------------------

// Fails with EmptyCategory when the category carries no mass, and with
// UndefinedAccuracy when a side has positive mass but no recorded accuracy.
DerivedCategory derive_category_quantities(const CategoryStats& category);

// Requires the masses to tile the dump: sum d_i = 1 within 1e-9
// (MassMismatch otherwise).
AggregateStats aggregate_categories(std::span<const CategoryStats> categories);

}  // namespace mia
