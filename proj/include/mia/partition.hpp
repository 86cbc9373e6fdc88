#pragma once

#include <string>
#include <vector>

#include "mia/errors.hpp"

namespace mia {

enum class Split { Train, Test, Unknown };

std::string split_to_string(Split split);
Split split_from_string(const std::string& text);

// One example's prediction dump row: the model's probability vector over all
// labels, the true label, and (when the producer knows it) the membership tag.
struct PredictionRecord {
    std::string id;
    int true_label = 0;
    std::vector<double> probs;
    Split split = Split::Unknown;
    std::string model_id;  // optional; empty means absent
};

// Checks the probability-vector invariants: entries in [0,1], sum 1 within
// 1e-6, label within range, label space of size label_count (>= 2).
void validate_record(const PredictionRecord& record, int label_count);

// index of the largest probability, ties to the lowest index
int predicted_label(const PredictionRecord& record);

enum class SchemeKind {
    ByTrueLabel,                 // "ptl"
    ByPredictedLabel,            // "ppl"
    ByTrueLabelConfidence,       // "ptc:<n>"
    ByPredictedLabelConfidence,  // "ppc:<n>"
};

// A partition of the record space. Plain schemes have one factor; products
// intersect the categories of several factors. Products are flat (never
// nested) and refuse the true-label x predicted-label combination, which
// yields only degenerate all-right/all-wrong categories, unless forced.
class PartitionScheme {
public:
    struct Factor {
        SchemeKind kind;
        int intervals = 0;  // confidence kinds only
    };

    static PartitionScheme true_label();
    static PartitionScheme predicted_label();
    static PartitionScheme true_label_confidence(int intervals);
    static PartitionScheme predicted_label_confidence(int intervals);
    static PartitionScheme product(const std::vector<PartitionScheme>& parts, bool force = false);

    // Grammar: factors joined by '+'; each factor is ptl | ppl | ptc[:<n>] |
    // ppc[:<n>] with n defaulting to 10.
    static PartitionScheme parse(const std::string& text, bool force = false);
    std::string to_string() const;

    const std::vector<Factor>& factors() const { return factors_; }

    bool operator==(const PartitionScheme& other) const = default;

private:
    explicit PartitionScheme(std::vector<Factor> factors) : factors_(std::move(factors)) {}
    std::vector<Factor> factors_;
};

// One coordinate per factor. Label coordinates are the 0-based label;
// confidence coordinates are the 1-based interval index.
using CategoryId = std::vector<int>;

std::string category_id_to_string(const CategoryId& id);
CategoryId category_id_from_string(const std::string& text);

CategoryId assign_category(const PartitionScheme& scheme, const PredictionRecord& record);

long category_count(const PartitionScheme& scheme, int label_count);

}  // namespace mia
