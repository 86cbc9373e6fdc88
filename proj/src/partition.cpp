#include "mia/partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mia {

namespace {

constexpr double kProbSumTolerance = 1e-6;
constexpr int kDefaultIntervals = 10;

int confidence_interval_unit(double confidence, int n) {
    // I_1 = [0, 1/n), ..., I_n = [(n-1)/n, 1]; interior boundaries belong to
    // the interval on their right.
    const int idx = static_cast<int>(std::floor(confidence * n)) + 1;
    return std::clamp(idx, 1, n);
}

int confidence_interval_top(double confidence, int n, int label_count, const std::string& id) {
    // Intervals of width (m-1)/(m*n) tiling [1/m, 1]; the top prediction can
    // never fall below 1/m in a valid probability vector.
    const double low = 1.0 / label_count;
    if (confidence < low - kProbSumTolerance) {
        fail_precondition("MalformedRecord",
                          "record '" + id + "': top probability " + std::to_string(confidence) +
                              " below 1/m; probability vector cannot sum to 1");
    }
    const double width = (label_count - 1.0) / (static_cast<double>(label_count) * n);
    const int idx = static_cast<int>(std::floor((confidence - low) / width)) + 1;
    return std::clamp(idx, 1, n);
}

}  // namespace

std::string split_to_string(Split split) {
    switch (split) {
        case Split::Train: return "train";
        case Split::Test: return "test";
        case Split::Unknown: return "unknown";
    }
    fail_internal("BadSplit", "unknown split value");
}

Split split_from_string(const std::string& text) {
    if (text == "train") return Split::Train;
    if (text == "test") return Split::Test;
    if (text == "unknown") return Split::Unknown;
    fail_input("BadSplit", "split must be train|test|unknown, got '" + text + "'");
}

void validate_record(const PredictionRecord& record, int label_count) {
    if (label_count < 2) {
        fail_precondition("BadLabelSpace", "label space must have at least 2 labels");
    }
    if (static_cast<int>(record.probs.size()) != label_count) {
        fail_precondition("MalformedRecord",
                          "record '" + record.id + "': expected " + std::to_string(label_count) +
                              " probabilities, got " + std::to_string(record.probs.size()));
    }
    if (record.true_label < 0 || record.true_label >= label_count) {
        fail_precondition("MalformedRecord", "record '" + record.id + "': true label " +
                                                 std::to_string(record.true_label) +
                                                 " outside [0," + std::to_string(label_count) + ")");
    }
    double sum = 0.0;
    for (double p : record.probs) {
        if (!(p >= 0.0 && p <= 1.0)) {
            fail_precondition("MalformedRecord",
                              "record '" + record.id + "': probability outside [0,1]");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTolerance) {
        fail_precondition("MalformedRecord", "record '" + record.id + "': probabilities sum to " +
                                                 std::to_string(sum));
    }
}

int predicted_label(const PredictionRecord& record) {
    const auto it = std::max_element(record.probs.begin(), record.probs.end());
    return static_cast<int>(it - record.probs.begin());
}

PartitionScheme PartitionScheme::true_label() {
    return PartitionScheme({Factor{SchemeKind::ByTrueLabel, 0}});
}

PartitionScheme PartitionScheme::predicted_label() {
    return PartitionScheme({Factor{SchemeKind::ByPredictedLabel, 0}});
}

PartitionScheme PartitionScheme::true_label_confidence(int intervals) {
    if (intervals < 1) fail_precondition("BadScheme", "interval count must be positive");
    return PartitionScheme({Factor{SchemeKind::ByTrueLabelConfidence, intervals}});
}

PartitionScheme PartitionScheme::predicted_label_confidence(int intervals) {
    if (intervals < 1) fail_precondition("BadScheme", "interval count must be positive");
    return PartitionScheme({Factor{SchemeKind::ByPredictedLabelConfidence, intervals}});
}

PartitionScheme PartitionScheme::product(const std::vector<PartitionScheme>& parts, bool force) {
    std::vector<Factor> factors;
    for (const PartitionScheme& part : parts) {
        factors.insert(factors.end(), part.factors_.begin(), part.factors_.end());
    }
    if (factors.empty()) fail_precondition("BadScheme", "product of zero schemes");

    const bool has_true = std::any_of(factors.begin(), factors.end(), [](const Factor& f) {
        return f.kind == SchemeKind::ByTrueLabel;
    });
    const bool has_pred = std::any_of(factors.begin(), factors.end(), [](const Factor& f) {
        return f.kind == SchemeKind::ByPredictedLabel;
    });
    if (has_true && has_pred && !force) {
        fail_precondition("DegenerateProduct",
                          "combining true-label and predicted-label partitions yields categories "
                          "that are entirely right or entirely wrong, collapsing the attack to "
                          "majority guessing; pass force to build it anyway");
    }
    return PartitionScheme(std::move(factors));
}

PartitionScheme PartitionScheme::parse(const std::string& text, bool force) {
    std::vector<PartitionScheme> parts;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, '+')) {
        std::string name = token;
        int intervals = kDefaultIntervals;
        if (const auto colon = token.find(':'); colon != std::string::npos) {
            name = token.substr(0, colon);
            const std::string arg = token.substr(colon + 1);
            try {
                size_t used = 0;
                intervals = std::stoi(arg, &used);
                if (used != arg.size()) throw std::invalid_argument(arg);
            } catch (const std::exception&) {
                fail_input("BadScheme", "bad interval count '" + arg + "' in scheme '" + text + "'");
            }
            if (intervals < 1) {
                fail_input("BadScheme", "interval count must be positive in '" + text + "'");
            }
        }
        if (name == "ptl") {
            parts.push_back(true_label());
        } else if (name == "ppl") {
            parts.push_back(predicted_label());
        } else if (name == "ptc") {
            parts.push_back(true_label_confidence(intervals));
        } else if (name == "ppc") {
            parts.push_back(predicted_label_confidence(intervals));
        } else {
            fail_input("BadScheme", "unknown partition scheme '" + token + "'");
        }
    }
    if (parts.empty()) fail_input("BadScheme", "empty partition scheme");
    if (parts.size() == 1) return parts.front();
    return product(parts, force);
}

std::string PartitionScheme::to_string() const {
    std::string out;
    for (const Factor& f : factors_) {
        if (!out.empty()) out += '+';
        switch (f.kind) {
            case SchemeKind::ByTrueLabel: out += "ptl"; break;
            case SchemeKind::ByPredictedLabel: out += "ppl"; break;
            case SchemeKind::ByTrueLabelConfidence: out += "ptc:" + std::to_string(f.intervals); break;
            case SchemeKind::ByPredictedLabelConfidence:
                out += "ppc:" + std::to_string(f.intervals);
                break;
        }
    }
    return out;
}

std::string category_id_to_string(const CategoryId& id) {
    std::string out;
    for (int coordinate : id) {
        if (!out.empty()) out += ',';
        out += std::to_string(coordinate);
    }
    return out;
}

CategoryId category_id_from_string(const std::string& text) {
    CategoryId id;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        try {
            size_t used = 0;
            id.push_back(std::stoi(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            fail_input("BadCategoryId", "bad category id '" + text + "'");
        }
    }
    if (id.empty()) fail_input("BadCategoryId", "empty category id");
    return id;
}

CategoryId assign_category(const PartitionScheme& scheme, const PredictionRecord& record) {
    const int label_count = static_cast<int>(record.probs.size());
    CategoryId id;
    id.reserve(scheme.factors().size());
    for (const PartitionScheme::Factor& f : scheme.factors()) {
        switch (f.kind) {
            case SchemeKind::ByTrueLabel:
                id.push_back(record.true_label);
                break;
            case SchemeKind::ByPredictedLabel:
                id.push_back(predicted_label(record));
                break;
            case SchemeKind::ByTrueLabelConfidence:
                id.push_back(confidence_interval_unit(record.probs[record.true_label], f.intervals));
                break;
            case SchemeKind::ByPredictedLabelConfidence:
                id.push_back(confidence_interval_top(record.probs[predicted_label(record)],
                                                     f.intervals, label_count, record.id));
                break;
        }
    }
    return id;
}

long category_count(const PartitionScheme& scheme, int label_count) {
    if (label_count < 2) fail_precondition("BadLabelSpace", "label space must have at least 2 labels");
    long count = 1;
    for (const PartitionScheme::Factor& f : scheme.factors()) {
        switch (f.kind) {
            case SchemeKind::ByTrueLabel:
            case SchemeKind::ByPredictedLabel:
                count *= label_count;
                break;
            case SchemeKind::ByTrueLabelConfidence:
            case SchemeKind::ByPredictedLabelConfidence:
                count *= f.intervals;
                break;
        }
    }
    return count;
}

}  // namespace mia
