#pragma once

#include <map>
#include <vector>

#include "mia/partition.hpp"
#include "mia/stats.hpp"

namespace mia {

// A model's predictions over a whole dataset, one record per example.
struct Dump {
    std::vector<PredictionRecord> records;
    int label_count = 0;

    // Enforces shared label-space size, unique ids, per-record invariants.
    void validate() const;
};

// One dump per shadow model; every record must carry a train/test tag.
struct ShadowSet {
    std::vector<Dump> dumps;
};

// Per-category masses and accuracies counted from a ground-truth-tagged dump.
// Masses are fractions of the whole dump; a category side that holds no
// records keeps an absent accuracy rather than a fabricated one. Records
// tagged unknown are rejected (MissingGroundTruth).
std::map<CategoryId, CategoryStats> compute_stats(const Dump& dump, const PartitionScheme& scheme);

// Pools counts over all shadow dumps before forming ratios, which weights
// each shadow's contribution by how many records it put in the category.
// Categories seen in no shadow are absent. Empty sets are rejected (NoShadows).
std::map<CategoryId, CategoryStats> estimate_from_shadows(const ShadowSet& shadows,
                                                          const PartitionScheme& scheme);

// Rescales each category's train/test masses to impose a common train
// fraction q while preserving total mass and both accuracies. Used when the
// split is known to be drawn uniformly at random, making q_i = q reasonable.
std::map<CategoryId, CategoryStats> assume_uniform_q(std::map<CategoryId, CategoryStats> stats,
                                                     double train_fraction);

// The (q, p0, p1) triple implied by a category map: q from train masses, p0
// and p1 as mass-weighted accuracies of each side. Sides with undefined
// accuracy must carry zero mass.
GlobalStats aggregate_global(const std::map<CategoryId, CategoryStats>& stats);

}  // namespace mia
