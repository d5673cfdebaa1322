#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tmotif/motif_engine.hpp"
#include "tmotif/null_models.hpp"

namespace tmotif {

/// Divisor of the variance: `population` divides by the number of samples,
/// `sample` by samples - 1.
enum class Deviation { population, sample };

struct ZRow {
    std::string label;
    std::uint64_t original = 0;
    double mu = 0.0;
    double sigma = 0.0;
    std::optional<double> z;  ///< empty when sigma == 0
};

/// z = (original - mu) / sigma over the randomized counts.
ZRow z_row(std::string label, std::uint64_t original, std::span<const std::uint64_t> sampled,
           Deviation deviation = Deviation::population);

struct ZReport {
    MotifSize size = MotifSize::pair;
    NullModel model = NullModel::wts;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::vector<ZRow> rows;  ///< one per motif class, in class order
};

struct ZScoreOptions {
    std::size_t samples = 10;
    std::uint64_t seed = 0;
    Deviation deviation = Deviation::population;
    unsigned threads = 1;
    ShuffleOptions shuffle;
};

/// Sample i is shuffle(layer, model, derive_seed(seed, i)). Throws
/// std::invalid_argument when fewer than two samples are requested.
ZReport z_scores(const TemporalLayer& layer, MotifSize size, const Thresholds& th, NullModel model,
                 const ZScoreOptions& options);

enum class RankDirection { most, least };

struct ClassRanking {
    std::vector<std::string> ranked;     ///< defined-z classes, best first
    std::vector<std::string> undefined;  ///< classes without a z score, in row order
};

/// Top (most) or bottom (least) k classes by z; ties keep row order.
ClassRanking rank_classes(const ZReport& report, RankDirection direction, std::size_t k);

}  // namespace tmotif
