#include "tmotif/significance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tmotif/random.hpp"

namespace tmotif {

ZRow z_row(std::string label, std::uint64_t original, std::span<const std::uint64_t> sampled, Deviation deviation) {
    const auto n = static_cast<double>(sampled.size());
    double sum = 0.0;
    for (auto c : sampled) sum += static_cast<double>(c);
    const double mu = sum / n;
    double ss = 0.0;
    for (auto c : sampled) {
        const double d = static_cast<double>(c) - mu;
        ss += d * d;
    }
    const double divisor = deviation == Deviation::population ? n : n - 1.0;
    const double sigma = std::sqrt(ss / divisor);

    ZRow row{std::move(label), original, mu, sigma, std::nullopt};
    if (sigma > 0.0) row.z = (static_cast<double>(original) - mu) / sigma;
    return row;
}

ZReport z_scores(const TemporalLayer& layer, MotifSize size, const Thresholds& th, NullModel model,
                 const ZScoreOptions& options) {
    if (options.samples < 2) throw std::invalid_argument("z scores need at least two null-model samples");

    const auto original = census(layer, size, th, options.threads);
    std::vector<std::vector<std::uint64_t>> sampled(options.samples);

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.samples)));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < options.samples; i = next.fetch_add(1)) {
            const auto randomized = shuffle(layer, model, derive_seed(options.seed, i), options.shuffle);
            sampled[i] = census(randomized, size, th, 1).counts;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    ZReport report{size, model, options.seed, options.samples, {}};
    std::vector<std::uint64_t> column(options.samples);
    for (std::size_t c = 0; c < original.counts.size(); ++c) {
        for (std::size_t i = 0; i < options.samples; ++i) column[i] = sampled[i][c];
        report.rows.push_back(z_row(original.label(c), original.counts[c], column, options.deviation));
    }
    return report;
}

ClassRanking rank_classes(const ZReport& report, RankDirection direction, std::size_t k) {
    std::vector<const ZRow*> defined;
    ClassRanking ranking;
    for (const auto& row : report.rows) {
        if (row.z) {
            defined.push_back(&row);
        } else {
            ranking.undefined.push_back(row.label);
        }
    }
    std::stable_sort(defined.begin(), defined.end(), [&](const ZRow* a, const ZRow* b) {
        return direction == RankDirection::most ? *a->z > *b->z : *a->z < *b->z;
    });
    for (std::size_t i = 0; i < std::min(k, defined.size()); ++i) ranking.ranked.push_back(defined[i]->label);
    return ranking;
}

}  // namespace tmotif
