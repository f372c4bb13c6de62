#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "sbsum/text.hpp"

namespace sbsum {

inline constexpr std::size_t kFeatureCount = 27;
inline constexpr const char* kFeatureSchemaVersion = "fv27.1";

// Schema blocks, by index range. The order is part of every file format
// this project writes and must not change within a schema version.
inline constexpr std::size_t kLexicalBegin = 0, kLexicalEnd = 16;
inline constexpr std::size_t kReadabilityBegin = 16, kReadabilityEnd = 24;
inline constexpr std::size_t kEntropyBegin = 24, kEntropyEnd = 27;

enum class FeatureCategory { lexical, readability, entropy };
enum class FeatureKind { count, ratio, score, bits };

struct FeatureDef {
    const char* name;
    FeatureCategory category;
    FeatureKind kind;
};

const std::array<FeatureDef, kFeatureCount>& feature_schema();

// Index of a schema name, or -1.
int feature_index(std::string_view name);

struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    // Set when the text has no words or no sentences; the vector is then
    // all zeros so downstream arithmetic stays finite.
    bool degenerate = false;
};

struct ReadabilityScores {
    double flesch_reading_ease = 0;
    double flesch_kincaid_grade = 0;
    double gunning_fog = 0;
    double smog = 0;
    double coleman_liau = 0;
    double ari = 0;
    double lix = 0;
    double rix = 0;
    bool degenerate = false;
};

// The eight classic grade formulas over raw counts. If the text has no
// words or no sentences every score is 0 and the degenerate flag is set.
ReadabilityScores readability_suite(const TextStats& stats);

// H = -sum p_i log2 p_i over symbols with positive count; 0 on an empty
// distribution. Iteration follows map order, so results are reproducible.
template <typename Map>
double shannon_entropy(const Map& frequencies) {
    double total = 0;
    for (const auto& [sym, count] : frequencies)
        if (count > 0)
            total += static_cast<double>(count);
    if (total <= 0)
        return 0.0;
    double h = 0;
    for (const auto& [sym, count] : frequencies) {
        if (count <= 0)
            continue;
        const double p = static_cast<double>(count) / total;
        h -= p * std::log2(p);
    }
    return h;
}

FeatureVector extract_features(const std::string& text);
FeatureVector features_from_stats(const TextStats& stats);

} // namespace sbsum
