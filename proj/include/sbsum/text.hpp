#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sbsum {

// Raw counts extracted in one pass over a text. All feature computations
// build on these fields; see compute_stats() for the population rules.
struct TextStats {
    long long sentence_count = 0;
    long long word_count = 0;
    long long char_count = 0; // letters and digits only
    long long syllable_count = 0;
    long long unique_word_count = 0; // case-folded
    long long hapax_count = 0;
    long long complex_word_count = 0; // words with >= 3 syllables
    long long long_word_count = 0;    // words with >= 7 letters/digits
    long long monosyllable_count = 0;
    std::map<std::string, long long> token_frequencies; // case-folded word -> count
    std::map<char32_t, long long> char_frequencies;     // case-folded letter/digit -> count
};

// Splits text into sentences. Boundaries are '.', '!' or '?' followed by
// whitespace or end of input. A '.' does not split when the token before it
// is a known abbreviation ("e.g.", "i.e.", "etc.", "vs.", "Dr.", "Mr.",
// "Ms.", matched case-insensitively) or a single letter ("J. Smith",
// "U.S."). Nothing splits inside a ``` fenced span. Concatenating the
// returned sentences preserves all non-whitespace input characters in order.
std::vector<std::string> segment_sentences(const std::string& text);

// Word tokens are maximal runs of ASCII letters, digits, apostrophes and
// non-ASCII (UTF-8) characters. Case is preserved.
std::vector<std::string> tokenize_words(const std::string& text);

// Heuristic syllable count for a single token: number of maximal vowel
// groups (a, e, i, o, u, y), minus one for a terminal silent 'e' (kept for
// "-le" after a consonant), at least 1 for any token containing a letter,
// and 0 for all-digit tokens.
long long count_syllables(const std::string& word);

TextStats compute_stats(const std::string& text);

// Simple lowercase mapping (ASCII only; other bytes untouched).
std::string fold_case(const std::string& s);

} // namespace sbsum
