#include "sbsum/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace sbsum {

namespace {

bool is_ascii_letter(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_word_char(unsigned char c) {
    return is_ascii_letter(c) || is_ascii_digit(c) || c == '\'' || c >= 0x80;
}

bool is_vowel(unsigned char c) {
    switch (std::tolower(c)) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
        return true;
    default:
        return false;
    }
}

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && is_space(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && is_space(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

const std::array<const char*, 7> kAbbreviations = {
    "e.g.", "i.e.", "etc.", "vs.", "dr.", "mr.", "ms."};

// True when the '.' at position i ends an abbreviation rather than a
// sentence: the letter run before it has length one ("J.", the "S." in
// "U.S.") or the dotted token is on the fixed list.
bool is_abbreviation_dot(const std::string& text, std::size_t i) {
    std::size_t run = 0;
    while (run < i && is_ascii_letter(static_cast<unsigned char>(text[i - 1 - run])))
        ++run;
    if (run == 0)
        return false;
    if (run == 1)
        return true;
    std::size_t b = i;
    while (b > 0) {
        const unsigned char c = static_cast<unsigned char>(text[b - 1]);
        if (is_ascii_letter(c) || c == '.')
            --b;
        else
            break;
    }
    const std::string token = fold_case(text.substr(b, i - b)) + ".";
    return std::find_if(kAbbreviations.begin(), kAbbreviations.end(),
                        [&](const char* a) { return token == a; }) != kAbbreviations.end();
}

// One code point per ASCII alnum byte or UTF-8 lead byte; apostrophes and
// punctuation do not count.
long long count_alnum_chars(const std::string& token) {
    long long n = 0;
    for (unsigned char c : token) {
        if (is_ascii_letter(c) || is_ascii_digit(c))
            ++n;
        else if (c >= 0x80 && (c & 0xC0) != 0x80)
            ++n;
    }
    return n;
}

} // namespace

std::string fold_case(const std::string& s) {
    std::string out = s;
    for (char& c : out) {
        const unsigned char u = static_cast<unsigned char>(c);
        if (u >= 'A' && u <= 'Z')
            c = static_cast<char>(u - 'A' + 'a');
    }
    return out;
}

std::vector<std::string> segment_sentences(const std::string& text) {
    std::vector<std::string> sentences;
    std::size_t start = 0;
    bool in_fence = false;

    auto flush = [&](std::size_t end) {
        std::string s = trim(text.substr(start, end - start));
        if (!s.empty())
            sentences.push_back(std::move(s));
        start = end;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.compare(i, 3, "```") == 0) {
            in_fence = !in_fence;
            i += 2;
            continue;
        }
        if (in_fence)
            continue;
        const char c = text[i];
        if (c != '.' && c != '!' && c != '?')
            continue;
        const bool at_end = i + 1 == text.size();
        if (!at_end && !is_space(static_cast<unsigned char>(text[i + 1])))
            continue;
        if (c == '.' && is_abbreviation_dot(text, i))
            continue;
        flush(i + 1);
    }
    flush(text.size());
    return sentences;
}

std::vector<std::string> tokenize_words(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        std::size_t b = i;
        while (i < text.size() && is_word_char(static_cast<unsigned char>(text[i])))
            ++i;
        tokens.push_back(text.substr(b, i - b));
    }
    return tokens;
}

long long count_syllables(const std::string& word) {
    bool has_letter = false;
    bool prev_vowel = false;
    long long groups = 0;
    for (unsigned char c : word) {
        if (is_ascii_letter(c) || c >= 0x80)
            has_letter = true;
        const bool v = is_vowel(c);
        if (v && !prev_vowel)
            ++groups;
        prev_vowel = v;
    }
    if (!has_letter)
        return 0;

    const std::size_t n = word.size();
    if (n >= 1 && std::tolower(static_cast<unsigned char>(word[n - 1])) == 'e') {
        const bool le_after_consonant =
            n >= 3 && std::tolower(static_cast<unsigned char>(word[n - 2])) == 'l' &&
            is_ascii_letter(static_cast<unsigned char>(word[n - 3])) &&
            !is_vowel(static_cast<unsigned char>(word[n - 3]));
        if (!le_after_consonant)
            --groups;
    }
    return std::max<long long>(groups, 1);
}

TextStats compute_stats(const std::string& text) {
    TextStats st;
    st.sentence_count = static_cast<long long>(segment_sentences(text).size());

    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        char32_t cp = 0;
        if (is_ascii_letter(c) || is_ascii_digit(c)) {
            cp = static_cast<char32_t>(
                c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
        } else if (c >= 0x80 && (c & 0xC0) != 0x80) {
            // Decode the UTF-8 sequence; a bad byte stands for itself.
            int extra = (c & 0xE0) == 0xC0 ? 1 : (c & 0xF0) == 0xE0 ? 2 : (c & 0xF8) == 0xF0 ? 3 : 0;
            cp = static_cast<char32_t>(c & (0x7F >> (extra + 1)));
            if (extra == 0)
                cp = c;
            while (extra > 0 && i + 1 < text.size() &&
                   (static_cast<unsigned char>(text[i + 1]) & 0xC0) == 0x80) {
                cp = (cp << 6) | (static_cast<unsigned char>(text[++i]) & 0x3F);
                --extra;
            }
        } else {
            continue;
        }
        ++st.char_count;
        ++st.char_frequencies[cp];
    }

    for (const std::string& tok : tokenize_words(text)) {
        ++st.word_count;
        ++st.token_frequencies[fold_case(tok)];
        const long long syl = count_syllables(tok);
        st.syllable_count += syl;
        if (syl >= 3)
            ++st.complex_word_count;
        if (syl == 1)
            ++st.monosyllable_count;
        if (count_alnum_chars(tok) >= 7)
            ++st.long_word_count;
    }

    st.unique_word_count = static_cast<long long>(st.token_frequencies.size());
    for (const auto& [_, n] : st.token_frequencies)
        if (n == 1)
            ++st.hapax_count;
    return st;
}

} // namespace sbsum
