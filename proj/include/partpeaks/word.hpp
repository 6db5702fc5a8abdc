#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partpeaks {

// A finite sequence over the alphabet {1, ..., k}.  The bound k travels with
// the letters so that statistics over [k] can cover words that do not use
// every letter.
class Word {
public:
    Word() = default;

    Word(std::vector<int> letters, int alphabet_bound)
        : letters_(std::move(letters)), alphabet_bound_(alphabet_bound) {
        if (alphabet_bound_ < 0)
            throw std::invalid_argument("Word: alphabet bound must be nonnegative");
        for (int ell : letters_)
            if (ell < 1 || ell > alphabet_bound_)
                throw std::invalid_argument("Word: letter outside the alphabet");
    }

    // Alphabet bound inferred as the maximum letter (0 for the empty word).
    static Word from_letters(std::vector<int> letters) {
        const int bound = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
        return Word(std::move(letters), bound);
    }

    std::span<const int> letters() const noexcept { return letters_; }
    int alphabet_bound() const noexcept { return alphabet_bound_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    int operator[](std::size_t i) const { return letters_[i]; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
    int alphabet_bound_ = 0;
};

// True iff w is the canonical sequential form of a set partition: the first
// letter is 1 and each letter exceeds the prefix maximum by at most one.
// The empty word counts (the unique partition of the empty set).
inline bool is_rgs(std::span<const int> w) {
    if (w.empty()) return true;
    if (w.front() != 1) return false;
    int m = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < 1 || w[i] > m + 1) return false;
        m = std::max(m, w[i]);
    }
    return true;
}

inline bool is_rgs(const Word& w) { return is_rgs(w.letters()); }

// A Word in canonical restricted-growth form.
class Rgs {
public:
    explicit Rgs(Word w) : word_(std::move(w)) {
        if (!is_rgs(word_.letters()))
            throw std::invalid_argument("Rgs: word is not in restricted growth form");
    }

    const Word& word() const noexcept { return word_; }

    // Number of blocks of the underlying partition; equals the maximum letter.
    int block_count() const noexcept {
        const auto ls = word_.letters();
        return ls.empty() ? 0 : *std::max_element(ls.begin(), ls.end());
    }

    friend bool operator==(const Rgs&, const Rgs&) = default;

private:
    Word word_;
};

struct StatBundle {
    int peaks = 0;
    int symmetric_peaks = 0;
    int non_symmetric_peaks = 0;
    int rises = 0;
    int descents = 0;
    int records = 0;

    friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

// Positions i (0-based start) with w[i] < w[i+1] > w[i+2].
inline int count_peaks(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] < w[i + 1] && w[i + 1] > w[i + 2]) ++c;
    return c;
}

// Peaks whose outer letters agree.
inline int count_symmetric_peaks(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] < w[i + 1] && w[i + 1] > w[i + 2] && w[i] == w[i + 2]) ++c;
    return c;
}

// Peaks whose outer letters differ.
inline int count_non_symmetric_peaks(std::span<const int> w) {
    int c = 0;
    for (std::size_t i = 0; i + 2 < w.size(); ++i)
        if (w[i] < w[i + 1] && w[i + 1] > w[i + 2] && w[i] != w[i + 2]) ++c;
    return c;
}

// (strict ascents, strict descents) over adjacent pairs.
inline std::pair<int, int> count_rises_descents(std::span<const int> w) {
    int rises = 0, descents = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] < w[i + 1]) ++rises;
        else if (w[i] > w[i + 1]) ++descents;
    }
    return {rises, descents};
}

// Letters strictly greater than everything before them.
inline int count_records(std::span<const int> w) {
    int c = 0, best = 0;
    for (int ell : w)
        if (ell > best) {
            ++c;
            best = ell;
        }
    return c;
}

// Single-pass aggregation of all the counters above.
inline StatBundle word_stats(std::span<const int> w) {
    StatBundle s;
    int best = 0;
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i] > best) {
            ++s.records;
            best = w[i];
        }
        if (i + 1 < n) {
            if (w[i] < w[i + 1]) ++s.rises;
            else if (w[i] > w[i + 1]) ++s.descents;
        }
        if (i + 2 < n && w[i] < w[i + 1] && w[i + 1] > w[i + 2]) {
            ++s.peaks;
            if (w[i] == w[i + 2]) ++s.symmetric_peaks;
            else ++s.non_symmetric_peaks;
        }
    }
    return s;
}

inline StatBundle word_stats(const Word& w) { return word_stats(w.letters()); }

}  // namespace partpeaks
