#pragma once

#include <charconv>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "partpeaks/aggregate.hpp"
#include "partpeaks/qpoly.hpp"
#include "partpeaks/word.hpp"

namespace partpeaks {

// Words print as contiguous digits for alphabets up to 9 ("1213") and as
// comma-separated integers beyond that ("1,2,13,4").
inline std::string format_word(std::span<const int> letters, int alphabet_bound) {
    std::string out;
    if (alphabet_bound <= 9) {
        out.reserve(letters.size());
        for (int ell : letters) out.push_back(static_cast<char>('0' + ell));
    } else {
        for (std::size_t i = 0; i < letters.size(); ++i) {
            if (i > 0) out.push_back(',');
            out += std::to_string(letters[i]);
        }
    }
    return out;
}

inline std::string format_word(const Word& w) {
    return format_word(w.letters(), w.alphabet_bound());
}

namespace detail {

inline int parse_letter(std::string_view token) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1)
        throw std::invalid_argument("parse_word: bad letter '" + std::string(token) + "'");
    return value;
}

inline std::vector<int> parse_digit_letters(std::string_view text) {
    std::vector<int> letters;
    letters.reserve(text.size());
    for (char c : text) {
        if (c < '1' || c > '9')
            throw std::invalid_argument("parse_word: bad digit in contiguous form");
        letters.push_back(c - '0');
    }
    return letters;
}

inline std::vector<int> parse_csv_letters(std::string_view text) {
    std::vector<int> letters;
    if (text.empty()) return letters;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const auto token = text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        letters.push_back(parse_letter(token));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return letters;
}

}  // namespace detail

// Accepts both serialized forms, deciding by the presence of a comma; the
// alphabet bound is inferred as the maximum letter.  Note a one-letter word
// like "12" over a large alphabet is indistinguishable from the digit form
// here; pass the bound explicitly to resolve it.
inline Word parse_word(std::string_view text) {
    if (text.find(',') != std::string_view::npos)
        return Word::from_letters(detail::parse_csv_letters(text));
    return Word::from_letters(detail::parse_digit_letters(text));
}

// Selects the form by the alphabet bound, mirroring the emitter.
inline Word parse_word(std::string_view text, int alphabet_bound) {
    if (alphabet_bound <= 9) return Word(detail::parse_digit_letters(text), alphabet_bound);
    return Word(detail::parse_csv_letters(text), alphabet_bound);
}

// "c0 c1 c2 ..." across q-degrees; the zero polynomial prints as "0".
inline std::string qpoly_row(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t d = 0; d <= p.degree(); ++d) {
        if (d > 0) out.push_back(' ');
        out += p.coeff(d).get_str();
    }
    return out;
}

inline std::vector<std::string> qpoly_strings(const QPoly& p) {
    std::vector<std::string> out;
    if (p.is_zero()) return {"0"};
    for (std::size_t d = 0; d <= p.degree(); ++d) out.push_back(p.coeff(d).get_str());
    return out;
}

// JSON record for a class aggregate; big integers render as decimal strings
// so consumers never round them.
inline nlohmann::json aggregate_json(const AggregateTotals& a) {
    return nlohmann::json{
        {"n", a.cls.n},
        {"k", a.cls.k},
        {"count", a.count.get_str()},
        {"total_peaks", a.total_peaks.get_str()},
        {"total_sym", a.total_sym.get_str()},
        {"total_nonsym", a.total_nonsym.get_str()},
        {"qdist_sym", qpoly_strings(a.qdist_sym)},
        {"qdist_nonsym", qpoly_strings(a.qdist_nonsym)},
    };
}

}  // namespace partpeaks
