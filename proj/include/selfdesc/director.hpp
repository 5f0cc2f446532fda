#pragma once

// Periodic director words over {1,2} and their exact letter densities.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selfdesc/rational.hpp"

namespace selfdesc {

/// Thrown for malformed user input. `position()` is the offending character
/// index, or npos when the error is not tied to a position (e.g. empty input).
class ValidationError : public std::invalid_argument {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ValidationError(const std::string& what, std::size_t position = npos)
        : std::invalid_argument(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

using Letter = std::uint8_t;  // 1 or 2
using Word = std::vector<Letter>;

/// One period x of a periodic director x^omega. Never empty; letters in {1,2}.
class DirectorWord {
public:
    /// Validating constructor.
    explicit DirectorWord(Word letters) : letters_(std::move(letters)) {
        if (letters_.empty()) throw ValidationError("director word is empty");
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (letters_[i] != 1 && letters_[i] != 2)
                throw ValidationError("director letter at position " + std::to_string(i) +
                                          " is not 1 or 2",
                                      i);
        }
    }

    const Word& letters() const noexcept { return letters_; }
    std::size_t period() const noexcept { return letters_.size(); }
    Letter operator[](std::size_t i) const noexcept { return letters_[i]; }

    std::size_t count(Letter a) const noexcept {
        std::size_t n = 0;
        for (Letter c : letters_) n += (c == a);
        return n;
    }

    std::string str() const {
        std::string s;
        s.reserve(letters_.size());
        for (Letter c : letters_) s.push_back(static_cast<char>('0' + c));
        return s;
    }

    friend bool operator==(const DirectorWord&, const DirectorWord&) = default;
    friend auto operator<=>(const DirectorWord& a, const DirectorWord& b) { return a.str() <=> b.str(); }

private:
    Word letters_;
};

inline DirectorWord parse_director(std::string_view text) {
    if (text.empty()) throw ValidationError("director word is empty");
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '1' && ch != '2')
            throw ValidationError("invalid character '" + std::string(1, ch) + "' at position " +
                                      std::to_string(i) + " (expected '1' or '2')",
                                  i);
        w.push_back(static_cast<Letter>(ch - '0'));
    }
    return DirectorWord(std::move(w));
}

/// p1 = |x1|_1 / |x1| and q2 = |x2|_2 / |x2|, kept exact.
struct DensityPair {
    Rational p1;
    Rational q2;

    Rational p2() const { return Rational(1) - p1; }
    Rational q1() const { return Rational(1) - q2; }

    /// Both densities strictly inside (0,1).
    bool interior() const { return Rational(0) < p1 && p1 < Rational(1) && Rational(0) < q2 && q2 < Rational(1); }

    friend bool operator==(const DensityPair&, const DensityPair&) = default;
};

inline DensityPair densities(const DirectorWord& x1, const DirectorWord& x2) {
    return {Rational(static_cast<Rational::int_type>(x1.count(1)), static_cast<Rational::int_type>(x1.period())),
            Rational(static_cast<Rational::int_type>(x2.count(2)), static_cast<Rational::int_type>(x2.period()))};
}

/// All words over {1,2} with period 1..max_period, ordered by length then
/// lexicographically ("1","2","11","12",...).
inline std::vector<DirectorWord> all_words(std::size_t max_period) {
    std::vector<DirectorWord> out;
    for (std::size_t len = 1; len <= max_period; ++len) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
            Word w(len);
            for (std::size_t i = 0; i < len; ++i) w[i] = static_cast<Letter>(1 + ((bits >> (len - 1 - i)) & 1U));
            out.emplace_back(std::move(w));
        }
    }
    return out;
}

}  // namespace selfdesc
