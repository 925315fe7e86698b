#pragma once

// Freely reduced words in a finitely generated free group, and the
// integral group ring built on them.

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "talex/errors.hpp"

namespace talex {

/// Ordered list of generator names. Names are case-sensitive identifiers
/// (letters/digits/underscore, starting with a letter) and unique.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }

    /// Index of `name`, or -1 if not declared.
    int index_of(std::string_view name) const;

    static bool valid_name(std::string_view name);

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// One run of a word: generator index with a nonzero (signed) exponent.
struct Letter {
    int gen = 0;
    int exp = 0;
    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

/// A freely reduced word. Stored run-length: consecutive letters have
/// distinct generators and nonzero exponents; the empty word is the identity.
/// Equality is equality of reduced forms.
class Word {
public:
    Word() = default;

    /// Free reduction of an arbitrary letter sequence.
    static Word reduce(const std::vector<Letter>& raw);

    static Word generator(int gen, int exp = 1);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    /// Total letter count (sum of |exp|).
    size_t length() const;

    Word operator*(const Word& o) const;
    Word inverse() const;
    Word pow(int k) const;

    long long exponent_sum(int gen) const;
    /// Largest generator index occurring, or -1 for the identity.
    int max_generator() const;

    /// Visit single letters left to right as (generator, sign) with sign = ±1.
    template <typename F>
    void for_each_letter(F&& f) const {
        for (const Letter& l : letters_) {
            int sign = l.exp > 0 ? 1 : -1;
            for (int i = 0; i != l.exp; i += sign) f(l.gen, sign);
        }
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;

    void append_run(int gen, int exp);
    friend Word concat_reduced(const Word&, const Word&);
};

std::string to_string(const Word& w, const Alphabet& a);

/// Parses the word grammar: whitespace-separated factors `name` or `name^k`
/// with k a nonzero integer. Throws ParseError on bad syntax or unknown names.
Word parse_word(std::string_view text, const Alphabet& a);

/// Finite integer-linear combination of words: an element of the group
/// ring Z[F]. No zero coefficients are stored.
class GroupRingElement {
public:
    explicit GroupRingElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

    static GroupRingElement from_word(AlphabetPtr alphabet, const Word& w, long long coeff = 1);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::map<Word, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coeff_of(const Word& w) const;

    GroupRingElement& add_term(const Word& w, long long coeff);

    GroupRingElement operator+(const GroupRingElement& o) const;
    GroupRingElement operator-(const GroupRingElement& o) const;
    GroupRingElement operator*(const GroupRingElement& o) const;
    GroupRingElement operator-() const;
    bool operator==(const GroupRingElement& o) const;

private:
    AlphabetPtr alphabet_;
    std::map<Word, long long> terms_;

    void require_same_alphabet(const GroupRingElement& o) const;
};

std::string to_string(const GroupRingElement& e);

} // namespace talex
