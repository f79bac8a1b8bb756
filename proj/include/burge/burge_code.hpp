#pragma once

// Burge's operators a, b and their common inverse (the demotion operator),
// the Burge code of a frequency sequence and the descent map.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "burge/partition.hpp"

namespace burge {

enum class Letter : std::uint8_t { a = 0, b = 1 };

/// Finite word over {a, b}. No language constraint.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Case-insensitive letters a/b, or digits 0/1 with 0 = a.
    static Word parse(std::string_view text);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    /// 1-based access, matching the descent-position convention.
    Letter at(std::size_t i) const { return letters_.at(i - 1); }
    std::size_t count(Letter x) const noexcept;

    void push_back(Letter x) { letters_.push_back(x); }
    void append(Letter x, std::size_t times) { letters_.insert(letters_.end(), times, x); }

    std::string str() const;

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// True iff w lies in (a*b)*a: nonempty and ends with a single a.
bool in_burge_language(const Word& w);

/// A word of (a*b)*a. Construction validates membership.
class BurgeWord {
public:
    explicit BurgeWord(Word w);
    static BurgeWord parse(std::string_view text) { return BurgeWord(Word::parse(text)); }

    const Word& word() const noexcept { return word_; }
    std::string str() const { return word_.str(); }
    std::size_t length() const noexcept { return word_.length(); }

    bool operator==(const BurgeWord&) const = default;

private:
    Word word_;
};

bool in_class_B(const FrequencySeq& f);
FrequencySeq apply_a(const FrequencySeq& f);
FrequencySeq apply_b(const FrequencySeq& f);
/// Demotes every backward pair; on class A it inverts apply_a, on class B apply_b.
FrequencySeq apply_del(const FrequencySeq& f);
inline Partition apply_del(const Partition& p) { return to_partition(apply_del(to_frequency(p))); }

struct BurgeChain {
    std::vector<FrequencySeq> states;  // f, del f, ..., empty
    BurgeWord word;                    // one letter per state
};

BurgeChain chain(const FrequencySeq& f);
BurgeWord encode(const FrequencySeq& f);
inline BurgeWord encode(const Partition& p) { return encode(to_frequency(p)); }
FrequencySeq decode(const BurgeWord& w);
/// Parses and validates, then decodes. Throws ParseError / std::invalid_argument.
FrequencySeq decode(std::string_view text);

/// Ascending positions i with w_i = b and w_{i+1} = a.
std::vector<int> descent_set(const Word& w);
int des(const Word& w);
std::int64_t maj(const Word& w);

/// Descent set of the Burge code, read as a super-distinct partition.
Partition descent_map(const Partition& p);

struct SuperDistinctReport {
    bool super_distinct;       // parts differ by >= 2
    bool length_is_two;        // length equals 2-measure
    bool code_has_no_bb;       // Burge code avoids "bb"
    bool freq_is_right_set;    // f_i = 1 on the right set, 0 elsewhere
    bool del_is_shift;         // del f = (f_2, f_3, ...)
    bool del_is_reduction;     // del P = P - 1
    bool descent_fixed;        // descent_map(P) = P

    bool all() const noexcept;
    bool none() const noexcept;
    bool consistent() const noexcept { return all() || none(); }
};

SuperDistinctReport characterize_superdistinct(const Partition& p);

}  // namespace burge
