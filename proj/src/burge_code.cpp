#include "burge/burge_code.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace burge {

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (std::tolower(static_cast<unsigned char>(text[i]))) {
            case 'a':
            case '0':
                letters.push_back(Letter::a);
                break;
            case 'b':
            case '1':
                letters.push_back(Letter::b);
                break;
            default:
                throw ParseError("parse error at column " + std::to_string(i + 1) +
                                     ": expected a letter from {a,b} or {0,1}",
                                 std::string(text), i + 1);
        }
    }
    return Word(std::move(letters));
}

std::size_t Word::count(Letter x) const noexcept {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), x));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s += (x == Letter::a ? 'a' : 'b');
    return s;
}

bool in_burge_language(const Word& w) {
    const std::size_t n = w.length();
    if (n == 0 || w.at(n) != Letter::a) return false;
    return n == 1 || w.at(n - 1) == Letter::b;
}

BurgeWord::BurgeWord(Word w) : word_(std::move(w)) {
    if (!in_burge_language(word_))
        throw std::invalid_argument("word '" + word_.str() +
                                    "' is not in (a*b)*a: it must end with a single 'a'");
}

bool in_class_B(const FrequencySeq& f) {
    // 1 is in the right set iff the spread containing 1 has odd width.
    if (f[1] == 0) return false;
    int hi = 1;
    while (f[hi + 1] > 0) ++hi;
    return hi % 2 == 1;
}

namespace {

std::vector<int> dense(const FrequencySeq& f, int extra) {
    std::vector<int> v(f.entries());
    v.resize(v.size() + static_cast<std::size_t>(extra), 0);
    return v;
}

}  // namespace

FrequencySeq apply_a(const FrequencySeq& f) {
    // All forward pairs are disjoint, so transfers are applied against the
    // index set computed up front.
    const auto left = left_set(f);
    auto v = dense(f, 1);
    for (int i : left) {
        --v[static_cast<std::size_t>(i - 1)];
        ++v[static_cast<std::size_t>(i)];
    }
    return FrequencySeq(std::move(v));
}

FrequencySeq apply_b(const FrequencySeq& f) {
    const auto& e = f.entries();
    std::vector<int> tail(e.size() > 1 ? e.begin() + 1 : e.end(), e.end());
    const auto promoted = apply_a(FrequencySeq(std::move(tail)));
    std::vector<int> v{f[1] + 1};
    v.insert(v.end(), promoted.entries().begin(), promoted.entries().end());
    return FrequencySeq(std::move(v));
}

FrequencySeq apply_del(const FrequencySeq& f) {
    const auto right = right_set(f);
    auto v = dense(f, 0);
    for (int j : right) {
        if (j > 1) ++v[static_cast<std::size_t>(j - 2)];
        --v[static_cast<std::size_t>(j - 1)];
    }
    return FrequencySeq(std::move(v));
}

BurgeChain chain(const FrequencySeq& f) {
    std::vector<FrequencySeq> states{f};
    Word w;
    while (true) {
        const FrequencySeq& cur = states.back();
        w.push_back(in_class_B(cur) ? Letter::b : Letter::a);
        if (cur.empty()) break;
        states.push_back(apply_del(cur));
    }
    return BurgeChain{std::move(states), BurgeWord(std::move(w))};
}

BurgeWord encode(const FrequencySeq& f) { return chain(f).word; }

FrequencySeq decode(const BurgeWord& w) {
    const auto& letters = w.word().letters();
    FrequencySeq f;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        f = (*it == Letter::a) ? apply_a(f) : apply_b(f);
    return f;
}

FrequencySeq decode(std::string_view text) { return decode(BurgeWord::parse(text)); }

std::vector<int> descent_set(const Word& w) {
    std::vector<int> out;
    for (std::size_t i = 1; i < w.length(); ++i)
        if (w.at(i) == Letter::b && w.at(i + 1) == Letter::a) out.push_back(static_cast<int>(i));
    return out;
}

int des(const Word& w) { return static_cast<int>(descent_set(w).size()); }

std::int64_t maj(const Word& w) {
    std::int64_t s = 0;
    for (int i : descent_set(w)) s += i;
    return s;
}

Partition descent_map(const Partition& p) {
    return Partition(descent_set(encode(p).word()), std::max(kDefaultMaxPart, int(p.size())));
}

bool SuperDistinctReport::all() const noexcept {
    return super_distinct && length_is_two && code_has_no_bb && freq_is_right_set &&
           del_is_shift && del_is_reduction && descent_fixed;
}

bool SuperDistinctReport::none() const noexcept {
    return !(super_distinct || length_is_two || code_has_no_bb || freq_is_right_set ||
             del_is_shift || del_is_reduction || descent_fixed);
}

SuperDistinctReport characterize_superdistinct(const Partition& p) {
    const FrequencySeq f = to_frequency(p);
    const FrequencySeq del = apply_del(f);
    const Word code = encode(f).word();

    SuperDistinctReport r{};
    r.super_distinct = is_super_distinct(p);
    r.length_is_two = f.length() == two_measure(f);

    r.code_has_no_bb = true;
    for (std::size_t i = 1; i < code.length(); ++i)
        if (code.at(i) == Letter::b && code.at(i + 1) == Letter::b) r.code_has_no_bb = false;

    const auto right = right_set(f);
    r.freq_is_right_set = true;
    for (int i = 1; i <= f.max_index(); ++i) {
        const bool in_right = std::binary_search(right.begin(), right.end(), i);
        if (f[i] != (in_right ? 1 : 0)) r.freq_is_right_set = false;
    }

    std::vector<int> shifted;
    for (int i = 2; i <= f.max_index(); ++i) shifted.push_back(f[i]);
    r.del_is_shift = del == FrequencySeq(shifted);
    r.del_is_reduction = to_partition(del) == reduce(p);
    r.descent_fixed = descent_map(p) == p;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

}  // namespace burge
