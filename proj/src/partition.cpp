#include "burge/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace burge {

std::string ParseError::pretty() const {
    std::ostringstream os;
    os << what();
    if (column_ > 0) {
        os << "\n  " << input_ << "\n  " << std::string(column_ - 1, ' ') << '^';
    }
    return os.str();
}

Partition::Partition(std::vector<int> parts, int max_part) : parts_(std::move(parts)) {
    for (int x : parts_) {
        if (x <= 0) throw std::invalid_argument("partition parts must be positive");
        if (x > max_part)
            throw std::invalid_argument("partition part " + std::to_string(x) +
                                        " exceeds limit " + std::to_string(max_part));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::int64_t Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

FrequencySeq::FrequencySeq(std::vector<int> freq) : freq_(std::move(freq)) {
    for (int x : freq_)
        if (x < 0) throw std::invalid_argument("frequencies must be nonnegative");
    while (!freq_.empty() && freq_.back() == 0) freq_.pop_back();
}

std::int64_t FrequencySeq::size() const noexcept {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < freq_.size(); ++i)
        s += static_cast<std::int64_t>(i + 1) * freq_[i];
    return s;
}

std::int64_t FrequencySeq::length() const noexcept {
    return std::accumulate(freq_.begin(), freq_.end(), std::int64_t{0});
}

FrequencySeq to_frequency(const Partition& p) {
    std::vector<int> f(static_cast<std::size_t>(p.largest()), 0);
    for (int x : p.parts()) ++f[static_cast<std::size_t>(x - 1)];
    return FrequencySeq(std::move(f));
}

Partition to_partition(const FrequencySeq& f) {
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(f.length()));
    for (int i = f.max_index(); i >= 1; --i) parts.insert(parts.end(), f[i], i);
    return Partition(std::move(parts), std::max(kDefaultMaxPart, f.max_index()));
}

std::vector<Spread> spreads(const FrequencySeq& f) {
    std::vector<Spread> out;
    const int z = f.max_index();
    for (int i = 1; i <= z;) {
        if (f[i] == 0) {
            ++i;
            continue;
        }
        int j = i;
        while (f[j + 1] > 0) ++j;
        out.push_back({i, j});
        i = j + 1;
    }
    return out;
}

std::vector<int> left_set(const FrequencySeq& f) {
    std::vector<int> out;
    for (const Spread& s : spreads(f))
        for (int i = s.lo; i <= s.hi; i += 2) out.push_back(i);
    return out;
}

std::vector<int> right_set(const FrequencySeq& f) {
    std::vector<int> out;
    for (const Spread& s : spreads(f)) {
        const std::size_t first = out.size();
        for (int j = s.hi; j >= s.lo; j -= 2) out.push_back(j);
        std::reverse(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
    }
    return out;
}

int two_measure(const FrequencySeq& f) {
    int m = 0;
    for (const Spread& s : spreads(f)) m += (s.width() + 1) / 2;
    return m;
}

bool is_super_distinct(const Partition& p) {
    const auto& v = p.parts();
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] - v[i] < 2) return false;
    return true;
}

Partition reduce(const Partition& p) {
    std::vector<int> out;
    for (int x : p.parts())
        if (x > 1) out.push_back(x - 1);
    return Partition(std::move(out));
}

bool dominates(const Partition& p, const Partition& r) {
    if (p.size() != r.size())
        throw std::invalid_argument("dominance compares partitions of equal size only");
    const auto& a = p.parts();
    const auto& b = r.parts();
    std::int64_t sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

namespace {

// Recursive-descent reader over one input string; columns are 1-based.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    long integer() {
        skip_ws();
        long value = 0;
        const char* begin = text_.data() + pos_;
        const char* end = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc() || ptr == begin) fail("expected a nonnegative integer");
        if (value < 0) fail("negative value");
        if (value > 2'000'000'000L) fail("integer out of range");
        pos_ += static_cast<std::size_t>(ptr - begin);
        return value;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError("parse error at column " + std::to_string(pos_ + 1) + ": " + msg,
                         std::string(text_), pos_ + 1);
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<int> read_frequency_body(Reader& r) {
    std::vector<int> freq;
    const bool paren = r.accept('(');
    if (!(paren && r.accept(')'))) {
        do {
            freq.push_back(static_cast<int>(r.integer()));
        } while (r.accept(','));
        if (paren) r.expect(')');
    }
    return freq;
}

}  // namespace

FrequencySeq parse_frequency(std::string_view text) {
    Reader r(text);
    if (r.peek() == 'f') {
        r.expect('f');
        r.expect(':');
    }
    if (r.at_end()) return {};
    auto freq = read_frequency_body(r);
    if (!r.at_end()) r.fail("trailing characters");
    return FrequencySeq(std::move(freq));
}

Partition parse_partition(std::string_view text, int max_part) {
    Reader r(text);
    if (r.at_end()) return {};
    if (r.peek() == 'f') {
        r.expect('f');
        r.expect(':');
        auto freq = read_frequency_body(r);
        if (!r.at_end()) r.fail("trailing characters");
        auto p = to_partition(FrequencySeq(std::move(freq)));
        if (p.largest() > max_part) r.fail("part exceeds limit");
        return p;
    }
    if (r.accept('e') || r.accept('E')) {
        if (!r.at_end()) r.fail("trailing characters after 'e'");
        return {};
    }
    const bool bracket = r.accept('[');
    std::vector<int> parts;
    if (!(bracket && r.accept(']'))) {
        do {
            const long part = r.integer();
            if (part == 0) r.fail("parts must be positive");
            if (part > max_part) r.fail("part exceeds limit " + std::to_string(max_part));
            long mult = 1;
            if (r.accept('^')) mult = r.integer();
            if (mult == 0) r.fail("multiplicity must be positive");
            if (mult > 10'000'000L) r.fail("multiplicity too large");
            parts.insert(parts.end(), static_cast<std::size_t>(mult), static_cast<int>(part));
        } while (r.accept(','));
        if (bracket) r.expect(']');
    }
    if (!r.at_end()) r.fail("trailing characters");
    return Partition(std::move(parts), max_part);
}

std::string format_multiset(const Partition& p) {
    std::string out = "[";
    const auto& v = p.parts();
    for (std::size_t i = 0; i < v.size();) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (i > 0) out += ',';
        out += std::to_string(v[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out + "]";
}

std::string format_plain(const Partition& p) {
    if (p.empty()) return "e";
    std::string out;
    for (int x : p.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

std::string format_frequency(const FrequencySeq& f) {
    std::string out = "(";
    for (int i = 1; i <= f.max_index(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(f[i]);
    }
    return out + ")";
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    if (n < 0) return;
    if (n == 0) {
        visit(Partition{});
        return;
    }
    // Standard successor rule on the reverse-lexicographic order.
    std::vector<int> a{n};
    while (true) {
        visit(Partition(a));
        int ones = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++ones;
        }
        if (a.empty()) return;
        const int k = --a.back();
        int rest = ones + 1;
        while (rest > k) {
            a.push_back(k);
            rest -= k;
        }
        if (rest > 0) a.push_back(rest);
    }
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << format_multiset(p); }

std::ostream& operator<<(std::ostream& os, const FrequencySeq& f) { return os << format_frequency(f); }

}  // namespace burge
