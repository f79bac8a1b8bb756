#include <gtest/gtest.h>

#include <map>
#include <random>

#include "burge/burge_code.hpp"

using namespace burge;

namespace {

Partition P(std::string_view s) { return parse_partition(s); }

// Descent map rebuilt from the recursion that makes it unique: the image of P
// is the image of del P with every part raised by one, padded with ones up to |P|.
Partition recursive_descent_map(const Partition& p, std::map<Partition, Partition>& memo) {
    if (p.empty()) return {};
    if (auto it = memo.find(p); it != memo.end()) return it->second;
    const Partition d = apply_del(p);
    const Partition below = recursive_descent_map(d, memo);
    std::vector<int> parts;
    for (int x : below.parts()) parts.push_back(x + 1);
    const std::int64_t ones = p.size() - d.size() - below.length();
    EXPECT_GE(ones, 0);
    parts.insert(parts.end(), static_cast<std::size_t>(std::max<std::int64_t>(ones, 0)), 1);
    return memo[p] = Partition(std::move(parts));
}

// Every word of (a*b)*a with the given length.
std::vector<Word> burge_words(std::size_t length) {
    std::vector<Word> out;
    if (length == 0) return out;
    for (std::uint32_t mask = 0; mask < (1u << (length - 1)); ++mask) {
        std::vector<Letter> w;
        for (std::size_t i = 0; i + 1 < length; ++i) w.push_back((mask >> i) & 1 ? Letter::b : Letter::a);
        w.push_back(Letter::a);
        Word word(w);
        if (in_burge_language(word)) out.push_back(word);
    }
    return out;
}

FrequencySeq random_frequency(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 14), val(0, 3);
    std::vector<int> f(static_cast<std::size_t>(len(rng)));
    for (int& x : f) x = val(rng);
    return FrequencySeq(f);
}

}  // namespace

TEST(Word, ParseForms) {
    EXPECT_EQ(Word::parse("abBA").str(), "abba");
    EXPECT_EQ(Word::parse("0110").str(), "abba");
    EXPECT_THROW(Word::parse("abc"), ParseError);
    EXPECT_EQ(Word::parse("ab").at(2), Letter::b);
    EXPECT_EQ(Word::parse("abbab").count(Letter::b), 3u);
}

TEST(Word, Language) {
    EXPECT_TRUE(in_burge_language(Word::parse("a")));
    EXPECT_TRUE(in_burge_language(Word::parse("aaba")));
    EXPECT_TRUE(in_burge_language(Word::parse("abbaba")));
    EXPECT_FALSE(in_burge_language(Word::parse("")));
    EXPECT_FALSE(in_burge_language(Word::parse("ab")));
    EXPECT_FALSE(in_burge_language(Word::parse("abaa")));
    EXPECT_FALSE(in_burge_language(Word::parse("aa")));
    EXPECT_THROW(BurgeWord::parse("abaa"), std::invalid_argument);
}

TEST(Operators, ClassB) {
    EXPECT_FALSE(in_class_B(FrequencySeq{1, 1}));
    EXPECT_TRUE(in_class_B(FrequencySeq{2}));
    EXPECT_FALSE(in_class_B(FrequencySeq()));
}

TEST(Operators, PromotionExamples) {
    const FrequencySeq f{2, 2, 1, 3, 1, 0, 4, 0, 0, 2, 1};
    EXPECT_EQ(apply_a(f), (FrequencySeq{1, 3, 0, 4, 0, 1, 3, 1, 0, 1, 2}));
    EXPECT_EQ(apply_b(f), (FrequencySeq{3, 1, 2, 2, 2, 0, 3, 1, 0, 1, 2}));
    EXPECT_EQ(apply_a(FrequencySeq()), FrequencySeq());
    EXPECT_EQ(apply_a(FrequencySeq{0, 1}), (FrequencySeq{0, 0, 1}));
    EXPECT_EQ(apply_b(FrequencySeq()), FrequencySeq{1});
    EXPECT_EQ(apply_b(FrequencySeq{2}), FrequencySeq{3});
}

TEST(Operators, DemotionExamples) {
    EXPECT_EQ(apply_del(FrequencySeq{2, 2, 1, 3, 1, 0, 4, 0, 0, 2, 1}), (FrequencySeq{1, 3, 0, 4, 0, 1, 3, 0, 0, 3}));
    EXPECT_EQ(apply_del(FrequencySeq{1}), FrequencySeq());
    EXPECT_EQ(apply_del(FrequencySeq{1, 2, 1, 0, 1}), (FrequencySeq{0, 3, 0, 1}));
    EXPECT_EQ(apply_del(FrequencySeq()), FrequencySeq());
}

TEST(Operators, DemotionInvertsPromotionsRandom) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        const FrequencySeq f = random_frequency(rng);
        const FrequencySeq a = apply_a(f), b = apply_b(f);
        EXPECT_FALSE(in_class_B(a));
        EXPECT_TRUE(in_class_B(b));
        EXPECT_EQ(apply_del(a), f);
        EXPECT_EQ(apply_del(b), f);
        EXPECT_EQ(apply_del(f).size(), f.size() - two_measure(f));
    }
}

TEST(Operators, ForwardPairsBecomeBackwardPairs) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 1000; ++t) {
        const FrequencySeq f = random_frequency(rng);
        const auto l = left_set(f);
        const auto r = right_set(apply_a(f));
        for (int i : l) EXPECT_NE(std::find(r.begin(), r.end(), i + 1), r.end());
        EXPECT_EQ(l.size(), r.size());
    }
}

TEST(Code, EncodeExamples) {
    EXPECT_EQ(encode(FrequencySeq{1, 2, 1, 0, 1}).str(), "babaaabbba");
    EXPECT_EQ(encode(FrequencySeq()).str(), "a");
    EXPECT_EQ(encode(FrequencySeq{1, 1, 0, 0, 1}).str(), "abbaba");
    EXPECT_EQ(encode(P("5,3,2,2,1")).str(), "babaaabbba");
}

TEST(Code, DecodeExamples) {
    EXPECT_EQ(decode("abbaba"), (FrequencySeq{1, 1, 0, 0, 1}));
    EXPECT_EQ(decode("a"), FrequencySeq());
    EXPECT_EQ(to_partition(decode("aabaaabaaba")), P("10,7,3"));
    EXPECT_THROW(decode("abaa"), std::invalid_argument);
    EXPECT_THROW(decode("ab"), std::invalid_argument);
}

TEST(Code, DecodeBuildsFromTheRight) {
    // a(b(b(a(b(a(e)))))) passes through (1), (0,1), (1,0,1), (2,0,0,1).
    FrequencySeq f;
    f = apply_a(f);
    f = apply_b(f);
    EXPECT_EQ(f, FrequencySeq{1});
    f = apply_a(f);
    EXPECT_EQ(f, (FrequencySeq{0, 1}));
    f = apply_b(f);
    EXPECT_EQ(f, (FrequencySeq{1, 0, 1}));
    f = apply_b(f);
    EXPECT_EQ(f, (FrequencySeq{2, 0, 0, 1}));
    f = apply_a(f);
    EXPECT_EQ(f, (FrequencySeq{1, 1, 0, 0, 1}));
}

TEST(Chain, ExampleTable) {
    const BurgeChain c = chain(FrequencySeq{1, 2, 1, 0, 1});
    const std::vector<FrequencySeq> states = {{1, 2, 1, 0, 1}, {0, 3, 0, 1}, {1, 2, 1}, {0, 3}, {1, 2},
                                              {2, 1},          {3},          {2},       {1},    {}};
    EXPECT_EQ(c.states, states);
    EXPECT_EQ(c.word.str(), "babaaabbba");
}

TEST(Chain, TrivialAndDescentTable) {
    const BurgeChain e = chain(FrequencySeq());
    EXPECT_EQ(e.states, std::vector<FrequencySeq>{FrequencySeq()});
    EXPECT_EQ(e.word.str(), "a");

    // Evolution of the descent set along the chain of [7,4,2,1].
    const BurgeChain c = chain(to_frequency(P("7,4,2,1")));
    EXPECT_EQ(c.word.str(), "ababbaba");
    const std::vector<std::string> codes = {"ababbaba", "babbaba", "abbaba", "bbaba", "baba", "aba", "ba", "a"};
    const std::vector<std::string> parts = {"[7,4,2,1]", "[6,3,1^2]", "[5,2,1]", "[4,1^2]",
                                            "[3,1]",     "[2]",       "[1]",     "[]"};
    const std::vector<std::string> des_parts = {"[7,5,2]", "[6,4,1]", "[5,3]", "[4,2]",
                                                "[3,1]",   "[2]",     "[1]",   "[]"};
    ASSERT_EQ(c.states.size(), codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
        const Partition pi = to_partition(c.states[i]);
        EXPECT_EQ(encode(c.states[i]).str(), codes[i]) << i;
        EXPECT_EQ(format_multiset(pi), parts[i]) << i;
        EXPECT_EQ(format_multiset(descent_map(pi)), des_parts[i]) << i;
    }
    EXPECT_EQ(format_frequency(c.states[1]), "(2,0,1,0,0,1)");
}

TEST(Chain, Invariants) {
    for (int n = 0; n <= 14; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const BurgeChain c = chain(to_frequency(p));
            const std::size_t k = c.states.size() - 1;
            EXPECT_TRUE(c.states.back().empty());
            EXPECT_EQ(c.word.length(), k + 1);
            if (k >= 1) EXPECT_EQ(c.states[k - 1], FrequencySeq{1});
            for (std::size_t i = 0; i <= k; ++i)
                EXPECT_EQ(c.word.word().at(i + 1) == Letter::b, in_class_B(c.states[i]));
            if (n > 0) EXPECT_EQ(c.word.str().substr(c.word.length() - 2), "ba");
        });
}

TEST(Statistics, Examples) {
    const Word w = Word::parse("babaaabbba");
    EXPECT_EQ(descent_set(w), (std::vector<int>{1, 3, 9}));
    EXPECT_EQ(des(w), 3);
    EXPECT_EQ(maj(w), 13);
    const Word a = Word::parse("a");
    EXPECT_TRUE(descent_set(a).empty());
    EXPECT_EQ(des(a), 0);
    EXPECT_EQ(maj(a), 0);
    const Word f2 = Word::parse("ababbaba");
    EXPECT_EQ(descent_set(f2), (std::vector<int>{2, 5, 7}));
    EXPECT_EQ(maj(f2), 14);
}

TEST(DescentMap, Examples) {
    EXPECT_EQ(descent_map(P("5,3,2,2,1")), P("9,3,1"));
    EXPECT_EQ(descent_map(P("10,7,3")), P("10,7,3"));
    EXPECT_EQ(descent_map(P("7,4,2,1")), P("7,5,2"));
    EXPECT_EQ(descent_map(Partition()), Partition());
}

TEST(Characterization, Examples) {
    EXPECT_TRUE(characterize_superdistinct(P("10,7,3")).all());
    const SuperDistinctReport r = characterize_superdistinct(P("4,3"));
    EXPECT_TRUE(r.none());
    EXPECT_FALSE(r.super_distinct);
    EXPECT_FALSE(r.length_is_two);
    EXPECT_FALSE(r.code_has_no_bb);
    EXPECT_FALSE(r.freq_is_right_set);
    EXPECT_FALSE(r.del_is_shift);
    EXPECT_FALSE(r.del_is_reduction);
    EXPECT_FALSE(r.descent_fixed);
    EXPECT_TRUE(characterize_superdistinct(Partition()).all());
}

TEST(Properties, CodeIsABijection) {
    for (int n = 0; n <= 30; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const FrequencySeq f = to_frequency(p);
            EXPECT_EQ(decode(encode(f)), f);
        });
    std::size_t total = 0;
    for (std::size_t len = 1; len <= 16; ++len)
        for (const Word& w : burge_words(len)) {
            const BurgeWord bw(w);
            EXPECT_EQ(encode(decode(bw)), bw);
            ++total;
        }
    // (a*b)*a words of length m: 2^(m-2) for m >= 2, plus the word "a".
    EXPECT_EQ(total, (std::size_t{1} << 15));
}

TEST(Properties, StatisticLaws) {
    for (int n = 0; n <= 25; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const FrequencySeq f = to_frequency(p);
            const FrequencySeq d = apply_del(f);
            const Word w = encode(f).word();
            const int in_b = in_class_B(f) ? 1 : 0;
            ASSERT_EQ(d.length(), f.length() - in_b);
            ASSERT_EQ(d.size(), f.size() - two_measure(f));
            ASSERT_EQ(two_measure(d), two_measure(f) - ((in_b && !in_class_B(d)) ? 1 : 0));
            ASSERT_EQ(static_cast<std::int64_t>(w.count(Letter::b)), f.length());
            ASSERT_EQ(maj(w), f.size());
            ASSERT_EQ(des(w), two_measure(f));
        });
}

TEST(Properties, DescentMapRecursionAndShift) {
    for (int n = 1; n <= 30; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const Partition d = apply_del(p);
            ASSERT_EQ(descent_map(d), reduce(descent_map(p)));
            ASSERT_EQ(encode(d).str(), encode(p).str().substr(1));
        });
}

TEST(Properties, RecursionOracleMatchesDescentMap) {
    std::map<Partition, Partition> memo;
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const Partition d = descent_map(p);
            ASSERT_EQ(recursive_descent_map(p, memo), d) << format_multiset(p);
            ASSERT_TRUE(is_super_distinct(d));
            ASSERT_EQ(d.size(), p.size());
        });
}

TEST(Properties, CharacterizationConsistent) {
    for (int n = 0; n <= 20; ++n)
        for_each_partition(n, [&](const Partition& p) {
            const SuperDistinctReport r = characterize_superdistinct(p);
            ASSERT_TRUE(r.consistent()) << format_multiset(p);
            ASSERT_EQ(r.super_distinct, is_super_distinct(p));
        });
}
