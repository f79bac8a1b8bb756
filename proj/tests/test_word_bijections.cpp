#include <gtest/gtest.h>

#include <map>
#include <set>

#include "burge/word_bijections.hpp"

using namespace burge;

namespace {

Partition P(std::string_view s) { return parse_partition(s); }
Word W(std::string_view s) { return Word::parse(s); }

// Inversions counted directly over all pairs.
std::int64_t inv_pairs(const Word& w) {
    std::int64_t n = 0;
    for (std::size_t i = 1; i <= w.length(); ++i)
        for (std::size_t j = i + 1; j <= w.length(); ++j) n += w.at(i) == Letter::b && w.at(j) == Letter::a;
    return n;
}

// Diagonal hooks from explicit cell arm and leg lengths.
Partition hooks_by_cells(const Partition& p) {
    std::vector<int> out;
    for (int i = 0; i < p.length() && p[static_cast<std::size_t>(i)] > i; ++i) {
        const int arm = p[static_cast<std::size_t>(i)] - i - 1;
        int leg = 0;
        for (int r = i + 1; r < p.length() && p[static_cast<std::size_t>(r)] > i; ++r) ++leg;
        out.push_back(arm + leg + 1);
    }
    return Partition(out);
}

}  // namespace

TEST(Inversions, Examples) {
    EXPECT_EQ(inv(W("babaaabbba")), inv_pairs(W("babaaabbba")));
    EXPECT_EQ(inv(W("babaaabbba")), 12);
    EXPECT_EQ(maj(W("babaaabbba")), 13);
    EXPECT_EQ(inv(W("aaabb")), 0);
    EXPECT_EQ(inv(W("ba")), 1);
    EXPECT_EQ(inv(Word()), 0);
}

TEST(Foata, Examples) {
    const Partition q = P("10,7,3");
    const Word w = foata_fiber(q, BoxCoordinates{{1, 1, 1}});
    EXPECT_EQ(w.str(), "babaabaaaaa");
    EXPECT_EQ(inv(w), 20);
    EXPECT_EQ(maj(fiber_code(q, BoxCoordinates{{1, 1, 1}}).word()), 20);

    for (int n = 1; n <= 8; ++n) {
        const Word s = foata_fiber(Partition({n}), BoxCoordinates{{1}});
        EXPECT_EQ(s.str(), "b" + std::string(static_cast<std::size_t>(n), 'a'));
        EXPECT_EQ(inv(s), n);
    }

    const Word top = foata_fiber(q, BoxCoordinates{{3, 3, 2}});
    EXPECT_EQ(top.str(), "bbbbbabbaba");
    EXPECT_EQ(top.str().substr(0, 3), "bbb");

    EXPECT_EQ(foata_fiber(Partition(), BoxCoordinates{}).str(), "a");
    EXPECT_THROW(foata_fiber(q, BoxCoordinates{{4, 1, 1}}), std::invalid_argument);
}

TEST(Path, Examples) {
    EXPECT_EQ(path_to_partition(W("babaabaaaaa")), P("8,7,5"));
    EXPECT_EQ(path_to_partition(W("aaaa")), Partition());
    EXPECT_EQ(path_to_partition(W("ba")), Partition({1}));
    EXPECT_EQ(path_to_partition(W("ab")), Partition());
}

TEST(Hooks, Examples) {
    EXPECT_EQ(conjugate(P("8,7,5")), P("3,3,3,3,3,2,2,1"));
    EXPECT_EQ(diagonal_hooks(P("8,7,5")), P("10,7,3"));
    EXPECT_EQ(durfee(P("8,7,5")), 3);
    EXPECT_EQ(diagonal_hooks(Partition({1})), Partition({1}));
    EXPECT_EQ(durfee(Partition({1})), 1);
    EXPECT_EQ(durfee(Partition()), 0);
    EXPECT_EQ(diagonal_hooks(Partition()), Partition());
    EXPECT_EQ(hook_partner(P("10,7,3"), BoxCoordinates{{1, 1, 1}}), P("8,7,5"));
}

TEST(Hooks, AgreeWithCellCount) {
    for (int n = 0; n <= 16; ++n)
        for_each_partition(n, [&](const Partition& p) {
            ASSERT_EQ(diagonal_hooks(p), hooks_by_cells(p));
            ASSERT_EQ(conjugate(conjugate(p)), p);
            ASSERT_EQ(diagonal_hooks(p).size(), p.size());
            ASSERT_TRUE(is_super_distinct(diagonal_hooks(p)));
            ASSERT_EQ(durfee(p), diagonal_hooks(p).length());
        });
}

TEST(Properties, InversionsMatchPairCount) {
    for (std::size_t len = 0; len <= 12; ++len)
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            std::vector<Letter> letters;
            for (std::size_t i = 0; i < len; ++i) letters.push_back((mask >> i) & 1 ? Letter::b : Letter::a);
            const Word w(letters);
            ASSERT_EQ(inv(w), inv_pairs(w));
            ASSERT_EQ(path_to_partition(w).size(), inv(w));
        }
}

TEST(Properties, HookCorrespondenceOnEveryFiber) {
    for (int n = 0; n <= 22; ++n) {
        std::map<Partition, std::set<Partition>> by_hooks;
        for_each_partition(n, [&](const Partition& p) { by_hooks[diagonal_hooks(p)].insert(p); });
        for_each_partition(n, [&](const Partition& q) {
            if (!is_super_distinct(q)) return;
            std::set<Partition> image;
            for (const FiberEntry& e : fiber(q)) {
                const BurgeWord code = fiber_code(q, e.coords);
                const Word w = foata_fiber(q, e.coords);
                ASSERT_EQ(w.length(), code.length());
                ASSERT_EQ(w.count(Letter::b), code.word().count(Letter::b));
                ASSERT_EQ(inv(w), maj(code.word()));
                const Partition h = path_to_partition(w);
                ASSERT_EQ(h.size(), e.partition.size());
                ASSERT_EQ(h.length(), e.partition.length());
                ASSERT_EQ(h.length(), e.coords.sum());
                ASSERT_EQ(diagonal_hooks(h), q);
                ASSERT_EQ(durfee(h), q.length());
                ASSERT_EQ(durfee(h), two_measure(e.partition));
                image.insert(h);
            }
            ASSERT_EQ(image.size(), static_cast<std::size_t>(delta(q).volume()));
            ASSERT_EQ(image, by_hooks[q]) << format_multiset(q);
        });
    }
}
