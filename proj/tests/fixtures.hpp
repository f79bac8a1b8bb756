#pragma once

// Worked tables shared by the unit and acceptance tests.

#include <string>
#include <vector>

namespace fixtures {

struct FiberRow {
    std::vector<int> coords;
    std::string code;
    std::string partition;
    int parts;
};

// The 18 elements of the preimage of (10,7,3).
inline const std::vector<FiberRow> kFiber1073 = {
    {{1, 1, 1}, "aabaaabaaba", "[10,7,3]", 3},
    {{2, 1, 1}, "abbaaabaaba", "[10,7,2,1]", 4},
    {{3, 1, 1}, "bbbaaabaaba", "[10,7,1^3]", 5},
    {{1, 2, 1}, "aabaabbaaba", "[10,5,3,2]", 4},
    {{2, 2, 1}, "abbaabbaaba", "[10,4,3,2,1]", 5},
    {{3, 2, 1}, "bbbaabbaaba", "[10,4,3,1^3]", 6},
    {{1, 3, 1}, "aababbbaaba", "[10,5,2^2,1]", 5},
    {{2, 3, 1}, "abbabbbaaba", "[10,5,2,1^3]", 6},
    {{3, 3, 1}, "bbbabbbaaba", "[10,5,1^5]", 7},
    {{1, 1, 2}, "aabaaababba", "[9,5,3^2]", 4},
    {{2, 1, 2}, "abbaaababba", "[9,4^2,2,1]", 5},
    {{3, 1, 2}, "bbbaaababba", "[9,4^2,1^3]", 6},
    {{1, 2, 2}, "aabaabbabba", "[9,5,2^3]", 5},
    {{2, 2, 2}, "abbaabbabba", "[9,4,3,2,1^2]", 6},
    {{3, 2, 2}, "bbbaabbabba", "[9,4,3,1^4]", 7},
    {{1, 3, 2}, "aababbbabba", "[9,5,2^2,1^2]", 6},
    {{2, 3, 2}, "abbabbbabba", "[9,5,2,1^4]", 7},
    {{3, 3, 2}, "bbbabbbabba", "[9,5,1^6]", 8},
};

struct ChainRow {
    std::vector<int> frequency;
    std::string letter;
};

// Burge chain of f = (1,2,1,0,1), i.e. P = (5,3,2,2,1).
inline const std::vector<ChainRow> kChain12101 = {
    {{1, 2, 1, 0, 1}, "b"}, {{0, 3, 0, 1}, "a"}, {{1, 2, 1}, "b"}, {{0, 3}, "a"}, {{1, 2}, "a"},
    {{2, 1}, "a"},          {{3}, "b"},          {{2}, "b"},       {{1}, "b"},    {{}, "a"},
};

struct DescentRow {
    std::vector<int> frequency;
    std::string code;
    std::string partition;
    std::string descent;
};

// Descent sets along the Burge chain of [7,4,2,1].
inline const std::vector<DescentRow> kChain7421 = {
    {{1, 1, 0, 1, 0, 0, 1}, "ababbaba", "[7,4,2,1]", "[7,5,2]"},
    {{2, 0, 1, 0, 0, 1}, "babbaba", "[6,3,1^2]", "[6,4,1]"},
    {{1, 1, 0, 0, 1}, "abbaba", "[5,2,1]", "[5,3]"},
    {{2, 0, 0, 1}, "bbaba", "[4,1^2]", "[4,2]"},
    {{1, 0, 1}, "baba", "[3,1]", "[3,1]"},
    {{0, 1}, "aba", "[2]", "[2]"},
    {{1}, "ba", "[1]", "[1]"},
    {{}, "a", "[]", "[]"},
};

struct GridStep {
    std::vector<int> state;
    std::vector<int> maximal;
    std::vector<int> left_admissible;
    long long value;
};

// Oblak chains of del^r f for P = [1,2^3,5,10,14], one row per r; each step
// lists the state, its maximal indices, the left admissible ones among them
// and the evaluation.
inline const std::vector<std::vector<GridStep>> kGrid1235 = {
    {{{1, 3, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {13, 14}, {13}, 14},
     {{1, 3, 0, 0, 1, 0, 0, 0, 0, 1}, {0, 1}, {1}, 11},
     {{0, 0, 1, 0, 0, 0, 0, 1}, {7, 8}, {7}, 8},
     {{0, 0, 1}, {2, 3}, {2}, 3}},
    {{{2, 2, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {12, 13}, {12}, 13},
     {{2, 2, 0, 1, 0, 0, 0, 0, 1}, {0, 1}, {1}, 10},
     {{0, 1, 0, 0, 0, 0, 1}, {6, 7}, {6}, 7},
     {{0, 1}, {0, 1, 2}, {1}, 2}},
    {{{3, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {11, 12}, {11}, 12},
     {{3, 1, 1, 0, 0, 0, 0, 1}, {0, 1}, {1}, 9},
     {{1, 0, 0, 0, 0, 1}, {5, 6}, {5}, 6},
     {{1}, {0, 1}, {0}, 1}},
    {{{2, 2, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {10, 11}, {10}, 11},
     {{2, 2, 0, 0, 0, 0, 1}, {0, 1}, {1}, 8},
     {{0, 0, 0, 0, 1}, {4, 5}, {4}, 5}},
    {{{3, 1, 0, 0, 0, 1, 0, 0, 0, 1}, {9, 10}, {9}, 10},
     {{3, 1, 0, 0, 0, 1}, {0, 1}, {1}, 7},
     {{0, 0, 0, 1}, {3, 4}, {3}, 4}},
    {{{4, 0, 0, 0, 1, 0, 0, 0, 1}, {8, 9}, {8}, 9},
     {{4, 0, 0, 0, 1}, {0, 1}, {0}, 6},
     {{0, 0, 1}, {2, 3}, {2}, 3}},
    {{{3, 0, 0, 1, 0, 0, 0, 1}, {7, 8}, {7}, 8},
     {{3, 0, 0, 1}, {0, 1}, {0}, 5},
     {{0, 1}, {0, 1, 2}, {1}, 2}},
    {{{2, 0, 1, 0, 0, 0, 1}, {6, 7}, {6}, 7}, {{2, 0, 1}, {0, 1}, {0}, 4}, {{1}, {0, 1}, {0}, 1}},
    {{{1, 1, 0, 0, 0, 1}, {5, 6}, {5}, 6}, {{1, 1}, {0, 1}, {1}, 3}},
    {{{2, 0, 0, 0, 1}, {4, 5}, {4}, 5}, {{2}, {0, 1}, {0}, 2}},
    {{{1, 0, 0, 1}, {3, 4}, {3}, 4}, {{1}, {0, 1}, {0}, 1}},
    {{{0, 0, 1}, {2, 3}, {2}, 3}},
    {{{0, 1}, {0, 1, 2}, {1}, 2}},
    {{{1}, {0, 1}, {0}, 1}},
    {},
};

}  // namespace fixtures
