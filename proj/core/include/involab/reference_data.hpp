#pragma once

// Published enumeration data used for cross-validation. The involution
// counts are OEIS A230551-A230556 together with A001006 (1234, the Motzkin
// numbers) and A121704 (2413); the simple-involution counts accompany them.

#include <array>

namespace involab::reference {

struct PatternRow {
    const char* pattern;
    // |Av^I_n(pattern)| for n = 5..20.
    std::array<long, 16> counts;
};

inline constexpr std::array<PatternRow, 8> kInvolutionCounts{{
    {"1324", {21, 51, 126, 321, 820, 2160, 5654, 15272, 40758, 112280, 304471, 852164, 2341980, 6640755, 18460066, 52915999}},
    {"1234", {21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634, 310572, 853467, 2356779, 6536382, 18199284, 50852019}},
    {"4231", {21, 51, 128, 327, 858, 2272, 6146, 16716, 46246, 128414, 361493, 1020506, 2913060, 8335405, 24067930, 69646035}},
    {"2431", {24, 62, 154, 396, 992, 2536, 6376, 16238, 40914, 103954, 262298, 665478, 1680726, 4260262, 10766470, 27274444}},
    {"1342", {24, 62, 156, 406, 1040, 2714, 7012, 18322, 47560, 124358, 323708, 846766, 2208032, 5777330, 15082372, 39469786}},
    {"2341", {25, 66, 170, 441, 1124, 2870, 7273, 18477, 46825, 118917, 301734, 766525, 1946293, 4944614, 12557685, 31900554}},
    {"3421", {25, 66, 173, 460, 1218, 3240, 8602, 22878, 60794, 161668, 429752, 1142758, 3038173, 8078606, 21479469, 57113888}},
    {"2413", {24, 64, 166, 456, 1234, 3454, 9600, 27246, 77132, 221336, 635078, 1839000, 5331274, 15555586, 45465412, 133517130}},
}};

struct SimplePatternRow {
    const char* pattern;
    // Simple pattern-avoiding involutions of length n = 5..15.
    std::array<long, 11> counts;
};

inline constexpr std::array<SimplePatternRow, 8> kSimpleInvolutionCounts{{
    {"2413", {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}},
    {"2431", {1, 1, 2, 2, 6, 6, 16, 16, 45, 45, 126}},
    {"3421", {2, 2, 3, 5, 7, 13, 19, 31, 51, 82, 135}},
    {"1342", {2, 3, 2, 5, 10, 17, 22, 44, 68, 127, 184}},
    {"2341", {2, 3, 3, 5, 10, 17, 22, 44, 68, 127, 184}},
    {"4231", {2, 2, 5, 11, 30, 62, 162, 377, 973, 2378, 6116}},
    {"1324", {2, 4, 9, 17, 52, 106, 292, 635, 1753, 3954, 10824}},
    {"1234", {2, 4, 10, 35, 101, 261, 727, 1865, 5127, 13045, 35735}},
}};

// Column order used when printing the count tables (sorted by the final row,
// matching the published presentation).
inline constexpr std::array<const char*, 8> kTable1Order{
    "1324", "1234", "4231", "2431", "1342", "2341", "3421", "2413"};
inline constexpr std::array<const char*, 8> kTable2Order{
    "2431", "2341", "1342", "1234", "1324", "3421", "4231", "2413"};
inline constexpr std::array<const char*, 8> kTable3Order{
    "2413", "2431", "3421", "1342", "2341", "4231", "1324", "1234"};

}  // namespace involab::reference
