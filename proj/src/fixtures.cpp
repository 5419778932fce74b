#include "kdesign/fixtures.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace kdesign {

namespace {

constexpr std::string_view kFano = R"(DESIGN v=7 b=7
# Fano plane, a symmetric (7,3,1)-BIBD.
0 1 3
1 2 4
2 3 5
3 4 6
0 4 5
1 5 6
0 2 6
)";

constexpr std::string_view kSixteenLetter = R"(DESIGN v=16 b=20
# Non-symmetric (16,4,1)-BIBD on the letters a..p, mapped a=0 ... p=15.
# Corrected from the commonly printed list, which repeats pairs e-o, f-p, k-n, l-m:
# c e l o -> c e k p, c f k p -> c f l o, d e k n -> d e l n, d f l m -> d f k m.
0 1 2 3
4 5 6 7
8 9 10 11
12 13 14 15
0 4 8 12
0 5 9 13
0 6 10 14
0 7 11 15
1 4 9 14
1 5 8 15
1 6 11 12
1 7 10 13
2 4 10 15
2 5 11 14
2 6 8 13
2 7 9 12
3 4 11 13
3 5 10 12
3 6 9 15
3 7 8 14
)";

constexpr std::string_view kSixteenLetterPrinted = R"(DESIGN v=16 b=20
# The 16-letter block list exactly as commonly printed (a=0 ... p=15).
# Not balanced: pairs e-o, f-p, k-n, l-m lie in two blocks and e-p, f-o, k-m, l-n in none.
0 1 2 3
4 5 6 7
8 9 10 11
12 13 14 15
0 4 8 12
0 5 9 13
0 6 10 14
0 7 11 15
1 4 9 14
1 5 8 15
1 6 11 12
1 7 10 13
2 4 11 14
2 5 10 15
2 6 8 13
2 7 9 12
3 4 10 13
3 5 11 12
3 6 9 15
3 7 8 14
)";

constexpr std::string_view kThreeDesign = R"(DESIGN v=10 b=30
# 3-(10,4,1) design on Z_10.
0 1 2 8
0 1 3 6
0 1 4 5
0 1 7 9
0 2 3 7
0 2 4 6
0 2 5 9
0 3 4 9
0 3 5 8
0 4 7 8
0 5 6 7
0 6 8 9
1 2 3 4
1 2 5 7
1 2 6 9
1 3 5 9
1 3 7 8
1 4 6 7
1 4 8 9
1 5 6 8
2 3 5 6
2 3 8 9
2 4 5 8
2 4 7 9
2 6 7 8
3 4 5 7
3 4 6 8
3 6 7 9
4 5 6 9
5 7 8 9
)";

const std::array<Fixture, 4>& table() {
    static const std::array<Fixture, 4> fixtures{{
        {"fano", kFano, Verdict::balanced, DesignParams{7, 7, 3, 3, 1}, true, TParams{2, 1}},
        {"sixteen_letter", kSixteenLetter, Verdict::balanced, DesignParams{16, 20, 5, 4, 1}, false, TParams{2, 1}},
        {"sixteen_letter_printed", kSixteenLetterPrinted, Verdict::unbalanced, std::nullopt, false, std::nullopt},
        {"three_design_10_4_1", kThreeDesign, Verdict::balanced, std::nullopt, false, TParams{3, 1}},
    }};
    return fixtures;
}

}  // namespace

std::span<const Fixture> fixtures() {
    return table();
}

const Fixture& fixture(std::string_view name) {
    for (const Fixture& f : table()) {
        if (f.name == name) {
            return f;
        }
    }
    throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
}

}  // namespace kdesign
