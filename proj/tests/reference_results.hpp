#ifndef KINIT_TESTS_REFERENCE_RESULTS_HPP
#define KINIT_TESTS_REFERENCE_RESULTS_HPP

// Integer-rounded reference results of the eight initializers on the 24 UCI
// datasets (ids 1-24): min, mean and stdev of each criterion, columns in the
// order F, M, K, X, V, P, OV, OP.

#include <array>

namespace kinit::testing {

struct ReferenceRow {
    int id;
    std::array<int, 8> min;
    std::array<int, 8> mean;
    std::array<int, 8> stdev;
};

inline constexpr std::array<ReferenceRow, 24> kReference_initial_sse = {{
    {1, {425, 33, 29, 95, 24, 23, 23, 22}, {483, 46, 34, 95, 24, 23, 23, 22}, {20, 10, 2, 0, 0, 0, 0, 0}},
    {2, {534, 318, 304, 498, 247, 240, 258, 239}, {575, 706, 560, 498, 247, 240, 258, 239}, {15, 354, 349, 0, 0, 0, 0, 0}},
    {3, {20, 11, 9, 19, 8, 8, 8, 7}, {27, 20, 13, 19, 8, 8, 8, 7}, {3, 8, 2, 0, 0, 0, 0, 0}},
    {4, {54, 26, 26, 48, 20, 19, 19, 20}, {61, 40, 33, 48, 20, 19, 19, 20}, {2, 7, 5, 0, 0, 0, 0, 0}},
    {5, {42, 24, 25, 45, 21, 20, 21, 18}, {48, 40, 32, 45, 21, 20, 21, 18}, {2, 9, 5, 0, 0, 0, 0, 0}},
    {6, {372, 361, 341, 409, 249, 250, 249, 244}, {396, 463, 450, 409, 249, 250, 249, 244}, {8, 58, 49, 0, 0, 0, 0, 0}},
    {7, {771, 749, 720, 827, 632, 629, 636, 629}, {814, 1246, 1237, 827, 632, 629, 636, 629}, {12, 463, 468, 0, 0, 0, 0, 0}},
    {8, {26, 9, 9, 18, 8, 8, 7, 7}, {34, 28, 16, 18, 8, 8, 7, 7}, {4, 23, 6, 0, 0, 0, 0, 0}},
    {9, {218965, 212238, 210387, 221163, 145444, 124958, 144658, 122528}, {223003, 224579, 223177, 221163, 145444, 124958, 144658, 122528}, {1406, 5416, 4953, 0, 0, 0, 0, 0}},
    {10, {7763, 2637, 2458, 4816, 2050, 2116, 1919, 1835}, {8057, 4825, 3561, 4816, 2050, 2116, 1919, 1835}, {98, 1432, 747, 0, 0, 0, 0, 0}},
    {11, {7100, 4203, 4158, 5632, 3456, 3101, 3231, 2995}, {7225, 4532, 4501, 5632, 3456, 3101, 3231, 2995}, {30, 165, 176, 0, 0, 0, 0, 0}},
    {12, {4343, 3348, 3296, 4361, 3056, 2927, 3060, 2923}, {4392, 5525, 5346, 4361, 3056, 2927, 3060, 2923}, {13, 1816, 1672, 0, 0, 0, 0, 0}},
    {13, {4416, 5205, 5247, 4485, 3354, 3266, 3315, 3180}, {4475, 5693, 5758, 4485, 3354, 3266, 3315, 3180}, {25, 315, 283, 0, 0, 0, 0, 0}},
    {14, {53508, 56841, 56822, 54629, 37334, 37142, 37282, 36375}, {54312, 82411, 75532, 54629, 37334, 37142, 37282, 36375}, {244, 14943, 12276, 0, 0, 0, 0, 0}},
    {15, {25466, 25492, 24404, 25291, 17476, 15714, 17504, 15118}, {25811, 28596, 27614, 25291, 17476, 15714, 17504, 15118}, {99, 1550, 1499, 0, 0, 0, 0, 0}},
    {16, {633, 275, 250, 635, 300, 230, 232, 222}, {648, 423, 372, 635, 300, 230, 232, 222}, {6, 74, 72, 0, 0, 0, 0, 0}},
    {17, {152, 144, 141, 156, 124, 122, 123, 121}, {156, 216, 219, 156, 124, 122, 123, 121}, {1, 44, 61, 0, 0, 0, 0, 0}},
    {18, {1788, 438, 328, 1818, 316, 309, 276, 268}, {1806, 946, 494, 1818, 316, 309, 276, 268}, {6, 290, 115, 0, 0, 0, 0, 0}},
    {19, {834, 873, 881, 772, 782, 783, 792, 765}, {838, 1186, 1124, 772, 782, 783, 792, 765}, {1, 386, 244, 0, 0, 0, 0, 0}},
    {20, {269, 295, 297, 277, 232, 222, 225, 214}, {281, 384, 413, 277, 232, 222, 225, 214}, {4, 88, 159, 0, 0, 0, 0, 0}},
    {21, {10976, 11834, 11829, 11004, 8517, 7805, 8706, 7802}, {11082, 14814, 14435, 11004, 8517, 7805, 8706, 7802}, {34, 1496, 1276, 0, 0, 0, 0, 0}},
    {22, {719, 473, 449, 733, 386, 361, 364, 351}, {729, 601, 567, 733, 386, 361, 364, 351}, {4, 59, 64, 0, 0, 0, 0, 0}},
    {23, {78, 76, 70, 87, 51, 53, 50, 51}, {87, 113, 101, 87, 51, 53, 50, 51}, {3, 22, 20, 0, 0, 0, 0, 0}},
    {24, {144, 89, 83, 115, 77, 63, 73, 63}, {149, 110, 101, 115, 77, 63, 73, 63}, {2, 8, 9, 0, 0, 0, 0, 0}},
}};

inline constexpr std::array<ReferenceRow, 24> kReference_final_sse = {{
    {1, {21, 22, 21, 25, 21, 21, 21, 21}, {23, 22, 22, 25, 21, 21, 21, 21}, {1, 1, 0, 0, 0, 0, 0, 0}},
    {2, {239, 239, 239, 239, 239, 239, 239, 239}, {239, 239, 239, 239, 239, 239, 239, 239}, {0, 0, 0, 0, 0, 0, 0, 0}},
    {3, {7, 7, 7, 7, 7, 7, 8, 7}, {8, 9, 8, 7, 7, 7, 8, 7}, {1, 1, 1, 0, 0, 0, 0, 0}},
    {4, {17, 17, 17, 19, 17, 18, 18, 18}, {19, 19, 19, 19, 17, 18, 18, 18}, {1, 2, 1, 0, 0, 0, 0, 0}},
    {5, {18, 18, 18, 23, 19, 19, 20, 18}, {20, 21, 20, 23, 19, 19, 20, 18}, {1, 2, 2, 0, 0, 0, 0, 0}},
    {6, {243, 243, 243, 249, 248, 243, 248, 243}, {252, 252, 252, 249, 248, 243, 248, 243}, {8, 8, 8, 0, 0, 0, 0, 0}},
    {7, {629, 629, 629, 826, 629, 629, 629, 629}, {629, 643, 641, 826, 629, 629, 629, 629}, {0, 50, 47, 0, 0, 0, 0, 0}},
    {8, {7, 7, 7, 7, 7, 7, 7, 7}, {8, 8, 7, 7, 7, 7, 7, 7}, {1, 2, 1, 0, 0, 0, 0, 0}},
    {9, {117872, 117764, 117710, 135818, 118495, 118386, 118033, 119326}, {119650, 119625, 119536, 135818, 118495, 118386, 118033, 119326}, {945, 947, 934, 0, 0, 0, 0, 0}},
    {10, {1742, 1742, 1742, 1742, 1742, 1742, 1742, 1742}, {1742, 1742, 1744, 1742, 1742, 1742, 1742, 1742}, {0, 0, 28, 0, 0, 0, 0, 0}},
    {11, {2723, 2718, 2716, 2749, 2735, 2745, 2734, 2747}, {2772, 2757, 2751, 2749, 2735, 2745, 2734, 2747}, {29, 19, 19, 0, 0, 0, 0, 0}},
    {12, {2923, 2923, 2923, 2923, 2923, 2923, 2923, 2923}, {2923, 2923, 2923, 2923, 2923, 2923, 2923, 2923}, {0, 0, 0, 0, 0, 0, 0, 0}},
    {13, {3127, 3128, 3128, 3316, 3137, 3214, 3143, 3153}, {3166, 3172, 3173, 3316, 3137, 3214, 3143, 3153}, {31, 29, 35, 0, 0, 0, 0, 0}},
    {14, {36373, 36373, 36373, 36373, 36373, 36373, 36373, 36373}, {37296, 37163, 37058, 36373, 36373, 36373, 36373, 36373}, {1902, 1338, 1626, 0, 0, 0, 0, 0}},
    {15, {14559, 14559, 14559, 14679, 14581, 14807, 14581, 14650}, {14687, 14752, 14747, 14679, 14581, 14807, 14581, 14650}, {216, 236, 245, 0, 0, 0, 0, 0}},
    {16, {215, 215, 215, 230, 227, 215, 229, 216}, {217, 216, 220, 230, 227, 215, 229, 216}, {4, 2, 7, 0, 0, 0, 0, 0}},
    {17, {121, 121, 121, 121, 121, 121, 121, 121}, {121, 122, 122, 121, 121, 121, 121, 121}, {0, 5, 5, 0, 0, 0, 0, 0}},
    {18, {235, 235, 235, 726, 235, 274, 274, 235}, {317, 272, 260, 726, 235, 274, 274, 235}, {46, 23, 31, 0, 0, 0, 0, 0}},
    {19, {765, 765, 765, 765, 778, 778, 778, 765}, {778, 779, 785, 765, 778, 778, 778, 765}, {3, 14, 19, 0, 0, 0, 0, 0}},
    {20, {214, 214, 214, 214, 214, 214, 214, 214}, {214, 215, 214, 214, 214, 214, 214, 214}, {0, 5, 0, 0, 0, 0, 0, 0}},
    {21, {7772, 7772, 7772, 7772, 7774, 7774, 7774, 7772}, {7799, 7821, 7831, 7772, 7774, 7774, 7774, 7772}, {93, 124, 140, 0, 0, 0, 0, 0}},
    {22, {334, 334, 334, 399, 335, 334, 335, 335}, {335, 336, 336, 399, 335, 334, 335, 335}, {1, 3, 3, 0, 0, 0, 0, 0}},
    {23, {49, 49, 49, 63, 49, 49, 49, 49}, {49, 49, 49, 63, 49, 49, 49, 49}, {0, 2, 2, 0, 0, 0, 0, 0}},
    {24, {58, 58, 58, 61, 69, 59, 69, 59}, {64, 69, 63, 61, 69, 59, 69, 59}, {6, 6, 5, 0, 0, 0, 0, 0}},
}};

inline constexpr std::array<ReferenceRow, 24> kReference_iterations = {{
    {1, {59, 29, 22, 100, 50, 43, 31, 38}, {90, 68, 48, 100, 50, 43, 31, 38}, {11, 19, 17, 0, 0, 0, 0, 0}},
    {2, {4, 4, 4, 8, 4, 4, 5, 3}, {5, 6, 6, 8, 4, 4, 5, 3}, {0, 1, 1, 0, 0, 0, 0, 0}},
    {3, {5, 5, 3, 7, 6, 7, 5, 3}, {10, 9, 7, 7, 6, 7, 5, 3}, {2, 3, 2, 0, 0, 0, 0, 0}},
    {4, {8, 6, 7, 14, 17, 7, 12, 6}, {15, 15, 14, 14, 17, 7, 12, 6}, {6, 5, 5, 0, 0, 0, 0, 0}},
    {5, {6, 5, 4, 6, 6, 5, 9, 4}, {10, 11, 9, 6, 6, 5, 9, 4}, {3, 4, 3, 0, 0, 0, 0, 0}},
    {6, {5, 5, 5, 12, 3, 4, 3, 4}, {11, 10, 9, 12, 3, 4, 3, 4}, {3, 3, 3, 0, 0, 0, 0, 0}},
    {7, {4, 3, 3, 3, 3, 3, 4, 2}, {5, 7, 8, 3, 3, 3, 4, 2}, {1, 2, 2, 0, 0, 0, 0, 0}},
    {8, {4, 4, 3, 6, 4, 4, 6, 3}, {9, 8, 7, 6, 4, 4, 6, 3}, {3, 2, 3, 0, 0, 0, 0, 0}},
    {9, {18, 19, 14, 32, 82, 45, 59, 39}, {43, 40, 36, 32, 82, 45, 59, 39}, {15, 14, 13, 0, 0, 0, 0, 0}},
    {10, {12, 12, 11, 53, 28, 27, 10, 23}, {28, 33, 29, 53, 28, 27, 10, 23}, {8, 10, 9, 0, 0, 0, 0, 0}},
    {11, {39, 37, 31, 73, 100, 83, 67, 85}, {75, 72, 76, 73, 100, 83, 67, 85}, {19, 18, 18, 0, 0, 0, 0, 0}},
    {12, {9, 10, 10, 35, 25, 10, 26, 9}, {18, 18, 20, 35, 25, 10, 26, 9}, {5, 5, 6, 0, 0, 0, 0, 0}},
    {13, {13, 14, 13, 37, 14, 25, 17, 13}, {29, 30, 30, 37, 14, 25, 17, 13}, {10, 10, 11, 0, 0, 0, 0, 0}},
    {14, {4, 4, 4, 8, 5, 5, 5, 3}, {6, 6, 6, 8, 5, 5, 5, 3}, {1, 1, 1, 0, 0, 0, 0, 0}},
    {15, {12, 12, 14, 36, 16, 22, 15, 59}, {31, 33, 30, 36, 16, 22, 15, 59}, {13, 14, 10, 0, 0, 0, 0, 0}},
    {16, {14, 12, 9, 27, 25, 15, 19, 16}, {27, 31, 24, 27, 25, 15, 19, 16}, {9, 14, 11, 0, 0, 0, 0, 0}},
    {17, {8, 4, 4, 19, 11, 10, 8, 5}, {13, 12, 11, 19, 11, 10, 8, 5}, {2, 5, 4, 0, 0, 0, 0, 0}},
    {18, {10, 8, 9, 22, 30, 16, 7, 27}, {25, 25, 23, 22, 30, 16, 7, 27}, {9, 11, 9, 0, 0, 0, 0, 0}},
    {19, {6, 3, 3, 5, 9, 10, 12, 3}, {12, 14, 12, 5, 9, 10, 12, 3}, {5, 6, 7, 0, 0, 0, 0, 0}},
    {20, {6, 5, 4, 7, 7, 7, 6, 2}, {8, 8, 7, 7, 7, 7, 6, 2}, {1, 2, 2, 0, 0, 0, 0, 0}},
    {21, {9, 11, 11, 24, 20, 8, 21, 19}, {20, 22, 20, 24, 20, 8, 21, 19}, {8, 8, 8, 0, 0, 0, 0, 0}},
    {22, {15, 17, 18, 20, 62, 50, 33, 49}, {41, 42, 40, 20, 62, 50, 33, 49}, {20, 18, 18, 0, 0, 0, 0, 0}},
    {23, {4, 4, 4, 9, 5, 7, 5, 5}, {7, 8, 7, 9, 5, 7, 5, 5}, {2, 3, 3, 0, 0, 0, 0, 0}},
    {24, {13, 13, 15, 73, 33, 21, 28, 32}, {29, 31, 29, 73, 33, 21, 28, 32}, {10, 11, 10, 0, 0, 0, 0, 0}},
}};

}  // namespace kinit::testing

#endif  // KINIT_TESTS_REFERENCE_RESULTS_HPP
