// Generated by tests/oracle/sequential_recursion.py; do not edit.
#pragma once

#include <cstdint>

namespace frozen {

struct Dyadic {
  const char* numerator;
  std::int64_t exponent;
};

// b_m = beta(0, m+1), m = 0 .. 64
inline constexpr Dyadic kB[] = {
    {"-1", 1},  // b_0
    {"1", 3},  // b_1
    {"-1", 2},  // b_2
    {"15", 7},  // b_3
    {"0", 0},  // b_4
    {"-47", 10},  // b_5
    {"-1", 4},  // b_6
    {"987", 15},  // b_7
    {"0", 0},  // b_8
    {"-3673", 18},  // b_9
    {"1", 5},  // b_10
    {"-61029", 22},  // b_11
    {"0", 0},  // b_12
    {"-689455", 25},  // b_13
    {"-21", 9},  // b_14
    {"59250963", 31},  // b_15
    {"0", 0},  // b_16
    {"-164712949", 34},  // b_17
    {"39", 11},  // b_18
    {"-2402805839", 38},  // b_19
    {"-1", 6},  // b_20
    {"-4850812329", 41},  // b_21
    {"29", 11},  // b_22
    {"-18151141041", 46},  // b_23
    {"0", 0},  // b_24
    {"3534139462275", 49},  // b_25
    {"-1039", 17},  // b_26
    {"-22045971176589", 53},  // b_27
    {"-1", 8},  // b_28
    {"-750527255965871", 56},  // b_29
    {"-4579", 19},  // b_30
    {"54146872254247683", 63},  // b_31
    {"0", 0},  // b_32
    {"-155379776183158669", 66},  // b_33
    {"2851", 20},  // b_34
    {"-6051993294029466699", 70},  // b_35
    {"-1", 10},  // b_36
    {"7704579806709870203", 73},  // b_37
    {"92051", 24},  // b_38
    {"-403307733528668035403", 78},  // b_39
    {"0", 0},  // b_40
    {"1650116480759617184697", 81},  // b_41
    {"-229813", 26},  // b_42
    {"36124726440442241978477", 85},  // b_43
    {"-41", 12},  // b_44
    {"-225851495844149964787753", 88},  // b_45
    {"564373", 26},  // b_46
    {"-35761228458796476847725737", 94},  // b_47
    {"0", 0},  // b_48
    {"362376876750551361794705823", 97},  // b_49
    {"-29407003", 33},  // b_50
    {"-6510398483578238274151194427", 101},  // b_51
    {"33", 13},  // b_52
    {"74815618913797220433481657203", 104},  // b_53
    {"-30057875", 35},  // b_54
    {"-698617278028915809388280344009", 109},  // b_55
    {"0", 0},  // b_56
    {"-8675905413734991085610532783493", 112},  // b_57
    {"-27868893", 36},  // b_58
    {"-375687870961637050293461860951517", 116},  // b_59
    {"1", 12},  // b_60
    {"-1418434432207399687114226995905967", 119},  // b_61
    {"-11847286243", 40},  // b_62
    {"1084116104452462070609082665064238307", 127},  // b_63
    {"0", 0},  // b_64
};

struct Entry {
  int n;
  std::int64_t m;
  const char* numerator;
  std::int64_t exponent;
};

// Every nontrivial beta(n,m) with 1 <= n and m <= 40
inline constexpr Entry kBeta[] = {
    {1, 3, "-1", 1},
    {1, 4, "1", 2},
    {1, 5, "-1", 4},
    {1, 6, "0", 0},
    {1, 7, "-47", 8},
    {1, 8, "1", 4},
    {1, 9, "15", 11},
    {1, 10, "0", 0},
    {1, 11, "2149", 16},
    {1, 12, "-3", 7},
    {1, 13, "10777", 19},
    {1, 14, "-1", 4},
    {1, 15, "-597243", 23},
    {1, 16, "25", 9},
    {1, 17, "-73649", 26},
    {1, 18, "0", 0},
    {1, 19, "78936429", 32},
    {1, 20, "-25", 11},
    {1, 21, "-557921931", 35},
    {1, 22, "-1", 6},
    {1, 23, "14523901423", 39},
    {1, 24, "263", 15},
    {1, 25, "1303569481", 42},
    {1, 26, "0", 0},
    {1, 27, "-818237296015", 47},
    {1, 28, "-245", 17},
    {1, 29, "-16152061835331", 50},
    {1, 30, "-1", 6},
    {1, 31, "-380442963787091", 54},
    {1, 32, "5463", 19},
    {1, 33, "284733587853391", 57},
    {1, 34, "0", 0},
    {1, 35, "48411051270773245", 64},
    {1, 36, "-30587", 22},
    {1, 37, "93569466552727181", 67},
    {1, 38, "-3", 10},
    {1, 39, "32173478780996455403", 71},
    {1, 40, "-54707", 24},
    {2, 7, "-1", 1},
    {2, 8, "1", 2},
    {2, 9, "-1", 4},
    {2, 10, "1", 3},
    {2, 11, "-15", 8},
    {2, 12, "0", 0},
    {2, 13, "47", 11},
    {2, 14, "-3", 5},
    {2, 15, "-9179", 16},
    {2, 16, "1", 4},
    {2, 17, "28249", 19},
    {2, 18, "-1", 6},
    {2, 19, "3685", 23},
    {2, 20, "0", 0},
    {2, 21, "-1579729", 26},
    {2, 22, "-11", 10},
    {2, 23, "155526893", 32},
    {2, 24, "1", 6},
    {2, 25, "100831733", 35},
    {2, 26, "-107", 12},
    {2, 27, "3298764879", 39},
    {2, 28, "0", 0},
    {2, 29, "-38622706263", 42},
    {2, 30, "-185", 12},
    {2, 31, "-7610287386959", 47},
    {2, 32, "9", 8},
    {2, 33, "-893765841539", 50},
    {2, 34, "2415", 18},
    {2, 35, "-67352672813939", 54},
    {2, 36, "0", 0},
    {2, 37, "63999969988783", 57},
    {2, 38, "-7033", 20},
    {2, 39, "464327755444964605", 64},
    {2, 40, "-13", 10},
    {3, 15, "-1", 1},
    {3, 16, "1", 2},
    {3, 17, "-1", 4},
    {3, 18, "1", 3},
    {3, 19, "-15", 8},
    {3, 20, "0", 0},
    {3, 21, "47", 11},
    {3, 22, "1", 5},
    {3, 23, "-987", 16},
    {3, 24, "0", 0},
    {3, 25, "3673", 19},
    {3, 26, "-1", 6},
    {3, 27, "61029", 23},
    {3, 28, "0", 0},
    {3, 29, "689455", 26},
    {3, 30, "-107", 10},
    {3, 31, "-596121875", 32},
    {3, 32, "1", 4},
    {3, 33, "1775325685", 35},
    {3, 34, "-39", 12},
    {3, 35, "-1355290545", 39},
    {3, 36, "1", 7},
    {3, 37, "131015476649", 42},
    {3, 38, "-29", 12},
    {3, 39, "-640589467983", 47},
    {3, 40, "0", 0},
    {4, 31, "-1", 1},
    {4, 32, "1", 2},
    {4, 33, "-1", 4},
    {4, 34, "1", 3},
    {4, 35, "-15", 8},
    {4, 36, "0", 0},
    {4, 37, "47", 11},
    {4, 38, "1", 5},
    {4, 39, "-987", 16},
    {4, 40, "0", 0},
};

}  // namespace frozen
