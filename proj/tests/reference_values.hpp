#pragma once

// Published table values, used only for comparison.

#include <array>
#include <cstdint>
#include <string_view>

namespace reference {

struct GroupCell {
  const char* size;
  double value;
  std::string_view group;
};

// Table 1 columns: P = 0, P_3, C_3 on D3*; value is the center density.
inline constexpr std::array<std::array<GroupCell, 3>, 10> kTable1{{
    {{{"4", 0.176777, "Z_2 (+) Z_2"}, {"7", 0.133631, "Z_7"}, {"3", 0.0721688, "Z_3"}}},
    {{{"32", 0.176777, "Z_2 (+) Z_4 (+) Z_4"}, {"38", 0.162221, "Z_38"}, {"26", 0.0969021, "Z_26"}}},
    {{{"108", 0.176777, "Z_3 (+) Z_6 (+) Z_6"}, {"117", 0.169842, "Z_117"}, {"93", 0.116923, "Z_93"}}},
    {{{"256", 0.176777, "Z_4 (+) Z_8 (+) Z_8"}, {"268", 0.172774, "Z_268"}, {"228", 0.129349, "Z_228"}}},
    {{{"500", 0.176777, "Z_5 (+) Z_10 (+) Z_10"}, {"515", 0.174183, "Z_515"}, {"455", 0.137602, "Z_455"}}},
    {{{"864", 0.176777, "Z_6 (+) Z_12 (+) Z_12"}, {"882", 0.174964, "Z_882"}, {"798", 0.143442, "Z_798"}}},
    {{{"1372", 0.176777, "Z_7 (+) Z_14 (+) Z_14"}, {"1393", 0.175439, "Z_1393"}, {"1281", 0.147780, "Z_1281"}}},
    {{{"2048", 0.176777, "Z_8 (+) Z_16 (+) Z_16"}, {"2072", 0.175750, "Z_2072"}, {"1928", 0.151126, "Z_1928"}}},
    {{{"2916", 0.176777, "Z_9 (+) Z_18 (+) Z_18"}, {"2943", 0.175964, "Z_2943"}, {"2763", 0.153783, "Z_2763"}}},
    {{{"4000", 0.176777, "Z_10 (+) Z_20 (+) Z_20"}, {"4030", 0.176117, "Z_4030"}, {"3810", 0.155943, "Z_3810"}}},
}};

// Table 2 columns: D3, D4, D5, D6 with P_n; value is the density ratio.
inline constexpr std::array<std::array<GroupCell, 4>, 10> kTable2{{
    {{{"", 0.7559, "Z_7"}, {"", 1.0, "Z_3 (+) Z_6"}, {"", 0.6718, "Z_41"}, {"", 0.675, "Z_10 (+) Z_10"}}},
    {{{"", 0.9177, "Z_38"}, {"", 1.0, "Z_9 (+) Z_18"}, {"", 0.8732, "Z_682"}, {"", 0.8576, "Z_17 (+) Z_170"}}},
    {{{"", 0.9608, "Z_117"}, {"", 1.0, "Z_19 (+) Z_38"}, {"", 0.9371, "Z_4443"}, {"", 0.9269, "Z_74 (+) Z_370"}}},
    {{{"", 0.9774, "Z_268"}, {"", 1.0, "Z_33 (+) Z_66"}, {"", 0.9631, "Z_17684"}, {"", 0.9565, "Z_65 (+) Z_2210"}}},
    {{{"", 0.9853, "Z_515"}, {"", 1.0, "Z_51 (+) Z_102"}, {"", 0.9759, "Z_52525"}, {"", 0.9714, "Z_202 (+) Z_2626"}}},
    {{{"", 0.9897, "Z_882"}, {"", 1.0, "Z_73 (+) Z_146"}, {"", 0.9831, "Z_128766"}, {"", 0.9799, "Z_145 (+) Z_10730"}}},
    {{{"", 0.9924, "Z_1393"}, {"", 1.0, "Z_99 (+) Z_198"}, {"", 0.9875, "Z_275807"}, {"", 0.9851, "Z_394 (+) Z_9850"}}},
    {{{"", 0.9942, "Z_2072"}, {"", 1.0, "Z_129 (+) Z_258"}, {"", 0.9904, "Z_534568"}, {"", 0.9885, "Z_257 (+) Z_33410"}}},
    {{{"", 0.9954, "Z_2943"}, {"", 1.0, "Z_163 (+) Z_326"}, {"", 0.9924, "Z_959409"}, {"", 0.9909, "Z_650 (+) Z_26650"}}},
    {{{"", 0.9963, "Z_4030"}, {"", 1.0, "Z_201 (+) Z_402"}, {"", 0.9938, "Z_1620050"}, {"", 0.9926, "Z_401 (+) Z_81002"}}},
}};

// Table 3 columns: E7, E8 first basis, E8 second basis, each with its P.
inline constexpr std::array<std::array<GroupCell, 3>, 10> kTable3{{
    {{{"", 0.2346, "Z_2 (+) Z_68"}, {"", 0.1204, "Z_2 (+) Z_78"}, {"", 0.2706, "Z_2 (+) Z_2 (+) Z_364"}}},
    {{{"", 0.4161, "Z_2 (+) Z_1552"}, {"", 0.4022, "Z_4 (+) Z_2316"}, {"", 0.5065, "Z_2 (+) Z_4 (+) Z_15128"}}},
    {{{"", 0.5966, "Z_2 (+) Z_15468"}, {"", 0.622, "Z_6 (+) Z_26154"}, {"", 0.6918, "Z_2 (+) Z_6 (+) Z_189252"}}},
    {{{"", 0.7208, "Z_2 (+) Z_92192"}, {"", 0.7521, "Z_8 (+) Z_165912"}, {"", 0.7993, "Z_2 (+) Z_8 (+) Z_1251376"}}},
    {{{"", 0.8005, "Z_2 (+) Z_391540"}, {"", 0.8284, "Z_10 (+) Z_729030"}, {"", 0.8616, "Z_2 (+) Z_10 (+) Z_5612060"}}},
    {{{"", 0.8522, "Z_2 (+) Z_1313328"}, {"", 0.8754, "Z_12 (+) Z_2495268"}, {"", 0.8997, "Z_2 (+) Z_12 (+) Z_19429704"}}},
    {{{"", 0.8869, "Z_2 (+) Z_3708572"}, {"", 0.9059, "Z_14 (+) Z_7137186"}, {"", 0.9243, "Z_2 (+) Z_14 (+) Z_55966708"}}},
    {{{"", 0.911, "Z_2 (+) Z_9191488"}, {"", 0.9266, "Z_16 (+) Z_17842224"}, {"", 0.9411, "Z_2 (+) Z_16 (+) Z_140558432"}}},
    {{{"", 0.9284, "Z_2 (+) Z_20572452"}, {"", 0.9412, "Z_18 (+) Z_40176702"}, {"", 0.9529, "Z_2 (+) Z_18 (+) Z_317517516"}}},
    {{{"", 0.9412, "Z_2 (+) Z_42432080"}, {"", 0.952, "Z_20 (+) Z_83232060"}, {"", 0.9615, "Z_2 (+) Z_20 (+) Z_659296120"}}},
}};

struct CodeCell {
  double distance;
  const char* size;
};

// Table 4, w = 2..10, in the column order e8-1 P=0, e8-2 P=0, e8-1 P, e8-2 P.
inline constexpr std::array<std::array<CodeCell, 4>, 9> kTable4{{
    {{{0.707107, "4096"}, {0.707107, "65536"}, {0.839849, "9264"}, {0.639702, "121024"}}},
    {{{0.707107, "104976"}, {0.500000, "1679616"}, {0.641669, "156924"}, {0.468092, "2271024"}}},
    {{{0.500000, "1048576"}, {0.382683, "16777216"}, {0.509472, "1327296"}, {0.366403, "20022016"}}},
    {{{0.415627, "6250000"}, {0.309017, "100000000"}, {0.419589, "7290300"}, {0.299852, "112241200"}}},
    {{{0.366025, "26873856"}, {0.258819, "429981696"}, {0.355527, "29943216"}, {0.253223, "466312896"}}},
    {{{0.306802, "92236816"}, {0.222521, "1475789056"}, {0.307914, "99920604"}, {0.218878, "1567067824"}}},
    {{{0.270598, "268435456"}, {0.195090, "4294967296"}, {0.271283, "285475584"}, {0.192596, "4497869824"}}},
    {{{0.241845, "688747536"}, {0.173648, "11019960576"}, {0.242296, "723180636"}, {0.171869, "11430630576"}}},
    {{{0.218508, "1600000000"}, {0.156434, "25600000000"}, {0.218821, "1664641200"}, {0.155124, "26371844800"}}},
}};

struct LogCodeCell {
  double log10_size;
  double distance;
};

// Table 5, one row per w = 1..13: leech-1 with P, leech-2 with P = 0.
inline constexpr std::array<std::array<LogCodeCell, 2>, 13> kTable5{{
    {{{10.1917, 0.633946}, {10.8371, 0.57735}}},
    {{{15.5128, 0.484887}, {18.0618, 0.408248}}},
    {{{19.1994, 0.370468}, {22.288, 0.288675}}},
    {{{21.9813, 0.294144}, {25.2865, 0.220942}}},
    {{{24.2006, 0.24225}, {27.6124, 0.178411}}},
    {{{26.0413, 0.205264}, {29.5127, 0.149429}}},
    {{{27.6113, 0.177774}, {31.1194, 0.128473}}},
    {{{28.9791, 0.156625}, {32.5112, 0.112635}}},
    {{{30.1901, 0.13989}, {33.7389, 0.100256}}},
    {{{31.2763, 0.126336}, {34.8371, 0.0903175}}},
    {{{32.2609, 0.115147}, {35.8305, 0.0821655}}},
    {{{33.161, 0.10576}, {36.7374, 0.0753593}}},
    {{{33.99, 0.097775}, {37.5717, 0.0695919}}},
}};

struct RoundedCell {
  double w;
  std::int64_t size;
  double ratio;
};

// Table 6, E6 on the rounded path.
inline constexpr std::array<RoundedCell, 18> kTable6Integer{{
    {1, 1, 0.2165},         {2, 16, 0.3059},        {3, 216, 0.3761},       {4, 2160, 0.4011},
    {5, 11520, 0.4538},     {6, 27440, 0.5469},     {7, 76800, 0.7639},     {8, 183708, 0.6381},
    {9, 252000, 0.7376},    {10, 569184, 0.7247},   {11, 1078272, 0.6326},  {12, 1514240, 0.7356},
    {13, 2806650, 0.7436},  {14, 4224000, 0.7454},  {15, 6714048, 0.7095},  {16, 9173736, 0.7707},
    {17, 14555520, 0.8081}, {18, 21294000, 0.7831},
}};

inline constexpr std::array<RoundedCell, 18> kTable6Fractional{{
    {9, 252000, 0.7376},    {9.1, 277200, 0.6141},  {9.2, 431200, 0.77},     {9.35, 431200, 0.7247},
    {9.4, 474320, 0.6437},  {9.55, 474320, 0.6706}, {9.6, 521752, 0.6987},   {9.7, 521752, 0.6643},
    {10, 569184, 0.7247},   {10.05, 569184, 0.6856}, {10.1, 569184, 0.6624}, {10.3, 620928, 0.7601},
    {10.45, 698544, 0.6643}, {10.5, 762048, 0.7247}, {10.65, 995328, 0.792}, {10.7, 995328, 0.7917},
    {10.85, 1078272, 0.6711}, {11, 1078272, 0.6326},
}};

}  // namespace reference
