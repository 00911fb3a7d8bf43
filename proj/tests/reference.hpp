#ifndef GMCD_TESTS_REFERENCE_HPP
#define GMCD_TESTS_REFERENCE_HPP

// Reference matrices, vector fields and coefficient tables, kept as text so
// they are parsed independently of the code under test.

#include <string>
#include <utility>
#include <vector>

namespace ref {

using Grid = std::vector<std::vector<std::string>>;

// Intersection matrices, c stands for the constant c_n.
inline Grid omega1() {
  return {{"0", "-3*c/(t1^3-t3)"}, {"3*c/(t1^3-t3)", "0"}};
}

inline Grid omega2() {
  return {{"0", "0", "16*c/(t1^4-t4)"},
          {"0", "-16*c/(t1^4-t4)", "32*c*t1^3/(t1^4-t4)^2"},
          {"16*c/(t1^4-t4)", "32*c*t1^3/(t1^4-t4)^2", "-16*c*t1^2*(5*t1^4-t4)/(t1^4-t4)^3"}};
}

// exp238 is the t1 exponent of the 238 t1^? t6 term in entry (5,5); weighted
// homogeneity forces 12, and 2 is a known misreading.
inline Grid omega4(int exp238 = 12) {
  const std::string d = "(t1^6-t6)";
  const std::string k = "6^4*c";
  return {
      {"0", "0", "0", "0", k + "/" + d},
      {"0", "0", "0", "-" + k + "/" + d, "9*" + k + "*t1^5/" + d + "^2"},
      {"0", "0", k + "/" + d, "-3*" + k + "*t1^5/" + d + "^2",
       k + "*t1^4*(7*t1^6+20*t6)/" + d + "^3"},
      {"0", "-" + k + "/" + d, "-3*" + k + "*t1^5/" + d + "^2",
       k + "*t1^4*(14*t1^6-5*t6)/" + d + "^3",
       "-" + k + "*t1^3*(56*t1^12+35*t1^6*t6-10*t6^2)/" + d + "^4"},
      {k + "/" + d, "9*" + k + "*t1^5/" + d + "^2", k + "*t1^4*(7*t1^6+20*t6)/" + d + "^3",
       "-" + k + "*t1^3*(56*t1^12+35*t1^6*t6-10*t6^2)/" + d + "^4",
       k + "*t1^2*(273*t1^18+238*t1^" + std::to_string(exp238) +
           "*t6+217*t1^6*t6^2+t6^3)/" + d + "^5"}};
}

// Gauss-Manin connection matrices: each entry is {dt1 part, dt<n+2> part}.
using FormGrid = std::vector<std::vector<std::pair<std::string, std::string>>>;

inline FormGrid gm1() {
  return {{{"0", "-1/(3*t3)"}, {"1", "-t1/(3*t3)"}},
          {{"-t1/(t1^3-t3)", "t1^2/(3*t3*(t1^3-t3))"},
           {"-3*t1^2/(t1^3-t3)", "(t1^3+2*t3)/(3*t3*(t1^3-t3))"}}};
}

inline FormGrid gm2() {
  return {{{"0", "-1/(4*t4)"}, {"1", "-t1/(4*t4)"}, {"0", "0"}},
          {{"0", "0"}, {"0", "-2/(4*t4)"}, {"1", "-t1/(4*t4)"}},
          {{"-t1/(t1^4-t4)", "t1^2/(4*t4*(t1^4-t4))"},
           {"-7*t1^2/(t1^4-t4)", "7*t1^3/(4*t4*(t1^4-t4))"},
           {"-6*t1^3/(t1^4-t4)", "(3*t1^4+3*t4)/(4*t4*(t1^4-t4))"}}};
}

// Series coefficients, q^0..q^15. Columns: t1, t2, t3 for n = 1 and
// 10/6 t1(q/10), 10/4 t2(q/10), 10^4 t4(q/10) for n = 2.
inline Grid table1() {
  return {{"1/3", "-1", "0", "1/24", "1/8", "0"},   {"2", "-3", "1", "1", "-1", "1"},
          {"0", "-9", "3", "1", "-5", "-8"},        {"2", "15", "9", "4", "-4", "12"},
          {"2", "-21", "13", "1", "-13", "64"},     {"0", "-18", "24", "6", "-6", "-210"},
          {"0", "45", "27", "4", "-20", "-96"},     {"4", "-24", "50", "8", "-8", "1016"},
          {"0", "-45", "51", "1", "-29", "-512"},   {"2", "69", "81", "13", "-13", "-2043"},
          {"0", "-54", "72", "6", "-30", "1680"},   {"0", "-36", "120", "12", "-12", "1092"},
          {"2", "105", "117", "4", "-52", "768"},   {"4", "-42", "170", "14", "-14", "1382"},
          {"0", "-72", "150", "8", "-40", "-8128"}, {"0", "90", "216", "24", "-24", "-2520"}};
}

// n = 4, rows 1/20 t1, 1/216 t2, 1/14 t3, 1/24 t4, 1/2 t5, -6^6 t6, -1/2 t7,
// 18/7 t8; columns q^0..q^6.
inline Grid table2() {
  return {
      {"1/720", "1", "4131", "51734044", "918902851011", "19562918469120126",
       "465569724397794578388"},
      {"-1/216", "9", "110703", "2248267748", "55181044614231", "1498877559908208054",
       "43378802521495632926652"},
      {"-1/504", "11", "115137", "2265573692", "54820079452449", "1477052190387154386",
       "42523861222488896739828"},
      {"-1/144", "16", "193131", "3904146832", "95619949713765", "2594164605185043648",
       "75018247757143686903060"},
      {"-1/144", "45", "469872", "9215455916", "222628516313454", "5992746995783064438",
       "172421735348939185816992"},
      {"0", "-1", "1944", "10066356", "139857401664", "2615615263199250",
       "57453864811412558112"},
      {"-1/72", "7", "32859", "414746092", "7395891627375", "157811370338782458",
       "3761184845284146266940"},
      {"-1/3024", "7", "54855", "1034706148", "24546181658391", "653902684588247058",
       "18687787944102314534628"}};
}

// (1/6) Y_1^2 for n = 4, q^0..q^10.
inline std::vector<std::string> yukawa4() {
  return {"6",
          "120960",
          "4136832000",
          "148146924602880",
          "5420219848911544320",
          "200623934537137119778560",
          "7478994517395643259712737280",
          "280135301818357004749298146851840",
          "10528167289356385699173014219946393600",
          "396658819202496234945300681212382224722560",
          "14972930462574202465673643937107499992165427200"};
}

// Modular vector fields with symbolic c, as (coordinate, component) pairs.
using Field = std::vector<std::pair<std::string, std::string>>;

inline Field r1() {
  return {{"t1", "(-3*c*t1*t2-(t1^3-t3))/(3*c)"},
          {"t2", "(t1*(t1^3-t3)-9*c^2*t2^2)/(9*c^2)"},
          {"t3", "-3*t2*t3"}};
}

inline Field r2() {
  return {{"t1", "-t1*t2+t3"},
          {"t2", "-(t1^2+16*c*t2^2)/(32*c)"},
          {"t3", "-(16*c*t2*t3+t1^3)/(8*c)"},
          {"t4", "-4*t2*t4"}};
}

inline Field r4() {
  const std::string d = "(t1^6-t6)";
  return {{"t1", "t3-t1*t2"},
          {"t2", "(1296*c*t3^2*t4*t8-t1^6*t2^2+t2^2*t6)/" + d},
          {"t3", "(1296*c*t3^2*t5*t8-3*t1^6*t2*t3+3*t2*t3*t6)/" + d},
          {"t4", "(-1296*c*t3^2*t7*t8-t1^6*t2*t4+t2*t4*t6)/" + d},
          {"t5", "(1296*c*t3*t5^2*t8-4*t1^6*t2*t5-2*t1^6*t3*t4+5*t1^4*t3*t8+4*t2*t5*t6+"
                 "2*t3*t4*t6)/(2*" + d + ")"},
          {"t6", "-6*t2*t6"},
          {"t7", "(1296*c*t4^2-t1^2)/(2592*c)"},
          {"t8", "(-3*t1^6*t2*t8+3*t1^5*t3*t8+3*t2*t6*t8)/" + d}};
}

// Specializations at c = 1/27 (n = 1) and c = -1/64 (n = 2).
inline Field r1_special() {
  return {{"t1", "-t1*t2-9*(t1^3-t3)"}, {"t2", "81*t1*(t1^3-t3)-t2^2"}, {"t3", "-3*t2*t3"}};
}

inline Field r2_special() {
  return {{"t1", "t3-t1*t2"}, {"t2", "2*t1^2-t2^2/2"}, {"t3", "8*t1^3-2*t2*t3"}, {"t4", "-4*t2*t4"}};
}

}  // namespace ref

#endif  // GMCD_TESTS_REFERENCE_HPP
