#include "dmh/reference.hpp"

namespace dmh {

const std::vector<ReferenceCell>& reference_hurwitz_cells() {
  // Entries are mu_1...mu_n times the value.
  static const std::vector<ReferenceCell> cells{
      {Family::Monotone, 0, "(1)", "1"},
      {Family::Monotone, 1, "(1)", "0"},
      {Family::Monotone, 0, "(2)", "t"},
      {Family::Monotone, 1, "(2)", "t"},
      {Family::Monotone, 0, "(3)", "t^2+t"},
      {Family::Monotone, 1, "(3)", "5t^2+5t"},
      {Family::Monotone, 0, "(4)", "t^3+3t^2+t"},
      {Family::Monotone, 1, "(4)", "15t^3+40t^2+15t"},
      {Family::Monotone, 0, "(5)", "t^4+6t^3+6t^2+t"},
      {Family::Monotone, 1, "(5)", "35t^4+175t^3+175t^2+35t"},
      {Family::Monotone, 0, "(6)", "t^5+10t^4+20t^3+10t^2+t"},
      {Family::Monotone, 1, "(6)", "70t^5+560t^4+1050t^3+560t^2+70t"},
      {Family::Monotone, 0, "(1,1)", "t"},
      {Family::Monotone, 1, "(1,1)", "t"},
      {Family::Monotone, 0, "(2,1)", "2t^2+2t"},
      {Family::Monotone, 1, "(2,1)", "10t^2+10t"},
      {Family::Monotone, 0, "(3,1)", "3t^3+9t^2+3t"},
      {Family::Monotone, 1, "(3,1)", "45t^3+120t^2+45t"},
      {Family::Monotone, 0, "(2,2)", "4t^3+10t^2+4t"},
      {Family::Monotone, 1, "(2,2)", "50t^3+128t^2+50t"},
      {Family::Monotone, 0, "(4,1)", "4t^4+24t^3+24t^2+4t"},
      {Family::Monotone, 1, "(4,1)", "140t^4+700t^3+700t^2+140t"},
      {Family::Monotone, 0, "(3,2)", "6t^4+30t^3+30t^2+6t"},
      {Family::Monotone, 1, "(3,2)", "168t^4+792t^3+792t^2+168t"},
      {Family::Monotone, 0, "(5,1)", "5t^5+50t^4+100t^3+50t^2+5t"},
      {Family::Monotone, 1, "(5,1)", "350t^5+2800t^4+5250t^3+2800t^2+350t"},
      {Family::Monotone, 0, "(4,2)", "8t^5+68t^4+128t^3+68t^2+8t"},
      {Family::Monotone, 1, "(4,2)", "448t^5+3348t^4+6128t^3+3348t^2+448t"},
      {Family::Monotone, 0, "(3,3)", "9t^5+72t^4+138t^3+72t^2+9t"},
      {Family::Monotone, 1, "(3,3)", "462t^5+3432t^4+6312t^3+3432t^2+462t"},
      {Family::Monotone, 0, "(1,1,1)", "4t^2+4t"},
      {Family::Monotone, 1, "(1,1,1)", "20t^2+20t"},
      {Family::Monotone, 0, "(2,1,1)", "10t^3+28t^2+10t"},
      {Family::Monotone, 1, "(2,1,1)", "140t^3+368t^2+140t"},
      {Family::Monotone, 0, "(3,1,1)", "18t^4+102t^3+102t^2+18t"},
      {Family::Monotone, 1, "(3,1,1)", "588t^4+2892t^3+2892t^2+588t"},
      {Family::Monotone, 0, "(2,2,1)", "24t^4+120t^3+120t^2+24t"},
      {Family::Monotone, 1, "(2,2,1)", "672t^4+3168t^3+3168t^2+672t"},
      {Family::Monotone, 0, "(4,1,1)", "28t^5+268t^4+528t^3+268t^2+28t"},
      {Family::Monotone, 1, "(4,1,1)", "1848t^5+14548t^4+27128t^3+14548t^2+1848t"},
      {Family::Monotone, 0, "(3,2,1)", "42t^5+348t^4+660t^3+348t^2+42t"},
      {Family::Monotone, 1, "(3,2,1)", "2268t^5+16908t^4+31008t^3+16908t^2+2268t"},
      {Family::Monotone, 0, "(2,2,2)", "56t^5+424t^4+768t^3+424t^2+56t"},
      {Family::Monotone, 1, "(2,2,2)", "2688t^5+19128t^4+34416t^3+19128t^2+2688t"},
      {Family::Monotone, 2, "(1)", "0"},
      {Family::Monotone, 3, "(1)", "0"},
      {Family::Monotone, 2, "(2)", "t"},
      {Family::Monotone, 3, "(2)", "t"},
      {Family::Monotone, 2, "(3)", "21t^2+21t"},
      {Family::Monotone, 3, "(3)", "85t^2+85t"},
      {Family::Monotone, 2, "(4)", "161t^3+413t^2+161t"},
      {Family::Monotone, 3, "(4)", "1555t^3+3930t^2+1555t"},
      {Family::Monotone, 2, "(5)", "777t^4+3612t^3+3612t^2+777t"},
      {Family::Monotone, 3, "(5)", "14575t^4+65505t^3+65505t^2+14575t"},
      {Family::Monotone, 2, "(1,1)", "t"},
      {Family::Monotone, 3, "(1,1)", "t"},
      {Family::Monotone, 2, "(2,1)", "42t^2+42t"},
      {Family::Monotone, 3, "(2,1)", "170t^2+170t"},
      {Family::Monotone, 2, "(3,1)", "483t^3+1239t^2+483t"},
      {Family::Monotone, 3, "(3,1)", "4665t^3+11790t^2+4665t"},
      {Family::Monotone, 2, "(2,2)", "504t^3+1278t^2+504t"},
      {Family::Monotone, 3, "(2,2)", "4750t^3+11956t^2+4750t"},
      {Family::Monotone, 2, "(4,1)", "3108t^4+14448t^3+14448t^2+3108t"},
      {Family::Monotone, 3, "(4,1)", "58300t^4+262020t^3+262020t^2+58300t"},
      {Family::Monotone, 2, "(3,2)", "3402t^4+15450t^3+15450t^2+3402t"},
      {Family::Monotone, 3, "(3,2)", "61116t^4+271764t^3+271764t^2+61116t"},
      {Family::Monotone, 2, "(1,1,1)", "84t^2+84t"},
      {Family::Monotone, 3, "(1,1,1)", "340t^2+340t"},
      {Family::Monotone, 2, "(2,1,1)", "1470t^3+3756t^2+1470t"},
      {Family::Monotone, 3, "(2,1,1)", "14080t^3+35536t^2+14080t"},
      {Family::Monotone, 2, "(3,1,1)", "12726t^4+58794t^3+58794t^2+12726t"},
      {Family::Monotone, 3, "(3,1,1)", "236016t^4+1057824t^3+1057824t^2+236016t"},
      {Family::Monotone, 2, "(2,2,1)", "13608t^4+61800t^3+61800t^2+13608t"},
      {Family::Monotone, 3, "(2,2,1)", "244464t^4+1087056t^3+1087056t^2+244464t"},
      {Family::Dessin, 0, "(2)", "t^2+t"},
      {Family::Dessin, 1, "(2)", "0"},
      {Family::Dessin, 0, "(3)", "t^3+3t^2+t"},
      {Family::Dessin, 1, "(3)", "t"},
      {Family::Dessin, 0, "(4)", "t^4+6t^3+6t^2+t"},
      {Family::Dessin, 1, "(4)", "5t^2+5t"},
      {Family::Dessin, 0, "(5)", "t^5+10t^4+20t^3+10t^2+t"},
      {Family::Dessin, 1, "(5)", "15t^3+40t^2+15t"},
      {Family::Dessin, 0, "(6)", "t^6+15t^5+50t^4+50t^3+15t^2+t"},
      {Family::Dessin, 1, "(6)", "35t^4+175t^3+175t^2+35t"},
      {Family::Dessin, 0, "(1,1)", "t"},
      {Family::Dessin, 1, "(1,1)", "0"},
      {Family::Dessin, 0, "(2,1)", "2t^2+2t"},
      {Family::Dessin, 1, "(2,1)", "0"},
      {Family::Dessin, 0, "(3,1)", "3t^3+9t^2+3t"},
      {Family::Dessin, 1, "(3,1)", "3t"},
      {Family::Dessin, 0, "(2,2)", "4t^3+10t^2+4t"},
      {Family::Dessin, 1, "(2,2)", "2t"},
      {Family::Dessin, 0, "(4,1)", "4t^4+24t^3+24t^2+4t"},
      {Family::Dessin, 1, "(4,1)", "20t^2+20t"},
      {Family::Dessin, 0, "(3,2)", "6t^4+30t^3+30t^2+6t"},
      {Family::Dessin, 1, "(3,2)", "18t^2+18t"},
      {Family::Dessin, 0, "(5,1)", "5t^5+50t^4+100t^3+50t^2+5t"},
      {Family::Dessin, 1, "(5,1)", "75t^3+200t^2+75t"},
      {Family::Dessin, 0, "(4,2)", "8t^5+68t^4+128t^3+68t^2+8t"},
      {Family::Dessin, 1, "(4,2)", "80t^3+200t^2+80t"},
      {Family::Dessin, 0, "(3,3)", "9t^5+72t^4+138t^3+72t^2+9t"},
      {Family::Dessin, 1, "(3,3)", "75t^3+198t^2+75t"},
      {Family::Dessin, 0, "(1,1,1)", "2t"},
      {Family::Dessin, 1, "(1,1,1)", "0"},
      {Family::Dessin, 0, "(2,1,1)", "6t^2+6t"},
      {Family::Dessin, 1, "(2,1,1)", "0"},
      {Family::Dessin, 0, "(3,1,1)", "12t^3+36t^2+12t"},
      {Family::Dessin, 1, "(3,1,1)", "12t"},
      {Family::Dessin, 0, "(2,2,1)", "16t^3+40t^2+16t"},
      {Family::Dessin, 1, "(2,2,1)", "8t"},
      {Family::Dessin, 0, "(4,1,1)", "20t^4+120t^3+120t^2+20t"},
      {Family::Dessin, 1, "(4,1,1)", "100t^2+100t"},
      {Family::Dessin, 0, "(3,2,1)", "30t^4+150t^3+150t^2+30t"},
      {Family::Dessin, 1, "(3,2,1)", "90t^2+90t"},
      {Family::Dessin, 0, "(2,2,2)", "40t^4+176t^3+176t^2+40t"},
      {Family::Dessin, 1, "(2,2,2)", "80t^2+80t"},
  };
  return cells;
}

const std::vector<ReferenceWeingarten>& reference_weingarten() {
  static const std::vector<ReferenceWeingarten> rows{
      {"", 0, "1", "1"},
      {"(1)", 1, "1/N", "M/N"},
      {"(1)(2)", 2, "1/(N^2-1)", "M(MN-1)/(N(N^2-1))"},
      {"(12)", 2, "-1/(N(N^2-1))", "-M(M-N)/(N(N^2-1))"},
      {"(1)(2)(3)", 3, "(N^2-2)/(N(N^2-1)(N^2-4))", "M(M^2N^2-2M^2-3MN+4)/(N(N^2-1)(N^2-4))"},
      {"(12)(3)", 3, "-1/((N^2-1)(N^2-4))", "-M(M-N)(MN-2)/(N(N^2-1)(N^2-4))"},
      {"(123)", 3, "2/(N(N^2-1)(N^2-4))", "M(M-N)(2M-N)/(N(N^2-1)(N^2-4))"},
      {"(1)(2)(3)(4)", 4, "(N^4-8N^2+6)/(N^2(N^2-1)(N^2-4)(N^2-9))",
       "M(M^3N^4-8M^3N^2+6M^3-6M^2N^3+24M^2N+19MN^2-6M-30N)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
      {"(12)(3)(4)", 4, "-1/(N(N^2-1)(N^2-9))", "-M(M-N)(M^2N^2-4M^2-5MN+10)/(N(N^2-1)(N^2-4)(N^2-9))"},
      {"(12)(34)", 4, "(N^2+6)/(N^2(N^2-1)(N^2-4)(N^2-9))",
       "M(M-N)(M^2N^2+6M^2-MN^3-6MN+4N^2-6)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
      {"(123)(4)", 4, "(2N^2-3)/(N^2(N^2-1)(N^2-4)(N^2-9))",
       "M(M-N)(2M^2N^2-3M^2-MN^3-6MN+3N^2+3)/(N^2(N^2-1)(N^2-4)(N^2-9))"},
      {"(1234)", 4, "-5/(N(N^2-1)(N^2-4)(N^2-9))", "-M(M-N)(5M^2-5MN+N^2+1)/(N(N^2-1)(N^2-4)(N^2-9))"},
  };
  return rows;
}

const std::vector<ReferenceRootRow>& reference_root_rows_421() {
  // Roots of H_g(4,2,1) for g = 10..20, 12 decimals.
  static const std::vector<ReferenceRootRow> rows{
      {10, "(4,2,1)", {"-5.041604716958", "-2.010612015758", "-1", "-0.4973609986225", "-0.1983495446670", "0"}},
      {11, "(4,2,1)", {"-5.028663679645", "-2.007345500817", "-1", "-0.4981703446630", "-0.1988599882007", "0"}},
      {12, "(4,2,1)", {"-5.019792253540", "-2.005088769701", "-1", "-0.4987310363066", "-0.1992114313684", "0"}},
      {13, "(4,2,1)", {"-5.013688662391", "-2.003527619463", "-1", "-0.4991196479078", "-0.1994539484474", "0"}},
      {14, "(4,2,1)", {"-5.009478345470", "-2.002446572250", "-1", "-0.4993891042376", "-0.1996215835335", "0"}},
      {15, "(4,2,1)", {"-5.006568518035", "-2.001697414872", "-1", "-0.4995760061286", "-0.1997376039891", "0"}},
      {16, "(4,2,1)", {"-5.004554730409", "-2.001177961094", "-1", "-0.4997056830732", "-0.1998179765971", "0"}},
      {17, "(4,2,1)", {"-5.003159687696", "-2.000817629297", "-1", "-0.4997956762061", "-0.1998736923107", "0"}},
      {18, "(4,2,1)", {"-5.002192595245", "-2.000567599393", "-1", "-0.4998581404112", "-0.19991233463311", "0"}},
      {19, "(4,2,1)", {"-5.001521834116", "-2.000394067634", "-1", "-0.4999015024988", "-0.1999391451575", "0"}},
      {20, "(4,2,1)", {"-5.001056436287", "-2.000273609283", "-1", "-0.4999316070356", "-0.1999577514750", "0"}},
  };
  return rows;
}

const std::vector<ReferenceRootRow>& reference_root_rows_weight7() {
  // Roots of H_20(mu) for |mu| = 7, 10 decimals.
  static const std::vector<ReferenceRootRow> rows{
      {20, "(7)", {"-5.0012679418", "-2.0003283655", "-1", "-0.49991792208", "-0.19994929518", "0"}},
      {20, "(6,1)", {"-5.0012679418", "-2.0003283655", "-1", "-0.49991792208", "-0.19994929518", "0"}},
      {20, "(5,2)", {"-5.0010564352", "-2.0002736067", "-1", "-0.49993160767", "-0.19995775151", "0"}},
      {20, "(5,1,1)", {"-5.0012326847", "-2.0003192382", "-1", "-0.49992020316", "-0.19995070476", "0"}},
      {20, "(4,3)", {"-5.0010564383", "-2.0002736143", "-1", "-0.49993160576", "-0.19995775139", "0"}},
      {20, "(4,2,1)", {"-5.0010564362", "-2.0002736092", "-1", "-0.49993160703", "-0.19995775147", "0"}},
      {20, "(4,1,1,1)", {"-5.0011739286", "-2.0003040277", "-1", "-0.49992400462", "-0.19995305387", "0"}},
      {20, "(3,3,1)", {"-5.0010564383", "-2.0002736143", "-1", "-0.49993160576", "-0.19995775139", "0"}},
      {20, "(3,2,2)", {"-5.0008802353", "-2.0002279852", "-1", "-0.49994301017", "-0.19996479678", "0"}},
      {20, "(3,2,1,1)", {"-5.0010270659", "-2.0002660064", "-1", "-0.49993350723", "-0.19995892579", "0"}},
      {20, "(3,1,1,1,1)", {"-5.0011004921", "-2.0002850163", "-1", "-0.49992875605", "-0.19995599000", "0"}},
      {20, "(2,2,2,1)", {"-5.0008802353", "-2.0002279852", "-1", "-0.49994301017", "-0.19996479678", "0"}},
      {20, "(2,2,1,1,1)", {"-5.0009781178", "-2.0002533320", "-1", "-0.49993667500", "-0.19996088293", "0"}},
      {20, "(2,1,1,1,1,1)", {"-5.0010189060", "-2.0002638930", "-1", "-0.49993403543", "-0.19995925206", "0"}},
      {20, "(1,1,1,1,1,1,1)", {"-5.0010189060", "-2.000263893081", "-1", "-0.49993403543", "-0.19995925206", "0"}},
  };
  return rows;
}

}  // namespace dmh
