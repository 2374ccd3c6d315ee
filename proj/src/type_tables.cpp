#include "type_tables.hpp"

namespace sextic::detail {

// Row-major 6x6 entries; the Gram tables are stated without the overall factor 6.
const TypeTable kTypeTables[20] = {
    {1, 1,
     {"(th^3)/(C3)",
      "(th^4)/(C4)",
      "(th^5)/(C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "0", "0",
      "0", "0", "1", "0", "0", "0",
      "0", "0", "0", "1", "0", "0",
      "0", "0", "0", "0", "1", "0",
      "0", "0", "0", "0", "0", "1",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2/C1^2", "0", "0", "0", "0",
      "0", "0", "th^4/C2^2", "0", "0", "0",
      "0", "0", "0", "m/C3^2", "0", "0",
      "0", "0", "0", "0", "m*th^2/C4^2", "0",
      "0", "0", "0", "0", "0", "m*th^4/C5^2",
     },
    },
    {1, 2,
     {"(th^3)/(C3)",
      "(th^4+m*C4^2*th^2+C4^2)/(3*C4)",
      "(th^5+m*C5^2*th^3+C5^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "(C4)/(3)", "0",
      "0", "1", "0", "0", "0", "(C5)/(3)",
      "0", "0", "1", "0", "(C2*C4*m)/(3)", "0",
      "0", "0", "0", "1", "0", "(C3*C5*m)/(3)",
      "0", "0", "0", "0", "(1)/(3)", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "(C4)/(3)", "0",
      "0", "th^2", "0", "0", "0", "(C5*th^2)/(3)",
      "0", "0", "(th^4)/(C2^2)", "0", "(C4*th^4*m)/(3*C2)", "0",
      "0", "0", "0", "(m)/(C3^2)", "0", "(C5*m^2)/(3*C3)",
      "(C4)/(3)", "0", "(C4*th^4*m)/(3*C2)", "0", "(C4^4*th^4*m^2+C4^4+th^2*m)/(9*C4^2)", "0",
      "0", "(C5*th^2)/(3)", "0", "(C5*m^2)/(3*C3)", "0", "((C5^2*m^3)/(9))+((th^4*m)/(9*C5^2))+((C5^2*th^2)/(9))",
     },
    },
    {1, 3,
     {"(th^3+6*m3*C33^2*th)/(3*C3)",
      "(th^4+3*m3*C43^2*th^2+9*C43^2)/(3*C4)",
      "(th^5+3*m3*C53^2*th^3+9*C53^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "(3*C43^2)/(C4)", "0",
      "0", "1", "0", "(2*m3)/(C3)", "0", "(3*C53^2)/(C5)",
      "0", "0", "1", "0", "(C2*C43^2*m3)/(C4)", "0",
      "0", "0", "0", "(1)/(3)", "0", "(C53^2*m3)/(C5)",
      "0", "0", "0", "0", "(1)/(3)", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "(3*C43^2)/(C4)", "0",
      "0", "th^2", "0", "(2*th^2*m3)/(C3)", "0", "(3*C53^2*th^2)/(C5)",
      "0", "0", "(th^4)/(C2^2)", "0", "(C43^2*th^4*m3)/(C2*C4)", "0",
      "0", "(2*th^2*m3)/(C3)", "0", "(m+36*th^2*m3^2)/(9*C3^2)", "0", "(C53^2*m3*(m+18*C3*th^2))/(3*C3^2*C5)",
      "(3*C43^2)/(C4)", "0", "(C43^2*th^4*m3)/(C2*C4)", "0", "(9*C43^4*th^4*m3^2+81*C43^4+m*th^2)/(9*C4^2)", "0",
      "0", "(3*C53^2*th^2)/(C5)", "0", "(C53^2*m3*(m+18*C3*th^2))/(3*C3^2*C5)", "0", "(m*C3^2*th^4+9*m*C53^4*m3^2+81*C3^2*C53^4*th^2)/(9*C3^2*C5^2)",
     },
    },
    {1, 4,
     {"(th^3)/(C3)",
      "(th^4)/(C4)",
      "(th^5+3*m3*C53^2*th^3+9*C53^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "0", "(3*C53^2)/(C5)",
      "0", "0", "1", "0", "0", "0",
      "0", "0", "0", "1", "0", "(C3*C53^2*m3)/(C5)",
      "0", "0", "0", "0", "1", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2", "0", "0", "0", "(3*C53^2*th^2)/(C5)",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "0",
      "0", "0", "0", "(m)/(C3^2)", "0", "(C53^2*m*m3)/(C3*C5)",
      "0", "0", "0", "0", "(th^2*m)/(C4^2)", "0",
      "0", "(3*C53^2*th^2)/(C5)", "0", "(C53^2*m*m3)/(C3*C5)", "0", "(9*m*C53^4*m3^2+m*th^4+81*C53^4*th^2)/(9*C5^2)",
     },
    },
    {2, 1,
     {"(th^3+C3)/(2*C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5+C5*th^2)/(2*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "0",
      "0", "0", "1", "0", "0", "(C2)/(2)",
      "0", "0", "0", "(1)/(2)", "0", "0",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "(1)/(2)",
     },
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "0",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(th^4)/(2*C2)",
      "(1)/(2)", "0", "0", "(m+C3^2)/(4*C3^2)", "0", "0",
      "0", "(th^2)/(2)", "0", "0", "(th^2*(C4^2+m))/(4)", "0",
      "0", "0", "(th^4)/(2*C2)", "0", "0", "(th^4*(C5^2+m))/(4*C5^2)",
     },
    },
    {2, 2,
     {"(th^3+C3)/(2*C3)",
      "(th^4-2*m*C4^2*th^2+3*C4*th-2*C4^2)/(6*C4)",
      "(th^5-2*m*C5^2*th^3+3*C5*th^2-2*C5^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "-((C4)/(3))", "0",
      "0", "1", "0", "0", "(1)/(2)", "-((C5)/(3))",
      "0", "0", "1", "0", "-((C2*C4*m)/(3))", "(C2)/(2)",
      "0", "0", "0", "(1)/(2)", "0", "-((C3*C5*m)/(3))",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "-((C4)/(3))", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "-((C5*th^2)/(3))",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C4*th^4*m)/(3*C2))", "(th^4)/(2*C2)",
      "(1)/(2)", "0", "0", "(m+C3^2)/(4*C3^2)", "-((C4)/(6))", "-((C5*m^2)/(6*C3))",
      "-((C4)/(3))", "(th^2)/(2)", "-((C4*th^4*m)/(3*C2))", "-((C4)/(6))", "((C4^2*th^4*m^2)/(9))+((C4^2)/(9))+((th^2*m)/(36*C4^2))+((th^2)/(4))", "-((C4*th^4*m)/(6))-((C5*th^2)/(6))",
      "0", "-((C5*th^2)/(3))", "(th^4)/(2*C2)", "-((C5*m^2)/(6*C3))", "-((C4*th^4*m)/(6))-((C5*th^2)/(6))", "((C5^2*m^3)/(9))+((th^4)/(4))+((th^4*m)/(36*C5^2))+((C5^2*th^2)/(9))",
     },
    },
    {2, 3,
     {"(th^3-12*m3*C33^2*th+3*C3)/(6*C3)",
      "(th^4-6*m3*C43^2*th^2+3*C4*th-18*C43^2)/(6*C4)",
      "(th^5-6*m3*C53^2*th^3+3*C5*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "-((3*C43^2)/(C4))", "0",
      "0", "1", "0", "-((2*C33^2*m3)/(C3))", "(1)/(2)", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "-((C2*C43^2*m3)/(C4))", "(C2)/(2)",
      "0", "0", "0", "(1)/(6)", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "-((3*C43^2)/(C4))", "0",
      "0", "th^2", "0", "-((2*C33^2*th^2*m3)/(C3))", "(th^2)/(2)", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C43^2*th^4*m3)/(C2*C4))", "(th^4)/(2*C2)",
      "(1)/(2)", "-((2*C33^2*th^2*m3)/(C3))", "0", "((m)/(36*C3^2))+((4*C33^4*th^2*m3^2)/(C3^2))+((1)/(4))", "-((3*C43^2)/(2*C4))-((C33^2*th^2*m3)/(C3))", "-((C53^2*m3*(m-36*C33^2*th^2))/(6*C3*C5))",
      "-((3*C43^2)/(C4))", "(th^2)/(2)", "-((C43^2*th^4*m3)/(C2*C4))", "-((3*C43^2)/(2*C4))-((C33^2*th^2*m3)/(C3))", "(36*C43^4*th^4*m3^2+324*C43^4+m*th^2+9*C4^2*th^2)/(36*C4^2)", "-((C43^2*th^4*m3)/(2*C4))-((3*C53^2*th^2)/(2*C5))",
      "0", "-((3*C53^2*th^2)/(C5))", "(th^4)/(2*C2)", "-((C53^2*m3*(m-36*C33^2*th^2))/(6*C3*C5))", "-((C43^2*th^4*m3)/(2*C4))-((3*C53^2*th^2)/(2*C5))", "(9*C5^2*th^4+36*m*C53^4*m3^2+m*th^4+324*C53^4*th^2)/(36*C5^2)",
     },
    },
    {2, 4,
     {"(th^3+C3)/(2*C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5-6*m3*C53^2*th^3+3*C5*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "0", "(C2)/(2)",
      "0", "0", "0", "(1)/(2)", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(th^4)/(2*C2)",
      "(1)/(2)", "0", "0", "(m+C3^3)/(4*C3^2)", "0", "-((C53^2*m*m3)/(2*C3*C5))",
      "0", "(th^2)/(2)", "0", "0", "((th^2)/(4))+((th^2*m)/(4*C4^2))", "-((3*C53^2*th^2)/(2*C5))",
      "0", "-((3*C53^2*th^2)/(C5))", "(th^4)/(2*C2)", "-((C53^2*m*m3)/(2*C3*C5))", "-((3*C53^2*th^2)/(2*C5))", "(9*C5^2*th^4+36*m*C53^4*m3^2+m*th^4+324*C53^4*th^2)/(36*C5^2)",
     },
    },
    {3, 1,
     {"(th^3)/(C3)",
      "(th^4)/(C4)",
      "(th^5+C5*th^2)/(2*C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "0", "0",
      "0", "0", "1", "0", "0", "(C2)/(2)",
      "0", "0", "0", "1", "0", "0",
      "0", "0", "0", "0", "1", "0",
      "0", "0", "0", "0", "0", "(1)/(2)",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2", "0", "0", "0", "0",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(th^4)/(2*C2)",
      "0", "0", "0", "(m)/(C3^2)", "0", "0",
      "0", "0", "0", "0", "(th^2*m)/(C4^2)", "0",
      "0", "0", "(th^4)/(2*C2)", "0", "0", "(th^4*(C5^2+m))/(4*C5^2)",
     },
    },
    {3, 2,
     {"(th^3)/(C3)",
      "(th^4+m*C4^2*th^2+C4^2)/(3*C4)",
      "(th^5-2*m*C5^2*th^3+3*C5*th^2-2*C5^2*th)/(6*C5)"},
     {
      "1", "0", "0", "0", "(C4)/(3)", "0",
      "0", "1", "0", "0", "0", "-((C5)/(3))",
      "0", "0", "1", "0", "(C2*C4*m)/(3)", "(C2)/(2)",
      "0", "0", "0", "1", "0", "-((C3*C5*m)/(3))",
      "0", "0", "0", "0", "(1)/(3)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "0", "(C4)/(3)", "0",
      "0", "th^2", "0", "0", "0", "-((C5*th^2)/(3))",
      "0", "0", "(th^4)/(C2^2)", "0", "(C4*th^4*m)/(3*C2)", "(th^4)/(2*C2)",
      "0", "0", "0", "(m)/(C3^2)", "0", "-((C5*m^2)/(3*C3))",
      "(C4)/(3)", "0", "(C4*th^4*m)/(3*C2)", "0", "((C4^2*th^4*m^2)/(9))+((C4^2)/(9))+((th^2*m)/(9*C4^2))", "(C4*th^4*m)/(6)",
      "0", "-((C5*th^2)/(3))", "(th^4)/(2*C2)", "-((C5*m^2)/(3*C3))", "(C4*th^4*m)/(6)", "((C5^2*m^3)/(9))+((th^4)/(4))+((th^4*m)/(36*C5^2))+((C5^2*th^2)/(9))",
     },
    },
    {3, 3,
     {"(th^3+6*m3*C33^2*th)/(3*C3)",
      "(th^4+3*m3*C43^2*th^2+9*C43^2)/(3*C4)",
      "(th^5-6*m3*C53^2*th^3+3*C5*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "0", "(3*C43^2)/(C4)", "0",
      "0", "1", "0", "(2*C33^2*m3)/(C3)", "0", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "(C2*C43^2*m3)/(C4)", "(C2)/(2)",
      "0", "0", "0", "(1)/(3)", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "(1)/(3)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "0", "(3*C43^2)/(C4)", "0",
      "0", "th^2", "0", "(2*C33^2*th^2*m3)/(C3)", "0", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "(C43^2*th^4*m3)/(C2*C4)", "(th^4)/(2*C2)",
      "0", "(2*C33^2*th^2*m3)/(C3)", "0", "(m+36*C33^4*th^2*m3^2)/(9*C3^2)", "0", "-((C53^2*m3*(m+18*C33^2*th^2))/(3*C3*C5))",
      "(3*C43^2)/(C4)", "0", "(C43^2*th^4*m3)/(C2*C4)", "0", "(9*C43^4*th^4*m3^2+81*C43^4+m*th^2)/(9*C4^2)", "(C43^2*th^4*m3)/(2*C4)",
      "0", "-((3*C53^2*th^2)/(C5))", "(th^4)/(2*C2)", "-((C53^2*m3*(m+18*C33^2*th^2))/(3*C3*C5))", "(C43^2*th^4*m3)/(2*C4)", "((C53^4*m*m3^2)/(C5^2))+((9*C53^4*th^2)/(C5^2))+((th^4*(9*C5^2+m))/(36*C5^2))",
     },
    },
    {3, 4,
     {"(th^3)/(C3)",
      "(th^4)/(C4)",
      "(th^5-6*m3*C53^2*th^3+3*C5*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "0", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "0", "(C2)/(2)",
      "0", "0", "0", "1", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "1", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2", "0", "0", "0", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(th^4)/(2*C2)",
      "0", "0", "0", "(m)/(C3^2)", "0", "-((C53^2*m*m3)/(C3*C5))",
      "0", "0", "0", "0", "(th^2*m)/(C4^2)", "0",
      "0", "-((3*C53^2*th^2)/(C5))", "(th^4)/(2*C2)", "-((C53^2*m*m3)/(C3*C5))", "0", "((C53^4*m*m3^2)/(C5^2))+((th^4)/(4))+((th^4*m)/(36*C5^2))+((9*C53^4*th^2)/(C5^2))",
     },
    },
    {4, 1,
     {"(th^3+C3)/(2*C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5+4*C52*th^2)/(2*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "0",
      "0", "0", "1", "0", "0", "(2*C2*C52)/(C5)",
      "0", "0", "0", "(1)/(2)", "0", "0",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "(1)/(2)",
     },
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "0",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(2*C52*th^4)/(C2*C5)",
      "(1)/(2)", "0", "0", "(m+C3^2)/(4*C3^2)", "0", "0",
      "0", "(th^2)/(2)", "0", "0", "(th^2*m+th^2*C4^2)/(4*C2^2*C4^2)", "0",
      "0", "0", "(2*C52*th^4)/(C2*C5)", "0", "0", "((16*C52^2+m)*th^4)/(4*C5^2)",
     },
    },
    {4, 2,
     {"(th^3+C3)/(2*C3)",
      "(th^4-2*m*C4^2*th^2+3*C4*th-2*C4^2)/(6*C4)",
      "(th^5-2*m*C5^2*th^3+12*C52*th^2-2*C5^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "-((C4)/(3))", "0",
      "0", "1", "0", "0", "(1)/(2)", "-((C5)/(3))",
      "0", "0", "1", "0", "-((C2*C4*m)/(3))", "(2*C2*C52)/(C5)",
      "0", "0", "0", "(1)/(2)", "0", "-((C3*C5*m)/(3))",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "-((C4)/(3))", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "-((C5*th^2)/(3))",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C4*th^4*m)/(3*C2))", "(2*C52*th^4)/(C2*C5)",
      "(1)/(2)", "0", "0", "(m+C3^2)/(4*C3^2)", "-((C4)/(6))", "-((C5*m^2)/(6*C3))",
      "-((C4)/(3))", "(th^2)/(2)", "-((C4*th^4*m)/(3*C2))", "-((C4)/(6))", "((C4^2*(1+th^4*m^2))/(9))+((th^2)/(4))+((th^2*m)/(36*C4^2))", "-((2*C4*C52*th^4*m)/(3*C5))-((C5*th^2)/(6))",
      "0", "-((C5*th^2)/(3))", "(2*C52*th^4)/(C2*C5)", "-((C5*m^2)/(6*C3))", "-((2*C4*C52*th^4*m)/(3*C5))-((C5*th^2)/(6))", "((C5^2)/(9))*(m^3+th^2)+((4*C52^2*th^4)/(C5^2))+((th^4*m)/(36*C5^2))",
     },
    },
    {4, 3,
     {"(th^3-12*m3*C33^2*th+3*C3)/(6*C3)",
      "(th^4-6*m3*C43^2*th^2+3*C4*th-18*C43^2)/(6*C4)",
      "(th^5-6*m3*C53^2*th^3+12*C52*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "-((3*C43^2)/(C4))", "0",
      "0", "1", "0", "-((2*C33^2*m3)/(C3))", "(1)/(2)", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "-((C2*C43^2*m3)/(C4))", "(2*C2*C52)/(C5)",
      "0", "0", "0", "(1)/(6)", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "-((3*C43^2)/(C4))", "0",
      "0", "th^2", "0", "-((2*C33^2*th^2*m3)/(C3))", "(th^2)/(2)", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C43^2*th^4*m3)/(C2*C4))", "(2*C52*th^4)/(C2*C5)",
      "(1)/(2)", "-((2*C33^2*th^2*m3)/(C3))", "0", "((m)/(36*C3^2))+((4*C33^4*th^2*m3^2)/(C3^2))+((1)/(4))", "-((3*C43^2)/(2*C4))-((C33^2*th^2*m3)/(C3))", "-((C53^2*m3*(m-36*C33^2*th^2))/(6*C3*C5))",
      "-((3*C43^2)/(C4))", "(th^2)/(2)", "-((C43^2*th^4*m3)/(C2*C4))", "-((3*C43^2)/(2*C4))-((C33^2*th^2*m3)/(C3))", "(36*C43^4*th^4*m3^2+324*C43^4+m*th^2+9*C4^2*th^2)/(36*C4^2)", "-((th^2*(4*C52*m3*C43^2*th^2+3*C4*C53^2))/(2*C4*C5))",
      "0", "-((3*C53^2*th^2)/(C5))", "(2*C52*th^4)/(C2*C5)", "-((C53^2*m3*(m-36*C33^2*th^2))/(6*C3*C5))", "-((th^2*(4*C52*m3*C43^2*th^2+3*C4*C53^2))/(2*C4*C5))", "(144*C52^2*th^4+36*m*C53^4*m3^2+m*th^4+324*C53^4*th^2)/(36*C5^2)",
     },
    },
    {4, 4,
     {"(th^3+C3)/(2*C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5-6*m3*C53^2*th^3+12*C52*th^2-18*C53^2*th)/(6*C5)"},
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "-((3*C53^2)/(C5))",
      "0", "0", "1", "0", "0", "(2*C2*C52)/(C5)",
      "0", "0", "0", "(1)/(2)", "0", "-((C3*C53^2*m3)/(C5))",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "(1)/(6)",
     },
     {
      "1", "0", "0", "(1)/(2)", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "-((3*C53^2*th^2)/(C5))",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "(2*C52*th^4)/(C2*C5)",
      "(1)/(2)", "0", "0", "((m)/(4*C3^2))+((1)/(4))", "0", "-((C53^2*m*m3)/(2*C3*C5))",
      "0", "(th^2)/(2)", "0", "0", "((th^2)/(4))+((th^2*m)/(4*C4^2))", "-((3*C53^2*th^2)/(2*C5))",
      "0", "-((3*C53^2*th^2)/(C5))", "(2*C52*th^4)/(C2*C5)", "-((C53^2*m*m3)/(2*C3*C5))", "-((3*C53^2*th^2)/(2*C5))", "(144*C52^2*th^4+36*m*C53^4*m3^2+m*th^4+324*C53^4*th^2)/(36*C5^2)",
     },
    },
    {5, 1,
     {"(th^3)/(C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5)/(C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "0",
      "0", "0", "1", "0", "0", "0",
      "0", "0", "0", "1", "0", "0",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "1",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "0",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "0",
      "0", "0", "0", "(m)/(C3^2)", "0", "0",
      "0", "(th^2)/(2)", "0", "0", "((th^2)/(4))+((th^2*m)/(4*C4^2))", "0",
      "0", "0", "0", "0", "0", "(th^4*m)/(C5^2)",
     },
    },
    {5, 2,
     {"(th^3)/(C3)",
      "(th^4-2*m*C4^2*th^2+3*C4*th-2*C4^2)/(6*C4)",
      "(th^5+m*C5^2*th^3+C5^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "-((C4)/(3))", "0",
      "0", "1", "0", "0", "(1)/(2)", "(C5)/(3)",
      "0", "0", "1", "0", "-((C2*C4*m)/(3))", "0",
      "0", "0", "0", "1", "0", "(C3*C5*m)/(3)",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "-((C4)/(3))", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "(C5*th^2)/(3)",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C4*th^4*m)/(3*C2))", "0",
      "0", "0", "0", "(m)/(C3^2)", "0", "(C5*m^2)/(3*C3)",
      "-((C4)/(3))", "(th^2)/(2)", "-((C4*th^4*m)/(3*C2))", "0", "((C4^2*th^4*m^2)/(9))+((C4^2)/(9))+((th^2*m)/(36*C4^2))+((th^2)/(4))", "(C5*th^2)/(6)",
      "0", "(C5*th^2)/(3)", "0", "(C5*m^2)/(3*C3)", "(C5*th^2)/(6)", "((C5^2*m^3)/(9))+((th^4*m)/(9*C5^2))+((C5^2*th^2)/(9))",
     },
    },
    {5, 3,
     {"(th^3+6*m3*C33^2*th)/(3*C3)",
      "(th^4-6*m3*C43^2*th^2+3*C4*th-18*C43^2)/(6*C4)",
      "(th^5+3*m3*C53^2*th^3+9*C53^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "-((3*C43^2)/(C4))", "0",
      "0", "1", "0", "(2*C33^2*m3)/(C3)", "(1)/(2)", "(3*C53^2)/(C5)",
      "0", "0", "1", "0", "-((C2*C43^2*m3)/(C4))", "0",
      "0", "0", "0", "(1)/(3)", "0", "(C3*C53^2*m3)/(C5)",
      "0", "0", "0", "0", "(1)/(6)", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "-((3*C43^2)/(C4))", "0",
      "0", "th^2", "0", "(2*C33^2*th^2*m3)/(C3)", "(th^2)/(2)", "(3*C53^2*th^2)/(C5)",
      "0", "0", "(th^4)/(C2^2)", "0", "-((C43^2*th^4*m3)/(C2*C4))", "0",
      "0", "(2*C33^2*th^2*m3)/(C3)", "0", "(m+36*C33^4*th^2*m3^2)/(9*C3^2)", "(C33^2*th^2*m3)/(C3)", "(C53^2*m3*(m+18*C33^2*th^2))/(3*C3*C5)",
      "-((3*C43^2)/(C4))", "(th^2)/(2)", "-((C43^2*th^4*m3)/(C2*C4))", "(C33^2*th^2*m3)/(C3)", "(36*C43^4*th^4*m3^2+324*C43^4+m*th^2+9*C4^2*th^2)/(36*C4^2)", "(3*C53^2*th^2)/(2*C5)",
      "0", "(3*C53^2*th^2)/(C5)", "0", "(C53^2*m3*(m+18*C33^2*th^2))/(3*C3*C5)", "(3*C53^2*th^2)/(2*C5)", "(9*m*C53^4*m3^2+m*th^4+81*C53^4*th^2)/(9*C5^2)",
     },
    },
    {5, 4,
     {"(th^3)/(C3)",
      "(th^4+C4*th)/(2*C4)",
      "(th^5+3*m3*C53^2*th^3+9*C53^2*th)/(3*C5)"},
     {
      "1", "0", "0", "0", "0", "0",
      "0", "1", "0", "0", "(1)/(2)", "(3*C53^2)/(C5)",
      "0", "0", "1", "0", "0", "0",
      "0", "0", "0", "1", "0", "(C3*C53^2*m3)/(C5)",
      "0", "0", "0", "0", "(1)/(2)", "0",
      "0", "0", "0", "0", "0", "(1)/(3)",
     },
     {
      "1", "0", "0", "0", "0", "0",
      "0", "th^2", "0", "0", "(th^2)/(2)", "(3*C53^2*th^2)/(C5)",
      "0", "0", "(th^4)/(C2^2)", "0", "0", "0",
      "0", "0", "0", "(m)/(C3^2)", "0", "(C53^2*m*m3)/(C3*C5)",
      "0", "(th^2)/(2)", "0", "0", "(th^2*(C4^2+m))/(4*C4^2)", "(3*C53^2*th^2)/(2*C5)",
      "0", "(3*C53^2*th^2)/(C5)", "0", "(C53^2*m*m3)/(C3*C5)", "(3*C53^2*th^2)/(2*C5)", "(9*m*C53^4*m3^2+m*th^4+81*C53^4*th^2)/(9*C5^2)",
     },
    },
};

}  // namespace sextic::detail
