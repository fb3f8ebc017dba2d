#include "severi/gold.hpp"

#include <ostream>

namespace severi {

namespace {

constexpr DegreeKind kTot = DegreeKind::Total;
constexpr DegreeKind kIrr = DegreeKind::Irreducible;

// clang-format off
const GoldCase kCases[] = {
    // cubics with tangency conditions
    {kTot, {3, 0, {}, {3}}, "1"},
    {kTot, {3, 1, {}, {3}}, "12"},
    {kTot, {3, 2, {}, {3}}, "21"},
    {kTot, {3, 3, {}, {3}}, "15"},
    {kTot, {3, 0, {1}, {2}}, "1"},
    {kTot, {3, 1, {1}, {2}}, "12"},
    {kTot, {3, 2, {1}, {2}}, "21"},
    {kTot, {3, 0, {2}, {1}}, "1"},
    {kTot, {3, 1, {2}, {1}}, "12"},
    {kTot, {3, 0, {3}, {}}, "1"},
    {kTot, {3, 1, {}, {1, 1}}, "36"},
    {kTot, {3, 2, {}, {1, 1}}, "30"},
    {kTot, {3, 1, {1}, {0, 1}}, "16"},
    {kTot, {3, 1, {}, {0, 0, 1}}, "21"},
    // three-nodal quartics, one hyperplane section at a time
    {kTot, {4, 3, {4}, {}}, "426"},
    {kTot, {4, 3, {3}, {1}}, "636"},
    {kTot, {4, 3, {2}, {2}}, "674"},
    {kTot, {4, 3, {1}, {3}}, "675"},
    {kTot, {4, 3, {}, {4}}, "675"},
    // full quintic table
    {kTot, {5, 0, {}, {5}}, "1"},
    {kTot, {5, 1, {}, {5}}, "48"},
    {kTot, {5, 2, {}, {5}}, "882"},
    {kTot, {5, 3, {}, {5}}, "7915"},
    {kTot, {5, 4, {}, {5}}, "36975"},
    {kTot, {5, 5, {}, {5}}, "90027"},
    {kTot, {5, 6, {}, {5}}, "109781"},
    {kTot, {5, 7, {}, {5}}, "65949"},
    {kTot, {5, 8, {}, {5}}, "26136"},
    {kTot, {5, 9, {}, {5}}, "6930"},
    {kTot, {5, 10, {}, {5}}, "945"},
    // full sextic table
    {kTot, {6, 0, {}, {6}}, "1"},
    {kTot, {6, 1, {}, {6}}, "75"},
    {kTot, {6, 2, {}, {6}}, "2370"},
    {kTot, {6, 3, {}, {6}}, "41310"},
    {kTot, {6, 4, {}, {6}}, "437517"},
    {kTot, {6, 5, {}, {6}}, "2931831"},
    {kTot, {6, 6, {}, {6}}, "12597900"},
    {kTot, {6, 7, {}, {6}}, "34602705"},
    {kTot, {6, 8, {}, {6}}, "59809860"},
    {kTot, {6, 9, {}, {6}}, "63338881"},
    {kTot, {6, 10, {}, {6}}, "40047888"},
    {kTot, {6, 11, {}, {6}}, "15580020"},
    {kTot, {6, 12, {}, {6}}, "4361721"},
    {kTot, {6, 13, {}, {6}}, "918918"},
    {kTot, {6, 14, {}, {6}}, "135135"},
    {kTot, {6, 15, {}, {6}}, "10395"},
    // irreducible three-nodal quartics
    {kIrr, {4, 3, {}, {4}}, "620"},
};
// clang-format on

std::string label(const GoldCase& gc) {
  return std::string(gc.kind == kIrr ? "N_irr" : "N") + render_compact(gc.key);
}

}  // namespace

std::span<const GoldCase> gold_cases() { return kCases; }

bool run_verify(MemoStore& memo, std::ostream& out, const EngineOptions& opt) {
  bool all_ok = true;
  for (const GoldCase& gc : gold_cases()) {
    Degree want(gc.value);
    Degree got = gc.kind == kIrr ? irr_degree(gc.key, memo, opt)
                                 : degree(gc.key, memo, opt);
    if (got == want) {
      out << "ok " << label(gc) << " = " << gc.value << "\n";
    } else {
      out << "FAIL " << label(gc) << ": got " << to_decimal(got) << ", want "
          << gc.value << "\n";
      all_ok = false;
    }
  }

  // The three-nodal quartics split into the irreducible ones and the
  // line-plus-cubic family of degree C(11,2) = 55.
  SeveriKey quartics{4, 3, {}, {4}};
  Degree remainder = degree(quartics, memo, opt) - irr_degree(quartics, memo, opt);
  if (remainder == 55) {
    out << "ok N(4,3,0,4) - N_irr(4,3,0,4) = 55\n";
  } else {
    out << "FAIL N(4,3,0,4) - N_irr(4,3,0,4): got " << to_decimal(remainder)
        << ", want 55\n";
    all_ok = false;
  }
  return all_ok;
}

}  // namespace severi
