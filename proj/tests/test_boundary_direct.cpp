#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "waring/boundary.hpp"
#include "waring/io.hpp"
#include "waring/ratfunc.hpp"

using namespace waring;

namespace {

MultiPoly<RatFuncP> read_poly(const std::string& name, const FunctionField<PrimeField>& k) {
  std::ifstream in(std::string(WARING_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_poly(ss.str(), k);
}

}  // namespace

// Runs the syzygy construction and the degree-5 elimination directly over
// GF(1009)(t) and compares with the interpolated quintics. Slow (minutes).
TEST(PsiDirect, FunctionFieldQuinticsMatchReconstruction) {
  const PrimeField gf(1009);
  const FunctionField<PrimeField> k{gf};
  const auto f = read_poly("pencil_f1.txt", k) + read_poly("pencil_f2.txt", k) * k.t();
  const auto direct = projection_quintics(f);

  std::ifstream a(std::string(WARING_DATA_DIR) + "/pencil_f1.txt"), b(std::string(WARING_DATA_DIR) + "/pencil_f2.txt");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  const auto rep = psi_pipeline({parse_poly(sa.str()), parse_poly(sb.str()), 1009, 0});
  for (std::size_t i = 0; i < 6; ++i) {
    const auto& c = rep.quintics[i].coeffs;
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_EQ(direct[i][j] / direct[i][5], RatFuncP(c[j], c[5])) << "projection " << i << " coefficient " << j;
      if (!direct[i][j].is_zero()) EXPECT_LE(std::max(direct[i][j].num().degree(), direct[i][j].den().degree()), 30);
    }
  }
}
