#pragma once

#include <string>
#include <vector>

#include "qmi/order.hpp"

namespace qmi {

// Named test orders:
//   split-maximal    pullback of M_2(Z) in (1,1) via i -> diag(1,-1), j -> [[0,1],[1,0]]
//   split-eichler-N  matrices in M_2(Z) with lower-left entry divisible by N
//   lipschitz        Z<1,i,j,k> in (-1,-1)
//   hurwitz          Z<1,i,j,(1+i+j+k)/2> in (-1,-1)
// Throws Error("UnknownFixture").
Order fixture_order(const std::string& name);
Order split_eichler_order(long level);
std::vector<std::string> fixture_names();

}  // namespace qmi
