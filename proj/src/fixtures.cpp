#include "qmi/fixtures.hpp"

#include <charconv>

#include "qmi/error.hpp"

namespace qmi {

namespace {

const QuatAlgebra& split_algebra() {
  static const QuatAlgebra alg(1, 1);
  return alg;
}

const QuatAlgebra& hamilton_algebra() {
  static const QuatAlgebra alg(-1, -1);
  return alg;
}

// Matrix units of M_2(Z) under i -> diag(1,-1), j -> [[0,1],[1,0]]:
// E11 = (1+i)/2, E12 = (j+k)/2, E21 = (j-k)/2.
const Rational kHalf(1, 2);

}  // namespace

Order split_eichler_order(long level) {
  if (level < 1) throw Error("UnknownFixture", "split-eichler level must be positive");
  std::vector<QuatElement> basis = {
      QuatElement(1, 0, 0, 0),
      QuatElement(kHalf, kHalf, 0, 0),
      QuatElement(0, 0, kHalf, kHalf),
      QuatElement(0, 0, Rational(level, 2), Rational(-level, 2)),
  };
  for (auto& e : basis)
    for (auto& c : e.c) c.canonicalize();
  return Order(split_algebra(), basis);
}

Order fixture_order(const std::string& name) {
  if (name == "split-maximal") return split_eichler_order(1);
  if (name == "lipschitz") {
    std::vector<QuatElement> basis = {QuatElement(1, 0, 0, 0), QuatElement(0, 1, 0, 0), QuatElement(0, 0, 1, 0),
                                      QuatElement(0, 0, 0, 1)};
    return Order(hamilton_algebra(), basis);
  }
  if (name == "hurwitz") {
    std::vector<QuatElement> basis = {QuatElement(1, 0, 0, 0), QuatElement(0, 1, 0, 0), QuatElement(0, 0, 1, 0),
                                      QuatElement(kHalf, kHalf, kHalf, kHalf)};
    return Order(hamilton_algebra(), basis);
  }
  const std::string prefix = "split-eichler-";
  if (name.starts_with(prefix)) {
    long level = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, level);
    if (ec == std::errc() && ptr == last && level >= 1) return split_eichler_order(level);
  }
  throw Error("UnknownFixture", "no fixture named '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"split-maximal", "split-eichler-N", "lipschitz", "hurwitz"};
}

}  // namespace qmi
