#pragma once

#include <string>
#include <vector>

// Concrete fixture names, with the parametrised Eichler family instantiated.
inline std::vector<std::string> test_fixtures() {
  return {"split-maximal", "split-eichler-2", "split-eichler-3", "split-eichler-6", "lipschitz", "hurwitz"};
}
