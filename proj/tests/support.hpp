#pragma once

#include <string>
#include <vector>

#include "fsig/groebner.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/ring.hpp"

namespace testing_support {

inline fsig::Polynomial P(const fsig::RingPtr& r, const std::string& text) { return fsig::parse_polynomial(text, r); }

inline fsig::Ideal I(const fsig::RingPtr& r, const std::vector<std::string>& gens) {
  std::vector<fsig::Polynomial> ps;
  for (const auto& g : gens) ps.push_back(P(r, g));
  return fsig::Ideal(r, ps);
}

}  // namespace testing_support
