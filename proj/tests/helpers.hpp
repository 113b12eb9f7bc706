#pragma once

#include <string>

#include "vc/groups.hpp"
#include "vc/nf2.hpp"
#include "vc/words.hpp"

namespace testing {

inline vc::Element element(const vc::GroupTable& g, const std::string& label) {
  for (vc::Element x = 0; x < g.order(); ++x)
    if (g.label(x) == label) return x;
  throw std::runtime_error("no element labelled " + label);
}

inline vc::NormalForm2 nf(const std::string& text, int nvars) { return vc::collect(vc::parse_word(text, nvars)); }

inline vc::NormalForm2 nf_mod(const std::string& text, int nvars, std::int64_t m) {
  return vc::reduce_exponents_mod(nf(text, nvars), m);
}

}  // namespace testing
