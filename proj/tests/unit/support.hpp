#pragma once

#include <string_view>

#include "cardrep/partitions.hpp"
#include "cardrep/permutation.hpp"
#include "cardrep/rational.hpp"

namespace testing_support {

inline cardrep::Partition P(std::string_view s) { return cardrep::Partition::parse(s); }
inline cardrep::Composition C(std::string_view s) { return cardrep::Composition::parse(s); }
inline cardrep::Permutation G(std::string_view s) { return cardrep::Permutation::parse(s); }
inline cardrep::Rational Q(long p, long q = 1) { return cardrep::ratio(cardrep::Integer(p), cardrep::Integer(q)); }

}  // namespace testing_support
