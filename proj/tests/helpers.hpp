#ifndef GIS_TESTS_HELPERS_HPP_
#define GIS_TESTS_HELPERS_HPP_

#include <string>

#include "gis/semigroup.hpp"

namespace testutil {

inline std::string fixture(const std::string& name) {
  return std::string(GIS_FIXTURE_DIR) + "/" + name;
}

inline gis::FiniteSemigroup make(std::vector<std::vector<int>> rows) {
  return gis::validate(rows);
}

// frequently used small semigroups
inline gis::FiniteSemigroup rz2() { return make({{0, 1}, {0, 1}}); }
inline gis::FiniteSemigroup lz2() { return make({{0, 0}, {1, 1}}); }
inline gis::FiniteSemigroup sl2() { return make({{0, 0}, {0, 1}}); }
inline gis::FiniteSemigroup z2() { return make({{0, 1}, {1, 0}}); }
inline gis::FiniteSemigroup trivial() { return make({{0}}); }
inline gis::FiniteSemigroup y3() {
  return make({{0, 1, 0}, {0, 1, 0}, {0, 1, 2}});
}
inline gis::FiniteSemigroup i2() {
  return gis::load_semigroup_file(fixture("i2.sgp"));
}

}  // namespace testutil

#endif  // GIS_TESTS_HELPERS_HPP_
