#pragma once

#include <string>

#include "thetamirror/json_io.hpp"

namespace testing_support {

inline std::string fixture(const std::string& name) {
  return std::string(THETAMIRROR_FIXTURE_DIR) + "/" + name;
}

inline thetamirror::PairDescriptor load_pair(const std::string& name) {
  return thetamirror::io::pair_from_json(thetamirror::io::read_json(fixture(name)));
}

inline thetamirror::InvariantTable load_table(const std::string& name,
                                              const thetamirror::PairDescriptor& pair) {
  return thetamirror::io::table_from_json(thetamirror::io::read_json(fixture(name)), pair);
}

inline thetamirror::WallStructure load_walls(const std::string& name,
                                             const thetamirror::PairDescriptor* pair = nullptr) {
  return thetamirror::io::walls_from_json(thetamirror::io::read_json(fixture(name)), pair);
}

inline thetamirror::LatticeVector e(std::size_t m, std::size_t i) {
  return thetamirror::LatticeVector::unit(m, i);
}

}  // namespace testing_support
