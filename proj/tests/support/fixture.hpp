#pragma once

#include <string>

#include "ontomap/syntax.hpp"

namespace testing_support {

inline std::string source_path(const std::string& relative) {
  return std::string(ONTOMAP_SOURCE_DIR) + "/" + relative;
}

inline ontomap::Ontology load_fixture(const std::string& relative = "data/robot_at_home.ofn") {
  return ontomap::parse_document(ontomap::read_file(source_path(relative))).ontology;
}

}  // namespace testing_support
