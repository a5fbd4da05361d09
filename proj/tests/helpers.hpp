#pragma once

#include <string>

#include "maci/scenario.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(MACI_DATA_DIR) + "/" + rel;
}

inline maci::Schedule fixture(const std::string& name) {
  return maci::load_schedule_csv(data_path("fixtures/" + name + ".csv"));
}

}  // namespace testutil
