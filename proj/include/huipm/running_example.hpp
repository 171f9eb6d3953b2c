#pragma once

// The four-sequence interval dataset used throughout the documentation and
// tests, with its external utility table.

#include <sstream>
#include <string_view>

#include "huipm/io.hpp"
#include "huipm/model.hpp"

namespace huipm::running_example {

inline constexpr std::string_view kDataset =
    "# id\tlabel\tbegin\tfinish\n"
    "1\tA\t6\t12\n"
    "1\tB\t10\t17\n"
    "1\tC\t19\t25\n"
    "1\tE\t21\t23\n"
    "2\tA\t2\t7\n"
    "2\tB\t5\t10\n"
    "2\tD\t5\t12\n"
    "2\tC\t16\t22\n"
    "2\tE\t18\t20\n"
    "3\tB\t6\t12\n"
    "3\tA\t8\t14\n"
    "3\tC\t14\t20\n"
    "3\tE\t16\t18\n"
    "4\tB\t1\t5\n"
    "4\tC\t8\t14\n"
    "4\tE\t9\t12\n"
    "4\tF\t9\t12\n";

inline constexpr std::string_view kUtilities =
    "A\t2\n"
    "B\t1\n"
    "C\t1\n"
    "D\t3\n"
    "E\t2\n"
    "F\t5\n";

inline ESequenceDataset dataset() {
  std::istringstream in{std::string(kDataset)};
  return io::parse_dataset(in);
}

inline UtilityTable utilities() {
  std::istringstream in{std::string(kUtilities)};
  return io::parse_utilities(in);
}

}  // namespace huipm::running_example
