#ifndef WELLCOVER_ERRORS_HPP
#define WELLCOVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wellcover {

// Malformed input documents (edge lists, graph6, dimacs, report files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured resource bound was exceeded (brute-force gates, search budgets,
// exhaustive enumeration caps).
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wellcover

#endif
