#ifndef WELLCOVER_VERSION_HPP
#define WELLCOVER_VERSION_HPP

#include <string_view>

namespace wellcover {

inline constexpr std::string_view kToolName = "wellcover";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace wellcover

#endif
