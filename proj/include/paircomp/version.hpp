#ifndef PAIRCOMP_VERSION_HPP
#define PAIRCOMP_VERSION_HPP

namespace paircomp {

inline constexpr const char* tool_name = "paircomp";
inline constexpr const char* tool_version = "0.1.0";

}  // namespace paircomp

#endif
