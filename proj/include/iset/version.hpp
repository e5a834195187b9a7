#ifndef ISET_VERSION_HPP
#define ISET_VERSION_HPP

namespace iset {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace iset

#endif  // ISET_VERSION_HPP
