/**
 * @file version.hpp
 * @brief Library and report-schema version strings.
 */
#pragma once

namespace hilbgw {

inline constexpr const char* kLibraryVersion = "1.0.0";
/** @brief Version of the JSON layout of CLI reports and cache files. */
inline constexpr int kSchemaVersion = 1;

}  // namespace hilbgw
