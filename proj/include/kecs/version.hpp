#pragma once

namespace kecs {

inline constexpr const char* kToolName = "kecs";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kCertificateSchema = 1;

}  // namespace kecs
