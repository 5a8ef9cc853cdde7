#pragma once

namespace nfl {

// Tool version, echoed into artifact headers.
inline constexpr const char* kToolVersion = "1.0.0";

// Version of the text/CSV artifact header layout.
inline constexpr int kArtifactFormatVersion = 1;

// Version byte of the NFLF binary table format.
inline constexpr unsigned char kTableFormatVersion = 0x01;

}  // namespace nfl
