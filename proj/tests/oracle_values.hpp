#pragma once

// Frozen output of tools/oracles.py (mpmath, 30 digits)
namespace oracle {
inline constexpr double kIbarLd1 = 1.5847194720487131e-14;
inline constexpr double kIbarLd01 = 1.5847194720487131e-15;
inline constexpr double kSatN500Ld1 = 0.054926877236728806;
inline constexpr double kSatN200Ld01 = 0.2194118060309388;
inline constexpr double kSatN1000Ld01 = 0.42874960918708128;
inline constexpr double kTerrLb001Ld1 = 0.1044556952046798;
inline constexpr double kTerrLb1Ld10 = 0.98325366571746048;
inline constexpr double kTerrClosedLd100Lb = 0.98858445159975033;
inline constexpr double kTerrNoNoiseLb01Ld10 = 0.98858445159975033;
inline constexpr double kHybridGapLb1em12 = 1.0612870230463793e-5;
inline constexpr double kHybridGapLb1em18 = 1.0612948772496737e-11;
inline constexpr double kSinc2OverA = 0.58023504053713799;
inline constexpr double kPathGainConst = 0.00014228584142858626;
}  // namespace oracle
