#pragma once

namespace df {

inline constexpr const char* kToolVersion = "0.1.0";

// Paper-derived defaults, printed by `depthforge --show-defaults`.
inline constexpr double kDefaultEpsilon = 0.03;        // DepthMix slack
inline constexpr double kDefaultEmaAlpha = 0.99;       // mean-teacher decay
inline constexpr double kDefaultLambdaE = 1000.0;      // uncertainty weight
inline constexpr double kDefaultLambdaF = 1e-2;        // feature-distance weight
inline constexpr double kDefaultTau = 0.968;           // confidence threshold
inline constexpr unsigned kDefaultTopMargin = 80;      // geometry crop, 512-tall
inline constexpr unsigned kDefaultBottomMargin = 100;
inline constexpr unsigned kDefaultNumCandidates = 5;   // geometry matching pool
inline constexpr const char* kDefaultSchedule = "25,50,100,200,372,744";

}  // namespace df
