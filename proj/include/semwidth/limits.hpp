#pragma once

namespace semwidth {

// Vertex-count ceilings for the exact width searches. Overridable through the
// SEMWIDTH_LIMITS environment variable, e.g. "tw=16,ghw=10,fhw=10,hw=9".
struct SizeLimits {
  int tw = 16;
  int ghw = 10;
  int fhw = 10;
  int hw = 9;

  static SizeLimits from_env();
};

}  // namespace semwidth
