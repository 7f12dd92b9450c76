#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dyntaylor {

// Pinned random source. The engine is std::mt19937_64, whose output sequence
// is fixed by the C++ standard; uniforms take the top 53 bits of each draw and
// Gaussians come from the Marsaglia polar method with a one-value cache.
// Replicate streams are derived as seed = base_seed + replicate_index.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Standard normal deviate.
  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dyntaylor
