#ifndef FDEPTH_RNG_HPP
#define FDEPTH_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace fdepth::rng {

// SplitMix64 step (Steele/Lea/Flood); used only to derive stream keys.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Key of the substream reached from `seed` by following `path`. Substreams
// are stable under changes elsewhere in the key tree: (seed, {model, rep})
// never moves when other models or replications are added.
std::uint64_t derive_stream(std::uint64_t seed,
                            std::initializer_list<std::uint64_t> path);

// One reproducible random stream. The engine is std::mt19937_64, whose
// output sequence is fixed by the standard; the distribution transforms
// below are hand-rolled (constant draw count, no rejection) so that a given
// (seed, path) replays the same values on any standard library.
class Stream {
 public:
  explicit Stream(std::uint64_t key) : engine_(key) {}

  // Uniform on the open interval (0,1), 53-bit resolution.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the Box-Muller transform; consumes two uniforms.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Sum of df squared standard normals.
  double chi_squared(int df) {
    double sum = 0.0;
    for (int i = 0; i < df; ++i) {
      const double z = normal();
      sum += z * z;
    }
    return sum;
  }

  // normal / sqrt(chi_squared(df) / df).
  double student_t(int df) {
    const double z = normal();
    const double v = chi_squared(df);
    return z / std::sqrt(v / df);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;
  std::mt19937_64 engine_;
};

}  // namespace fdepth::rng

#endif  // FDEPTH_RNG_HPP
