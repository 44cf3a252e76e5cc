#ifndef ZAKLAB_COMMON_HPP
#define ZAKLAB_COMMON_HPP

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zaklab {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class errc {
  invalid_argument,
  singular_matrix,
  dimension_mismatch,
  unsupported_dimension,
  degenerate_domain,
  zero_function,
  truncation_too_small,
  too_many_frequencies,
  ill_conditioned,
  support_not_covered,
  condition_e_gamma_lambda,
  incompatible_pair,
};

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

  // Numerical failures (exit 3) vs validation errors (exit 2).
  bool numerical() const {
    switch (code_) {
      case errc::ill_conditioned:
      case errc::truncation_too_small:
      case errc::zero_function:
      case errc::support_not_covered:
        return true;
      default:
        return false;
    }
  }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// splitmix64: portable deterministic generator, identical streams on every
// platform (std::uniform_real_distribution is implementation-defined).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [a, b)
  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

private:
  std::uint64_t state_;
};

inline double nearest_integer_distance(double x) {
  double r = x - static_cast<double>(static_cast<long long>(x >= 0 ? x + 0.5 : x - 0.5));
  return r < 0 ? -r : r;
}

}  // namespace zaklab

#endif
