#ifndef BIBENCH_RNG_HPP_
#define BIBENCH_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bibench {

// Deterministic random source for the generators. Distributions are derived
// here by hand rather than through std::*_distribution, whose sequences are
// implementation-defined; byte-identical output for a fixed seed is part of
// the generator contract.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi) {
    if (hi <= lo) return lo;
    auto span = static_cast<unsigned long>(hi - lo) + 1;
    return lo + static_cast<long>(uniform() * double(span));
  }

  bool bernoulli(double p) { return uniform() < p; }

  double normal(double mean, double sd) {
    // Box-Muller; the spare value is discarded to keep the stream simple.
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double z = std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * 3.14159265358979323846 * u2);
    return mean + sd * z;
  }

  // Knuth's product method; fine for the small means used here.
  long poisson(double mean) {
    if (mean <= 0.0) return 0;
    double limit = std::exp(-mean);
    long k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  std::size_t weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    double target = uniform() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      acc += weights[i];
      if (target < acc) return i;
    }
    return weights.empty() ? 0 : weights.size() - 1;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      auto j = static_cast<std::size_t>(uniform_int(0, long(i) - 1));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bibench

#endif  // BIBENCH_RNG_HPP_
