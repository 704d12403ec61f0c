#pragma once

// Counter-based Gaussian displacement sampling.
//
// The generator is Philox4x32-10 (Salmon et al., SC 2011).  Each 128-bit
// counter block yields two doubles with 53 random bits each, which Box-Muller
// turns into one pair of normals.  Because every normal is addressed purely
// by (seed, stream, index), batches of a Monte Carlo run can be generated in
// any order, on any number of threads, with bit-identical results.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gkpsim {

struct PhiloxBlock {
  uint32_t x[4];
};

namespace detail {

inline void mulhilo32(uint32_t a, uint32_t b, uint32_t* hi, uint32_t* lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  *hi = static_cast<uint32_t>(p >> 32);
  *lo = static_cast<uint32_t>(p);
}

inline uint64_t splitmix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Philox4x32-10 keyed permutation of a 128-bit counter.
inline PhiloxBlock philox4x32(uint32_t c0, uint32_t c1, uint32_t c2, uint32_t c3,
                              uint32_t k0, uint32_t k1) {
  constexpr uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      k0 += kW0;
      k1 += kW1;
    }
    uint32_t hi0, lo0, hi1, lo1;
    detail::mulhilo32(kM0, c0, &hi0, &lo0);
    detail::mulhilo32(kM1, c2, &hi1, &lo1);
    uint32_t n0 = hi1 ^ c1 ^ k0;
    uint32_t n1 = lo1;
    uint32_t n2 = hi0 ^ c3 ^ k1;
    uint32_t n3 = lo0;
    c0 = n0;
    c1 = n1;
    c2 = n2;
    c3 = n3;
  }
  return PhiloxBlock{{c0, c1, c2, c3}};
}

// A stateless position in a keyed random stream.  `stream` selects a
// substream (the upper 64 counter bits), `pos` counts normals drawn so far.
class RngStream {
 public:
  explicit RngStream(uint64_t seed, uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  /// Disjoint child stream, derived deterministically from (stream, index).
  RngStream substream(uint64_t index) const {
    return RngStream(seed_, detail::splitmix64(stream_ ^ detail::splitmix64(index)));
  }

  /// The idx-th standard normal of this stream, independent of call order.
  double normal_at(uint64_t idx) const {
    uint64_t block = idx >> 1;
    PhiloxBlock b = philox4x32(static_cast<uint32_t>(block),
                               static_cast<uint32_t>(block >> 32),
                               static_cast<uint32_t>(stream_),
                               static_cast<uint32_t>(stream_ >> 32),
                               static_cast<uint32_t>(seed_),
                               static_cast<uint32_t>(seed_ >> 32));
    uint64_t u0 = (static_cast<uint64_t>(b.x[0]) << 32) | b.x[1];
    uint64_t u1 = (static_cast<uint64_t>(b.x[2]) << 32) | b.x[3];
    // (0,1] uniforms with 53 significant bits
    double v0 = (static_cast<double>(u0 >> 11) + 1.0) * 0x1.0p-53;
    double v1 = (static_cast<double>(u1 >> 11) + 1.0) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(v0));
    double th = 2.0 * M_PI * v1;
    return (idx & 1) ? r * std::sin(th) : r * std::cos(th);
  }

  /// Sequential draw.
  double normal() { return normal_at(pos_++); }

  uint64_t position() const { return pos_; }
  void seek(uint64_t pos) { pos_ = pos; }
  uint64_t seed() const { return seed_; }
  uint64_t stream_id() const { return stream_; }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t pos_ = 0;
};

/// I.i.d. Gaussian displacement channel acting on all 2n quadratures.
struct NoiseModel {
  double sigma = 0.1;
  int n = 1;

  NoiseModel(double sigma_, int n_) : sigma(sigma_), n(n_) {
    if (!(sigma > 0.0)) throw std::invalid_argument("NoiseModel: sigma must be > 0");
    if (n < 1) throw std::invalid_argument("NoiseModel: n must be >= 1");
  }
};

/// One noise vector (xi_{1,q},...,xi_{n,q}, xi_{1,p},...,xi_{n,p}).
inline Eigen::VectorXd sample(const NoiseModel& model, RngStream& stream) {
  Eigen::VectorXd xi(2 * model.n);
  for (int i = 0; i < 2 * model.n; ++i) xi[i] = model.sigma * stream.normal();
  return xi;
}

}  // namespace gkpsim
