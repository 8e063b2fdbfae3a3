#pragma once

#include <cstdint>

namespace disclose::rng {

// Counter-based stream: output k of stream s is a pure function of
// (seed, s, k), so parallel batches land on identical draws no matter how
// work is scheduled. The generator is the splitmix64 sequence whose start
// state is a hash of (seed, stream_index).
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint64_t next_u64();
    double next_uniform();  // open interval (0,1)
    double next_normal();   // standard normal, ziggurat
    std::uint64_t next_poisson(double mean);  // product method, O(mean) draws

  private:
    std::uint64_t state_;
};

}  // namespace disclose::rng
