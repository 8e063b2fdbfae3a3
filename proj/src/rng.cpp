#include "disclose/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace disclose::rng {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27; z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// 128-layer ziggurat tables for the standard normal (Marsaglia & Tsang).
// Built once at startup; kn/wn are scaled for the signed-32-bit fast path.
struct ZigguratTables {
    std::uint32_t kn[128];
    double wn[128];
    double fn[128];
    ZigguratTables() {
        const double m1 = 2147483648.0;
        double dn = 3.442619855899;
        const double vn = 9.91256303526217e-3;
        double tn = dn;
        const double q = vn / std::exp(-0.5 * dn * dn);
        kn[0] = static_cast<std::uint32_t>((dn / q) * m1);
        kn[1] = 0;
        wn[0] = q / m1;
        wn[127] = dn / m1;
        fn[0] = 1.0;
        fn[127] = std::exp(-0.5 * dn * dn);
        for (int i = 126; i >= 1; --i) {
            dn = std::sqrt(-2.0 * std::log(vn / dn + std::exp(-0.5 * dn * dn)));
            kn[i + 1] = static_cast<std::uint32_t>((dn / tn) * m1);
            tn = dn;
            fn[i] = std::exp(-0.5 * dn * dn);
            wn[i] = dn / m1;
        }
    }
};

const ZigguratTables& zig() {
    static const ZigguratTables tables;
    return tables;
}

}  // namespace

Stream::Stream(std::uint64_t seed, std::uint64_t stream_index)
    : state_(mix64(seed + kGolden) ^ mix64(stream_index + 2 * kGolden)) {}

std::uint64_t Stream::next_u64() {
    state_ += kGolden;
    return mix64(state_);
}

double Stream::next_uniform() {
    // mid-point quantization keeps the value strictly inside (0,1)
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Stream::next_normal() {
    const ZigguratTables& t = zig();
    const double r = 3.442619855899;
    for (;;) {
        const std::int32_t hz =
            static_cast<std::int32_t>(static_cast<std::uint32_t>(next_u64()));
        const std::uint32_t iz = static_cast<std::uint32_t>(hz) & 127u;
        if (static_cast<std::uint32_t>(hz < 0 ? -hz : hz) < t.kn[iz])
            return hz * t.wn[iz];
        if (iz == 0) {
            // tail beyond r, by exponential majorization
            double x, y;
            do {
                x = -std::log(next_uniform()) / r;
                y = -std::log(next_uniform());
            } while (y + y < x * x);
            return hz > 0 ? r + x : -(r + x);
        }
        const double x = hz * t.wn[iz];
        if (t.fn[iz] + next_uniform() * (t.fn[iz - 1] - t.fn[iz]) <
            std::exp(-0.5 * x * x))
            return x;
    }
}

std::uint64_t Stream::next_poisson(double mean) {
    if (!(mean >= 0.0))
        throw std::domain_error("next_poisson: mean must be nonnegative");
    if (mean == 0.0) return 0;
    // product-of-uniforms count; fine for the event intensities used here
    const double limit = std::exp(-mean);
    std::uint64_t n = 0;
    double prod = next_uniform();
    while (prod > limit) {
        ++n;
        prod *= next_uniform();
    }
    return n;
}

}  // namespace disclose::rng
