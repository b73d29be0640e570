#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cdm {

/// Deterministic splitmix64 generator. All randomized code in the toolkit
/// draws from this so that a given seed produces identical results across
/// platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return unit() < p; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct integers sampled uniformly from [0, n), returned sorted.
    std::vector<std::int64_t> sample_distinct(std::int64_t n, std::int64_t k);

    /// Mixes a base seed with a stream index into an independent seed.
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
        Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
        return r.next();
    }

private:
    std::uint64_t state_;
};

inline std::vector<std::int64_t> Rng::sample_distinct(std::int64_t n, std::int64_t k) {
    // Floyd's algorithm; deterministic given the generator state.
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(k));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::int64_t j = n - k; j < n; ++j) {
        std::int64_t t = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(j + 1)));
        if (seen[static_cast<std::size_t>(t)]) t = j;
        seen[static_cast<std::size_t>(t)] = true;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cdm
