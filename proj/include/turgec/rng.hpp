#pragma once

// Deterministic random streams. One master seed spawns an independent
// stream per (purpose, index), so sentences can be processed in any order
// or on any number of workers and still reproduce byte-identical output.

#include <cstdint>
#include <vector>

namespace turgec {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
  public:
    RngStream() = default;
    explicit RngStream(uint64_t seed) : state_(seed) {
        // decorrelate trivially related seeds
        next();
        next();
    }

    static RngStream derive(uint64_t master, uint64_t purpose, uint64_t index) {
        uint64_t s = master;
        s ^= 0x632BE59BD9B4E019ULL * (purpose + 1);
        (void)splitmix64(s);
        s ^= 0x9E3779B97F4A7C15ULL * (index + 1);
        (void)splitmix64(s);
        return RngStream(s);
    }

    uint64_t next() { return splitmix64(state_); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        return static_cast<uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    uint64_t state_ = 0;
};

}  // namespace turgec
