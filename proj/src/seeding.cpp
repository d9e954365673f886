#include "holodet/seeding.hpp"

#include <set>

namespace holodet {

std::vector<Rational> seeded_mu_points(unsigned long seed, int count) {
    // Fixed-constant LCG so the sequence is identical on every platform.
    std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL;
    auto next = [&state] {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    };
    std::set<Rational> seen;
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        long num = static_cast<long>(next() % 400) + 1;
        long den = static_cast<long>(next() % 96) + 2;
        Rational q = rat(num, den);
        if (is_integer(q) || seen.count(q)) continue;
        seen.insert(q);
        out.push_back(q);
    }
    return out;
}

}  // namespace holodet
