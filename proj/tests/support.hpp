#pragma once

#include "ternmin/code.hpp"

#include <optional>
#include <random>

namespace ternmin::testing {

inline TernaryFunction random_function(int m, std::mt19937_64& rng, bool zero_at_origin = true) {
    std::uniform_int_distribution<int> trit(0, 2);
    std::vector<std::uint8_t> t(pow3(m));
    for (auto& v : t) v = static_cast<std::uint8_t>(trit(rng));
    if (zero_at_origin) t[0] = 0;
    return TernaryFunction(m, std::move(t));
}

// Draws (f, g) until validation succeeds; nullopt after `attempts` failures.
inline std::optional<CodeSpec> random_spec(int m, std::mt19937_64& rng, int attempts = 1000) {
    for (int i = 0; i < attempts; ++i) {
        try {
            return CodeSpec::validate(random_function(m, rng), random_function(m, rng));
        } catch (const ValidationError&) {
        }
    }
    return std::nullopt;
}

inline CodewordParams random_params(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> trit(0, 2);
    std::uniform_int_distribution<std::uint32_t> vec(0, static_cast<std::uint32_t>(pow3(m) - 1));
    return {Trit(trit(rng)), Trit(trit(rng)), vec(rng)};
}

inline std::int64_t hamming(const std::vector<std::uint8_t>& w) {
    std::int64_t n = 0;
    for (auto c : w) n += c != 0;
    return n;
}

} // namespace ternmin::testing
