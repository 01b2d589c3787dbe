#pragma once

#include <cstdint>
#include <random>

#include "cagames/takeaway.hpp"
#include "oracles.hpp"

namespace testing_support {

inline cagames::GameSpec rule60() {
  return {{0, 0}, cagames::BackgroundSpec::from_strings("0", "", "1")};
}

inline cagames::GameSpec rule110_game() {
  return {{1, 0}, cagames::BackgroundSpec::from_strings("0", "11010011101100", "0")};
}

inline cagames::GameSpec constant(std::int64_t gamma, std::int64_t Gamma, const char* bit) {
  return {{gamma, Gamma}, cagames::BackgroundSpec::from_strings(bit, "", bit)};
}

inline cagames::Bits random_word(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1);
  cagames::Bits w(len(rng));
  for (auto& b : w) b = static_cast<cagames::Bit>(bit(rng));
  return w;
}

// gamma, Gamma <= max_reach; |L|, |C|, |R| <= 4; xi in [-3, 3].
inline cagames::GameSpec random_spec(std::mt19937_64& rng, std::int64_t max_reach = 3) {
  std::uniform_int_distribution<std::int64_t> reach(0, max_reach);
  std::uniform_int_distribution<std::int64_t> shift(-3, 3);
  cagames::CAParams params{reach(rng), reach(rng)};
  auto left = random_word(rng, 1, 4);
  auto centre = random_word(rng, 0, 4);
  auto right = random_word(rng, 1, 4);
  return {params, cagames::BackgroundSpec(std::move(left), std::move(centre), std::move(right), shift(rng))};
}

inline oracle::Background as_function(const cagames::BackgroundSpec& bg) {
  return [bg](std::int64_t x) { return static_cast<int>(bg.value(x)); };
}

}  // namespace testing_support
