#include "cagames/background.hpp"

#include <algorithm>

#include "cagames/errors.hpp"

namespace cagames {

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError("malformed-spec", "bit strings may only contain '0' and '1'",
                        std::string(text));
    }
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return bits;
}

std::string format_bits(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (Bit b : bits) out.push_back(b ? '1' : '0');
  return out;
}

BackgroundSpec::BackgroundSpec(Bits left, Bits center, Bits right, std::int64_t shift)
    : left_(std::move(left)), center_(std::move(center)), right_(std::move(right)), shift_(shift) {
  if (left_.empty() || right_.empty()) {
    throw DomainError("malformed-spec", "background words L and R must be non-empty");
  }
  auto binary = [](const Bits& w) {
    return std::all_of(w.begin(), w.end(), [](Bit b) { return b <= 1; });
  };
  if (!binary(left_) || !binary(center_) || !binary(right_)) {
    throw DomainError("malformed-spec", "background words must be binary");
  }
}

BackgroundSpec BackgroundSpec::from_strings(std::string_view left, std::string_view center,
                                            std::string_view right, std::int64_t shift) {
  return BackgroundSpec(parse_bits(left), parse_bits(center), parse_bits(right), shift);
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

Bit BackgroundSpec::value(std::int64_t x) const {
  const std::int64_t u = x + shift_;
  const auto c = static_cast<std::int64_t>(center_.size());
  if (u >= 1 && u <= c) return center_[static_cast<std::size_t>(u - 1)];
  if (u > c) {
    return right_[static_cast<std::size_t>(floor_mod(u - c - 1, static_cast<std::int64_t>(right_.size())))];
  }
  const auto l = static_cast<std::int64_t>(left_.size());
  return left_[static_cast<std::size_t>(l - 1 - floor_mod(-u, l))];
}

BackgroundSpec BackgroundSpec::widened(std::int64_t lo, std::int64_t hi) const {
  lo = std::min(lo, center_first());
  hi = std::max(hi, center_last());
  auto sample = [this](std::int64_t from, std::size_t count) {
    Bits out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = value(from + static_cast<std::int64_t>(i));
    return out;
  };
  Bits left = sample(lo - static_cast<std::int64_t>(left_.size()), left_.size());
  Bits center = sample(lo, static_cast<std::size_t>(hi - lo + 1));
  Bits right = sample(hi + 1, right_.size());
  return BackgroundSpec(std::move(left), std::move(center), std::move(right), 1 - lo);
}

BackgroundSpec BackgroundSpec::with_flipped(std::int64_t x) const {
  BackgroundSpec out = widened(x, x);
  out.center_[static_cast<std::size_t>(x - out.center_first())] ^= 1;
  return out;
}

bool BackgroundSpec::zero_at_non_positive() const {
  const std::int64_t from = std::min<std::int64_t>(0, -shift_) - static_cast<std::int64_t>(left_.size()) + 1;
  for (std::int64_t x = from; x <= 0; ++x) {
    if (value(x) != 0) return false;
  }
  return true;
}

}  // namespace cagames
