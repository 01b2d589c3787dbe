#include "cagames/render.hpp"

#include "cagames/errors.hpp"

namespace cagames {

std::string render(const SpacetimeWindow& window, RenderFormat format) {
  const char zero = format == RenderFormat::Text ? '.' : '0';
  const char one = format == RenderFormat::Text ? '#' : '1';
  std::string out;
  if (format == RenderFormat::Pbm) {
    out += "P1\n" + std::to_string(window.width()) + " " + std::to_string(window.height()) + "\n";
  }
  out.reserve(out.size() + static_cast<std::size_t>((window.width() + 1) * window.height()));
  for (std::int64_t y = window.rows; y >= 0; --y) {
    for (std::int64_t x = window.x0; x <= window.x1; ++x) out.push_back(window.at(x, y) ? one : zero);
    out.push_back('\n');
  }
  return out;
}

namespace {

class PbmScanner {
 public:
  explicit PbmScanner(std::string_view bytes) : bytes_(bytes) {}

  void skip_space() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::int64_t integer() {
    skip_space();
    std::int64_t value = 0;
    std::size_t start = pos_;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      value = value * 10 + (bytes_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected an integer");
    return value;
  }

  Bit bit() {
    skip_space();
    if (pos_ >= bytes_.size() || (bytes_[pos_] != '0' && bytes_[pos_] != '1')) fail("expected a pixel");
    return static_cast<Bit>(bytes_[pos_++] - '0');
  }

  std::string_view take(std::size_t n) {
    if (pos_ + n > bytes_.size()) fail("truncated header");
    auto out = bytes_.substr(pos_, n);
    pos_ += n;
    return out;
  }

  [[noreturn]] static void fail(const std::string& what) {
    throw DomainError("malformed-pbm", "cannot parse P1 image: " + what);
  }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

SpacetimeWindow read_pbm(std::string_view bytes, std::int64_t x0) {
  PbmScanner in(bytes);
  if (in.take(2) != "P1") PbmScanner::fail("missing P1 magic");
  const std::int64_t width = in.integer();
  const std::int64_t height = in.integer();
  if (width < 1 || height < 1) PbmScanner::fail("empty image");

  SpacetimeWindow window{x0, x0 + width - 1, height - 1, {}};
  window.cells.resize(static_cast<std::size_t>(width * height));
  for (std::int64_t y = height - 1; y >= 0; --y) {
    for (std::int64_t i = 0; i < width; ++i) window.cells[static_cast<std::size_t>(y * width + i)] = in.bit();
  }
  return window;
}

}  // namespace cagames
