#include "lesgp/config.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace lesgp {
namespace {

std::optional<std::size_t> env_override() {
  const char* raw = std::getenv("LESGP_MAX_N");
  if (raw == nullptr) return std::nullopt;
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return std::nullopt;
  }
  return std::min(value, kHardMaxOrder);
}

}  // namespace

std::size_t max_order() { return env_override().value_or(kDefaultMaxOrder); }

std::size_t max_enumeration_order() {
  return env_override().value_or(kDefaultMaxEnumerationOrder);
}

}  // namespace lesgp
