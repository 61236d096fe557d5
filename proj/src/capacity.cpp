#include "setchroma/capacity.hpp"

#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <string>
#include <system_error>

#include "setchroma/errors.hpp"

namespace setchroma {

std::uint64_t capacity_limit(std::uint64_t fallback) {
  const char* raw = std::getenv(kCapacityEnvVar);
  if (raw == nullptr || *raw == '\0') return fallback;
  const std::string_view text(raw);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError(std::string(kCapacityEnvVar) + " must be a nonnegative integer, got '" +
                      std::string(text) + "'");
  }
  return value;
}

void require_capacity(long double states, std::uint64_t fallback, std::string_view what) {
  const std::uint64_t limit = capacity_limit(fallback);
  if (states > static_cast<long double>(limit)) {
    std::ostringstream msg;
    msg << what << " needs about " << std::fixed << std::setprecision(0) << states
        << " states, over the limit of " << limit << " (set " << kCapacityEnvVar
        << " to raise it)";
    throw CapacityError(msg.str());
  }
}

}  // namespace setchroma
