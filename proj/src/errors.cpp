#include "regiongray/errors.hpp"

#include <cstdlib>

namespace regiongray {

std::size_t max_elements() {
    constexpr std::size_t fallback = std::size_t{1} << 16;
    const char* env = std::getenv("REGIONGRAY_MAX_ELEMENTS");
    if (env == nullptr || *env == '\0') return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) return fallback;
    return static_cast<std::size_t>(v);
}

void require_within_guard(std::size_t count, const std::string& what) {
    std::size_t limit = max_elements();
    if (count > limit) {
        throw SizeGuardError(what + " has " + std::to_string(count) + " elements, above the limit of " +
                             std::to_string(limit) + " (set REGIONGRAY_MAX_ELEMENTS to raise it)");
    }
}

}  // namespace regiongray
