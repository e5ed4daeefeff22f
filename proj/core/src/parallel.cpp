#include "signed_spectra/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace signed_spectra {

unsigned resolve_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SIGNED_SPECTRA_JOBS")) {
        const std::string_view text(env);
        unsigned value = 0;
        const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && end == text.data() + text.size() && value > 0) return value;
    }
    return 1;
}

}  // namespace signed_spectra
