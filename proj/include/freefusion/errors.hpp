#pragma once

#include <stdexcept>
#include <string>

namespace freefusion {

/// Input text that does not obey a grammar (words, rationals, matrix files).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Mathematically invalid request (bad parameter range, inadmissible matrix).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// F does not satisfy F * conj(F) = c * Id with c real and nonzero.
struct not_o_admissible : domain_error {
    explicit not_o_admissible(const std::string& what) : domain_error(what) {}
};

/// Request exceeds the desk-scale tensor limits and was not forced.
struct guardrail_error : domain_error {
    explicit guardrail_error(const std::string& what) : domain_error(what) {}
};

} // namespace freefusion
