#pragma once
//
// Error categories shared across the library.  std::invalid_argument is used
// for domain/usage violations; the two types below distinguish "this request
// is outside the implemented catalog" from "this request exceeds the
// desk-scale resource guards", because callers (notably the CLI) map them to
// different exit codes.
//
#include <stdexcept>
#include <string>

namespace qcons {

struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// The slackness certificate cannot even be attempted (numerically empty
// λ₂-eigenspace).  Distinct from a certificate that runs and rejects.
struct certificate_unavailable_error : std::runtime_error {
    explicit certificate_unavailable_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace qcons
