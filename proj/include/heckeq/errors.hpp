#pragma once

#include <stdexcept>
#include <string>

namespace heckeq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf_psl2
struct InvalidElement : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct UnsupportedPrime : Error { using Error::Error; };

// cyclotomic
struct ConductorTooLarge : Error { using Error::Error; };

// character_table
struct ExactModeUnavailable : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct NotARepresentationTrace : Error { using Error::Error; };

// modcurve
struct NotInGroup : Error { using Error::Error; };

// hecke
struct SignConventionViolation : Error { using Error::Error; };

// Any result that contradicts an identity the construction guarantees.
// Reaching this means a bug in a table or formula, not bad user input.
struct InternalInconsistency : Error { using Error::Error; };

} // namespace heckeq
