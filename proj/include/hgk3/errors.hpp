#pragma once
/// @file errors.hpp
/// @brief Exception types thrown by the hgk3 library.
///
/// Every failure mode has its own type so callers (and the CLI) can map
/// errors to exit codes and machine-readable reports without string matching.

#include <stdexcept>
#include <string>

namespace hgk3 {

/// Base class of all hgk3 errors.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HGK3_DEFINE_ERROR(Name)                                              \
    struct Name : error {                                                    \
        explicit Name(const std::string& msg = #Name) : error(msg) {}        \
    }

// --- series / hypergeometric ---
HGK3_DEFINE_ERROR(PoleInDenominatorParameter);
HGK3_DEFINE_ERROR(NonUnitDivisor);
HGK3_DEFINE_ERROR(NonzeroConstantInComposition);
HGK3_DEFINE_ERROR(NonInvertibleModulus);
HGK3_DEFINE_ERROR(DenominatorDivisibleByP);
HGK3_DEFINE_ERROR(TruncationBeyondOrder);
HGK3_DEFINE_ERROR(InadmissibleTriple);

// --- finite fields ---
HGK3_DEFINE_ERROR(NonResidue);
HGK3_DEFINE_ERROR(NotAUnit);
HGK3_DEFINE_ERROR(BadReduction);

// --- elliptic curves / predictor ---
HGK3_DEFINE_ERROR(SingularFiber);
HGK3_DEFINE_ERROR(BadParameter);
HGK3_DEFINE_ERROR(HasseViolation);
HGK3_DEFINE_ERROR(SupersingularInput);

// --- isocrystal checks ---
HGK3_DEFINE_ERROR(IntegrabilityFailure);

// --- oracle calibration ---
HGK3_DEFINE_ERROR(CalibrationFailure);

// --- cache ---
HGK3_DEFINE_ERROR(CacheCorruption);
HGK3_DEFINE_ERROR(CacheDivergence);

#undef HGK3_DEFINE_ERROR

} // namespace hgk3
