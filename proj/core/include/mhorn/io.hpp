#pragma once

#include <string>
#include <string_view>

#include "mhorn/combinatorics.hpp"
#include "mhorn/spectra.hpp"
#include "mhorn/svf.hpp"

namespace mhorn {

// JSON forms of the library's values. Readers throw ParseError on malformed
// documents and DomainError/DimensionError when the content breaks an invariant.

/// {"n": int, "version": int, "triples": [{"r": int, "I": [..], "J": [..], "K": [..]}]}, 1-based.
std::string catalogToJson(const TripleCatalog& catalog);
TripleCatalog parseCatalog(std::string_view json);

/// Rows of [re, im] pairs: [[[re, im], ...], ...]. The reader also accepts one flat
/// row-major array of n*n pairs.
std::string matrixToJson(const ComplexMatrix& m);
ComplexMatrix parseMatrix(std::string_view json);

/// Array of reals, nonincreasing and nonnegative.
std::string spectrumToJson(const SingularSpectrum& s);
SingularSpectrum parseSpectrum(std::string_view json);

/// {"breakpoints": ["0", "1/2", 1, ...], "values": [..]}; exact breakpoints are
/// written as "p/q" strings, inexact ones as numbers.
std::string stepFunctionToJson(const StepFunction& f);
StepFunction parseStepFunction(std::string_view json);

}  // namespace mhorn
