#pragma once

#include "homni/dirac.hpp"
#include "homni/omni.hpp"

#include <string>
#include <vector>

namespace homni {

// Recursive-descent parsers for the object grammar. Whitespace is
// insignificant; errors carry the character offset. parse -> to_text ->
// parse is the identity on every type.

Poly parse_poly(const std::string& text, int m);

/// degree_hint resolves the bare zero form `0`; pass -1 to require the
/// degree to be readable from the dx factors.
EForm parse_eform(const std::string& text, ChartConfig chart, int degree_hint = -1);

/// Same grammar as the E-valued forms minus the `@ e<alpha>` tail; a bare
/// polynomial is a 0-form.
ScalarForm parse_scalar_form(const std::string& text, int m, int degree_hint = -1);

JForm parse_jform(const std::string& text, ChartConfig chart);
GenForm parse_genform(const std::string& text, ChartConfig chart);
Derivation parse_derivation(const std::string& text, ChartConfig chart);
OmniSection parse_omni(const std::string& text, ChartConfig chart);
ZStructure parse_zstruct(const std::string& text, ChartConfig chart);
std::vector<Rational> parse_point(const std::string& text, int m);

std::string to_text(const Poly& p);
std::string to_text(const ScalarForm& a);
std::string to_text(const EForm& a);
std::string to_text(const JForm& mu);
std::string to_text(const GenForm& g);
std::string to_text(const Derivation& d);
std::string to_text(const OmniSection& e);
std::string to_text(const ZStructure& z);
std::string to_text(const std::vector<Rational>& point);

}  // namespace homni
