#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "p4spec/p4_structure.hpp"
#include "p4spec/spectral.hpp"
#include "p4spec/theorems.hpp"

namespace p4spec {

using Json = nlohmann::ordered_json;

/// {"integer_roots": [[value, multiplicity], ...], "residual": ["c0", "c1", ...],
///  "residual_degree": d, "l_integral": bool}. Residual coefficients are
/// ascending decimal strings so no precision is lost.
Json to_json(const ExactSpectrum& s);
Json to_json(const SpiderSpec& s);
Json to_json(const ClassificationReport& r);
Json to_json(const ClosedFormSpectrum& s);
Json to_json(const TheoremResult& r);

/// With `timing` false the "metadata" block (wall times) is omitted and the
/// output depends only on the options.
Json to_json(const VerifyReport& r, bool timing);

Json numeric_json(const std::vector<double>& eigenvalues);

/// Multi-line human-readable summaries.
std::string format_text(const ClassificationReport& r);
std::string format_text(const ExactSpectrum& s);
std::string format_text(const VerifyReport& r);

/// (a + sqrt(b))/2 style rendering of one closed-form eigenvalue.
std::string format_surd(const SurdEigenvalue& e);

}  // namespace p4spec
