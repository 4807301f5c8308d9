#pragma once

#include <string>

#include <json.hpp>

#include "anndiff/divisor.hpp"
#include "anndiff/extension.hpp"
#include "anndiff/sheaf_iso.hpp"

namespace anndiff {

using Json = nlohmann::json;

// Complex values serialize as [re, im]; every container is dense so the
// document fixes the expansion completely.

Json complex_to_json(const Complex& c);
Complex complex_from_json(const Json& j);

/// {"n_min", "n_max", "coeffs": [[re, im], ...]} dense ascending. The zero
/// series keeps the dense-length invariant as {"n_min": 0, "n_max": 0,
/// "coeffs": [[0, 0]]}.
Json laurent_to_json(const LaurentSeries& s);
LaurentSeries laurent_from_json(const Json& j);

/// {"k", "f": <laurent>, "annulus": [r_inner, r_outer]}.
Json differential_to_json(const AnnulusKDifferential& d);
AnnulusKDifferential differential_from_json(const Json& j);

/// {"m_deg", "n_deg", "pole_order", "coeffs": row-per-m nested lists}.
Json two_var_to_json(const TwoVarSeries& s);
TwoVarSeries two_var_from_json(const Json& j);

/// {"k", "r_zeta", "rho_t", "t_count", "zeta_count", "values"}; the t grid is
/// the uniform circle rho_t·e^{2πil/t_count}. Optional "c", "c_prime"
/// (default 1).
Json family_samples_to_json(const FamilySamples& fs);
FamilySamples family_samples_from_json(const Json& j);

/// TwoVarSeries fields plus {"kind": "relative_section"|"canonical_form", "k"}.
Json section_to_json(const RelativeSection& s);
RelativeSection section_from_json(const Json& j);
Json canonical_to_json(const CanonicalForm& s);
CanonicalForm canonical_from_json(const Json& j);

/// Parse with io_error on malformed documents.
Json parse_json(const std::string& text);
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);
std::string dump_json(const Json& j);

}  // namespace anndiff
