#ifndef QMM_JSON_IO_HPP
#define QMM_JSON_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "qmm/cochain.hpp"
#include "qmm/polynomial.hpp"
#include "qmm/series.hpp"

namespace qmm
{

using Json = nlohmann::json;

// Polynomial: [{"exponents": [..], "re": "p/q", "im": "p/q"}, ...]; "im" may
// be omitted when zero.
Json polynomial_to_json(const Polynomial &p);
// Throws ParseError with the given location prefixed.
Polynomial polynomial_from_json(const Json &j, std::size_t num_vars, const std::string &where);

// Series: {"order": N, "coeffs": [poly, ...]}.
Json series_to_json(const FormalSeries &f);
FormalSeries series_from_json(const Json &j, std::size_t num_vars, const std::string &where);

Json scalar_to_json(const Scalar &s);
// Accepts a rational string, an integer, or {"re": .., "im": ..}.
Scalar scalar_from_json(const Json &j, const std::string &where);

// {"(1,2)": "value", ...} with 1-based indices; values printed as series in hbar.
Json cochain_table(const Cochain &c, const std::vector<std::string> &names = {});

} // namespace qmm

#endif
