#include "qmm/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qmm/errors.hpp"

namespace qmm
{

bool Scenario::uses_fedosov() const
{
    return fedosov.has_value() || !omega.is_zero();
}

namespace
{

const std::vector<std::string> known_stages = {"validate", "momentum", "classify", "quantize", "extend", "report"};

const Json &require(const Json &j, const std::string &key, const std::string &where)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(where + ": missing key \"" + key + "\"");
    }
    return j.at(key);
}

int require_int(const Json &j, const std::string &where)
{
    if (!j.is_number_integer()) {
        throw ParseError(where + ": expected an integer");
    }
    return j.get<int>();
}

// Re-raises an invariant failure with the key path in front.
template <class F>
auto located(const std::string &where, F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const InvariantViolation &e) {
        std::string msg = e.what();
        const std::string prefix = "InvariantViolation: ";
        if (msg.rfind(prefix, 0) == 0) {
            msg.erase(0, prefix.size());
        }
        throw InvariantViolation(where + ": " + msg);
    }
}

Matrix matrix_from_json(const Json &j, std::size_t dim, const std::string &where)
{
    if (!j.is_array() || j.size() != dim) {
        throw ParseError(where + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    }
    Matrix m;
    for (std::size_t i = 0; i < dim; ++i) {
        const Json &row = j[i];
        if (!row.is_array() || row.size() != dim) {
            throw ParseError(where + "/" + std::to_string(i) + ": expected " + std::to_string(dim) + " entries");
        }
        std::vector<Scalar> r;
        for (std::size_t k = 0; k < dim; ++k) {
            r.push_back(scalar_from_json(row[k], where + "/" + std::to_string(i) + "/" + std::to_string(k)));
        }
        m.push_back(std::move(r));
    }
    return m;
}

std::size_t one_based_index(const Json &j, std::size_t dim, const std::string &where)
{
    const int v = require_int(j, where);
    if (v < 1 || static_cast<std::size_t>(v) > dim) {
        throw ParseError(where + ": index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
    }
    return static_cast<std::size_t>(v - 1);
}

} // namespace

Scenario scenario_from_json(const Json &j, const ScenarioOverrides &overrides)
{
    if (!j.is_object()) {
        throw ParseError("/: a scenario is a JSON object");
    }
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "unnamed";
    const int n = require_int(require(j, "n", ""), "/n");
    if (n < 1) {
        throw ParseError("/n: must be positive");
    }
    const std::size_t dim = static_cast<std::size_t>(2 * n);

    Convention convention = Convention::real_half;
    if (j.contains("convention")) {
        try {
            convention = convention_from_string(j.at("convention").get<std::string>());
        } catch (const std::exception &) {
            throw ParseError("/convention: expected real_half or minus_i_half");
        }
    }
    if (overrides.convention) {
        convention = *overrides.convention;
    }
    const Matrix omega = matrix_from_json(require(j, "omega", ""), dim, "/omega");
    std::optional<Matrix> pi;
    if (j.contains("pi")) {
        pi = matrix_from_json(j.at("pi"), dim, "/pi");
    }
    PhaseSpace space = located("/omega", [&] { return PhaseSpace(n, omega, pi, convention); });

    const Json &lie = require(j, "lie", "");
    const int d = require_int(require(lie, "dim", "/lie"), "/lie/dim");
    if (d < 1) {
        throw ParseError("/lie/dim: must be positive");
    }
    const std::size_t ud = static_cast<std::size_t>(d);
    std::vector<StructureConstant> triples;
    if (lie.contains("structure_constants")) {
        const Json &sc = lie.at("structure_constants");
        if (!sc.is_array()) {
            throw ParseError("/lie/structure_constants: expected a list");
        }
        for (std::size_t t = 0; t < sc.size(); ++t) {
            const std::string at = "/lie/structure_constants/" + std::to_string(t);
            triples.push_back({one_based_index(require(sc[t], "i", at), ud, at + "/i"),
                               one_based_index(require(sc[t], "j", at), ud, at + "/j"),
                               one_based_index(require(sc[t], "k", at), ud, at + "/k"),
                               scalar_from_json(require(sc[t], "value", at), at + "/value")});
        }
    }
    LieAlgebra algebra = located("/lie/structure_constants", [&] { return LieAlgebra::from_triples(ud, triples); });

    const Json &gens = require(j, "generators", "");
    if (!gens.is_array() || gens.size() != ud) {
        throw ParseError("/generators: expected " + std::to_string(d) + " generators");
    }
    std::vector<VectorField> fields;
    for (std::size_t a = 0; a < ud; ++a) {
        const std::string at = "/generators/" + std::to_string(a);
        if (!gens[a].is_array() || gens[a].size() != dim) {
            throw ParseError(at + ": expected " + std::to_string(dim) + " components");
        }
        VectorField x;
        for (std::size_t c = 0; c < dim; ++c) {
            x.components.push_back(polynomial_from_json(gens[a][c], dim, at + "/" + std::to_string(c)));
        }
        fields.push_back(std::move(x));
    }
    SymplecticAction action = located("/generators", [&] { return SymplecticAction(space, algebra, fields); });

    std::optional<std::vector<Polynomial>> momentum;
    if (j.contains("momentum")) {
        const Json &m = j.at("momentum");
        if (!m.is_array() || m.size() != ud) {
            throw ParseError("/momentum: expected " + std::to_string(d) + " polynomials");
        }
        momentum.emplace();
        for (std::size_t a = 0; a < ud; ++a) {
            momentum->push_back(polynomial_from_json(m[a], dim, "/momentum/" + std::to_string(a)));
        }
    }

    int order = j.contains("order") ? require_int(j.at("order"), "/order") : 4;
    if (overrides.order) {
        order = *overrides.order;
    }
    if (order < 0) {
        throw ParseError("/order: must be non-negative");
    }
    int degree = j.contains("degree") ? require_int(j.at("degree"), "/degree") : 4;
    if (overrides.degree) {
        degree = *overrides.degree;
    }
    if (degree < 0) {
        throw ParseError("/degree: must be non-negative");
    }

    std::vector<PolyMatrix> forms(1, zero_poly_matrix(dim));
    if (j.contains("Omega")) {
        const Json &om = j.at("Omega");
        if (!om.is_array()) {
            throw ParseError("/Omega: expected a list of {hbar_power, components}");
        }
        for (std::size_t t = 0; t < om.size(); ++t) {
            const std::string at = "/Omega/" + std::to_string(t);
            const int r = require_int(require(om[t], "hbar_power", at), at + "/hbar_power");
            if (r < 0) {
                throw ParseError(at + "/hbar_power: must be non-negative");
            }
            const Json &comp = require(om[t], "components", at);
            if (!comp.is_array() || comp.size() != dim) {
                throw ParseError(at + "/components: expected a " + std::to_string(dim) + "x" + std::to_string(dim)
                                 + " matrix of polynomials");
            }
            if (static_cast<std::size_t>(r) >= forms.size()) {
                forms.resize(static_cast<std::size_t>(r) + 1, zero_poly_matrix(dim));
            }
            for (std::size_t i = 0; i < dim; ++i) {
                if (!comp[i].is_array() || comp[i].size() != dim) {
                    throw ParseError(at + "/components/" + std::to_string(i) + ": expected " + std::to_string(dim)
                                     + " entries");
                }
                for (std::size_t k = 0; k < dim; ++k) {
                    forms[static_cast<std::size_t>(r)][i][k]
                        += polynomial_from_json(comp[i][k], dim,
                                                at + "/components/" + std::to_string(i) + "/" + std::to_string(k));
                }
            }
        }
    }
    TwoFormSeries omega_series = located("/Omega", [&] { return TwoFormSeries(dim, forms); });

    std::optional<FedosovSettings> fedosov;
    if (j.contains("fedosov")) {
        const Json &f = j.at("fedosov");
        if (!f.is_object()) {
            throw ParseError("/fedosov: expected an object");
        }
        fedosov.emplace();
        if (f.contains("N_W")) {
            fedosov->weyl_order = require_int(f.at("N_W"), "/fedosov/N_W");
        }
        if (f.contains("normalization")) {
            const std::string b = f.at("normalization").get<std::string>();
            if (b == "W3") {
                fedosov->normalization = NormalizationBound::w3;
            } else if (b == "W4") {
                fedosov->normalization = NormalizationBound::w4;
            } else {
                throw ParseError("/fedosov/normalization: expected W3 or W4");
            }
        }
        if (f.contains("s")) {
            const Json &s = f.at("s");
            if (!s.is_array()) {
                throw ParseError("/fedosov/s: expected a list of terms");
            }
            for (std::size_t t = 0; t < s.size(); ++t) {
                const std::string at = "/fedosov/s/" + std::to_string(t);
                WeylKey key;
                key.hbar = require_int(require(s[t], "hbar_power", at), at + "/hbar_power");
                const Json &alpha = require(s[t], "sym_multi_index", at);
                if (!alpha.is_array() || alpha.size() != dim) {
                    throw ParseError(at + "/sym_multi_index: expected " + std::to_string(dim) + " entries");
                }
                for (const auto &v : alpha) {
                    key.alpha.push_back(require_int(v, at + "/sym_multi_index"));
                }
                fedosov->s_terms.emplace_back(key,
                                              polynomial_from_json(require(s[t], "coefficient", at), dim,
                                                                   at + "/coefficient"));
            }
        }
    }
    if (overrides.weyl_order) {
        if (!fedosov) {
            fedosov.emplace();
        }
        fedosov->weyl_order = *overrides.weyl_order;
    }

    std::vector<std::string> stages = known_stages;
    if (j.contains("stages")) {
        stages.clear();
        for (const auto &s : j.at("stages")) {
            const std::string stage = s.get<std::string>();
            if (std::find(known_stages.begin(), known_stages.end(), stage) == known_stages.end()) {
                throw ParseError("/stages: unknown stage \"" + stage + "\"");
            }
            stages.push_back(stage);
        }
    }

    return Scenario{name, std::move(action), std::move(momentum), std::move(omega_series), std::move(fedosov),
                    order, degree, std::move(stages)};
}

Scenario parse_scenario(const std::string &text, const ScenarioOverrides &overrides)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n');
        throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
    try {
        return scenario_from_json(j, overrides);
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string &path, const ScenarioOverrides &overrides)
{
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str(), overrides);
}

} // namespace qmm
