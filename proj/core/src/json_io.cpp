#include "qmm/json_io.hpp"

#include "qmm/errors.hpp"

namespace qmm
{

Json scalar_to_json(const Scalar &s)
{
    return Json{{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

namespace
{

mpq_class rational_from_json(const Json &j, const std::string &where)
{
    if (j.is_string()) {
        try {
            return Scalar::parse_rational(j.get<std::string>());
        } catch (const ParseError &) {
            throw ParseError(where + ": not a rational \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) {
        return mpq_class(j.get<long>());
    }
    throw ParseError(where + ": expected a rational string \"p/q\"");
}

} // namespace

Scalar scalar_from_json(const Json &j, const std::string &where)
{
    if (j.is_object()) {
        mpq_class re = j.contains("re") ? rational_from_json(j.at("re"), where + "/re") : mpq_class(0);
        mpq_class im = j.contains("im") ? rational_from_json(j.at("im"), where + "/im") : mpq_class(0);
        return Scalar(re, im);
    }
    return Scalar(rational_from_json(j, where));
}

Json polynomial_to_json(const Polynomial &p)
{
    Json out = Json::array();
    for (const auto &[e, c] : p.terms()) {
        Json term{{"exponents", e}, {"re", rational_to_string(c.re())}};
        if (!c.is_real()) {
            term["im"] = rational_to_string(c.im());
        }
        out.push_back(std::move(term));
    }
    return out;
}

Polynomial polynomial_from_json(const Json &j, std::size_t num_vars, const std::string &where)
{
    if (!j.is_array()) {
        throw ParseError(where + ": a polynomial is a list of terms");
    }
    Polynomial p(num_vars);
    for (std::size_t t = 0; t < j.size(); ++t) {
        const std::string at = where + "/" + std::to_string(t);
        const Json &term = j[t];
        if (!term.is_object() || !term.contains("exponents")) {
            throw ParseError(at + ": a term needs \"exponents\"");
        }
        const Json &ex = term.at("exponents");
        if (!ex.is_array() || ex.size() != num_vars) {
            throw ParseError(at + "/exponents: expected " + std::to_string(num_vars) + " exponents");
        }
        Exponents e;
        for (const auto &v : ex) {
            if (!v.is_number_integer() || v.get<int>() < 0) {
                throw ParseError(at + "/exponents: exponents are non-negative integers");
            }
            e.push_back(v.get<int>());
        }
        mpq_class re = term.contains("re") ? rational_from_json(term.at("re"), at + "/re") : mpq_class(0);
        mpq_class im = term.contains("im") ? rational_from_json(term.at("im"), at + "/im") : mpq_class(0);
        p.add_term(e, Scalar(re, im));
    }
    return p;
}

Json series_to_json(const FormalSeries &f)
{
    Json coeffs = Json::array();
    for (const auto &c : f.coeffs()) {
        coeffs.push_back(polynomial_to_json(c));
    }
    return Json{{"order", f.order()}, {"coeffs", coeffs}};
}

FormalSeries series_from_json(const Json &j, std::size_t num_vars, const std::string &where)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs")) {
        throw ParseError(where + ": a series is {\"order\", \"coeffs\"}");
    }
    const int order = j.at("order").get<int>();
    const Json &coeffs = j.at("coeffs");
    if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
        throw ParseError(where + "/coeffs: expected order + 1 coefficients");
    }
    FormalSeries f(num_vars, order);
    for (int r = 0; r <= order; ++r) {
        f.set_coeff(r, polynomial_from_json(coeffs[static_cast<std::size_t>(r)], num_vars,
                                            where + "/coeffs/" + std::to_string(r)));
    }
    return f;
}

Json cochain_table(const Cochain &c, const std::vector<std::string> &names)
{
    Json out = Json::object();
    for (const auto &[idx, value] : c.values()) {
        std::string key = "(";
        for (std::size_t i = 0; i < idx.size(); ++i) {
            key += (i ? "," : "") + std::to_string(idx[i] + 1);
        }
        key += ")";
        out[key] = value.to_string(names);
    }
    return out;
}

} // namespace qmm
