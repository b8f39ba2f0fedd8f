#include "qmm/star_axioms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmm
{

bool StarAxiomReport::passed() const
{
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult &a) { return a.passed; });
}

const AxiomResult &StarAxiomReport::get(const std::string &name) const
{
    for (const auto &a : axioms) {
        if (a.name == name) {
            return a;
        }
    }
    throw std::out_of_range("no axiom named " + name);
}

Polynomial star_cochain(const StarProduct &star, const Polynomial &f, const Polynomial &g, int r)
{
    return star.multiply(FormalSeries::from_polynomial(f, r), FormalSeries::from_polynomial(g, r)).coeff(r);
}

namespace
{

void fail(AxiomResult &result, std::string witness)
{
    if (result.passed) {
        result.passed = false;
        result.witness = std::move(witness);
    }
}

} // namespace

StarAxiomReport verify_star_axioms(const StarProduct &star, const std::vector<FormalSeries> &samples)
{
    if (samples.empty()) {
        throw std::invalid_argument("verify_star_axioms needs at least one sample");
    }
    const PhaseSpace &space = star.space();
    const auto names = space.variable_names();
    const std::size_t nv = space.dim();
    int order = samples.front().order();
    for (const auto &s : samples) {
        order = std::min(order, s.order());
    }
    std::vector<FormalSeries> series;
    std::vector<Polynomial> classical;
    for (const auto &s : samples) {
        series.push_back(s.truncated(order));
        classical.push_back(classical_limit(s));
    }
    auto label = [&](std::initializer_list<std::size_t> idx) {
        std::string out;
        char tag = 'f';
        for (auto i : idx) {
            if (!out.empty()) {
                out += ", ";
            }
            out += std::string(1, tag++) + "=" + classical[i].to_string(names);
        }
        return out;
    };

    AxiomResult assoc{"associativity", true, {}};
    AxiomResult c0{"C0", true, {}};
    AxiomResult c1{"C1", true, {}};
    AxiomResult parity{"parity", true, {}};
    AxiomResult unit{"unit", true, {}};

    for (std::size_t i = 0; i < series.size() && assoc.passed; ++i) {
        for (std::size_t j = 0; j < series.size() && assoc.passed; ++j) {
            const FormalSeries fg = star.multiply(series[i], series[j]);
            for (std::size_t k = 0; k < series.size(); ++k) {
                if (star.multiply(fg, series[k]) != star.multiply(series[i], star.multiply(series[j], series[k]))) {
                    fail(assoc, label({i, j, k}));
                    break;
                }
            }
        }
    }

    const Scalar c = space.star_coefficient();
    for (std::size_t i = 0; i < classical.size(); ++i) {
        for (std::size_t j = 0; j < classical.size(); ++j) {
            const FormalSeries f = FormalSeries::from_polynomial(classical[i], order);
            const FormalSeries g = FormalSeries::from_polynomial(classical[j], order);
            const FormalSeries fg = star.multiply(f, g);
            const FormalSeries gf = star.multiply(g, f);
            if (fg.coeff(0) != classical[i] * classical[j]) {
                fail(c0, label({i, j}));
            }
            if (order >= 1) {
                const Polynomial anti = (fg.coeff(1) - gf.coeff(1)) * Scalar::rational(1, 2);
                if (anti != c * poisson_bracket(space, classical[i], classical[j])) {
                    fail(c1, label({i, j}));
                }
            }
            for (int r = 0; r <= order; ++r) {
                const Polynomial expected = (r % 2 == 0) ? gf.coeff(r) : -gf.coeff(r);
                if (fg.coeff(r) != expected) {
                    fail(parity, label({i, j}) + ", r=" + std::to_string(r));
                    break;
                }
            }
        }
    }
    if (order < 1) {
        fail(c1, "order 0 truncation cannot exhibit C1");
    }

    const FormalSeries one = FormalSeries::constant(nv, order, Scalar(1));
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (star.multiply(one, series[i]) != series[i] || star.multiply(series[i], one) != series[i]) {
            fail(unit, label({i}));
        }
    }

    StarAxiomReport report;
    report.order = order;
    report.axioms = {assoc, c0, c1, parity, unit};
    return report;
}

} // namespace qmm
