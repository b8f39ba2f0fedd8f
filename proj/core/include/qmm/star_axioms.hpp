#ifndef QMM_STAR_AXIOMS_HPP
#define QMM_STAR_AXIOMS_HPP

#include <string>
#include <vector>

#include "qmm/star_product.hpp"

namespace qmm
{

struct AxiomResult
{
    std::string name;
    bool passed = true;
    std::string witness; // empty when passed
};

struct StarAxiomReport
{
    int order = 0;
    std::vector<AxiomResult> axioms;

    bool passed() const;
    const AxiomResult &get(const std::string &name) const;
};

/// Checks the deformation-quantization axioms on the given samples at the
/// smallest sample order: associativity (all triples), C_0 = pointwise
/// product, antisymmetric part of C_1 = c{f,g}, parity
/// C_r(f,g) = (-1)^r C_r(g,f), and the unit axiom. C_r axioms use the
/// classical parts of the samples.
StarAxiomReport verify_star_axioms(const StarProduct &star, const std::vector<FormalSeries> &samples);

// C_r(f,g) for polynomials f, g, read off the star product at order r.
Polynomial star_cochain(const StarProduct &star, const Polynomial &f, const Polynomial &g, int r);

} // namespace qmm

#endif
