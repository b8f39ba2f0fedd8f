#include "qmm/pipeline.hpp"

#include <algorithm>
#include <memory>
#include <optional>

#include "qmm/errors.hpp"
#include "qmm/fedosov.hpp"
#include "qmm/momentum.hpp"
#include "qmm/quantum.hpp"
#include "qmm/star_axioms.hpp"
#include "qmm/star_product.hpp"

namespace qmm
{

const std::vector<std::string> &pipeline_stages()
{
    static const std::vector<std::string> stages = {"validate", "momentum", "classify",
                                                    "extend",   "quantize", "fedosov"};
    return stages;
}

int Report::exit_code(bool expect_exists) const
{
    if (violation || (expect_exists && no_existence)) {
        return 1;
    }
    return 0;
}

std::string Report::to_json() const
{
    return data.dump(2) + "\n";
}

std::string Report::to_text() const
{
    std::string out;
    for (const auto &l : lines) {
        out += l + "\n";
    }
    return out;
}

namespace
{

const char *status(bool ok)
{
    return ok ? "PASS" : "FAIL";
}

class Builder
{
public:
    Builder(Report &report, const Scenario &scenario) : report_(report), names_(scenario.space().variable_names()) {}

    void begin(const std::string &stage)
    {
        stage_ = stage;
        report_.data["stages"][stage] = Json{{"checks", Json::array()}};
        report_.lines.push_back("[" + stage + "]");
    }

    Json &stage() { return report_.data["stages"][stage_]; }

    void check(const std::string &identity, bool ok, const std::string &detail = {})
    {
        Json entry{{"identity", identity}, {"status", status(ok)}};
        if (!detail.empty()) {
            entry["detail"] = detail;
        }
        stage()["checks"].push_back(std::move(entry));
        report_.lines.push_back("  " + identity + ": " + status(ok) + (detail.empty() ? "" : " (" + detail + ")"));
        if (!ok) {
            report_.violation = true;
        }
    }

    // Recorded like a check but never counted as a violation.
    void observe(const std::string &identity, bool ok, const std::string &detail = {})
    {
        Json entry{{"identity", identity}, {"status", status(ok)}, {"required", false}};
        if (!detail.empty()) {
            entry["detail"] = detail;
        }
        stage()["checks"].push_back(std::move(entry));
        report_.lines.push_back("  " + identity + ": " + status(ok) + (detail.empty() ? "" : " (" + detail + ")"));
    }

    void note(const std::string &line) { report_.lines.push_back("  " + line); }

    std::string poly(const Polynomial &p) const { return p.to_string(names_); }
    std::string series(const FormalSeries &f) const { return f.to_string(names_); }

    Json polys(const std::vector<Polynomial> &ps) const
    {
        Json out = Json::array();
        for (const auto &p : ps) {
            out.push_back(poly(p));
        }
        return out;
    }

    Json serieses(const std::vector<FormalSeries> &fs) const
    {
        Json out = Json::array();
        for (const auto &f : fs) {
            out.push_back(series(f));
        }
        return out;
    }

    void list(const std::string &label, const Json &values)
    {
        for (std::size_t i = 0; i < values.size(); ++i) {
            note(label + "(e" + std::to_string(i + 1) + ") = " + values[i].get<std::string>());
        }
    }

    void table(const std::string &label, const Json &t)
    {
        if (t.empty()) {
            note(label + " = 0");
        }
        for (const auto &[k, v] : t.items()) {
            note(label + k + " = " + v.get<std::string>());
        }
    }

    const std::vector<std::string> &names() const { return names_; }

private:
    Report &report_;
    std::vector<std::string> names_;
    std::string stage_;
};

int max_degree(const std::vector<Polynomial> &ps)
{
    int d = 0;
    for (const auto &p : ps) {
        d = std::max(d, p.degree());
    }
    return d;
}

std::string one_based_pair(std::size_t i, std::size_t j)
{
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Json bracket_table(const ExtendedAlgebra &ext)
{
    Json out = Json::object();
    const std::size_t d = ext.base().dim();
    for (std::size_t i = 0; i < ext.basis_size(); ++i) {
        for (std::size_t j = i + 1; j < ext.basis_size(); ++j) {
            const ExtendedElement b = ext.bracket(ext.basis(i), ext.basis(j));
            std::string base;
            for (std::size_t k = 0; k < d; ++k) {
                base += (k ? "," : "") + b.base[k].to_string();
            }
            out[one_based_pair(i, j)] = "([" + base + "], " + b.central.to_string() + ")";
        }
    }
    return out;
}

std::string hamiltonian_detail(const HamiltonianCheck &c, const std::vector<std::string> &names)
{
    std::string out = "degree <= " + std::to_string(c.degree_bound) + ", order " + std::to_string(c.order_bound);
    if (!c.passed) {
        out += "; witness e" + std::to_string(*c.basis + 1) + ", f = "
               + Polynomial::monomial(names.size(), *c.monomial).to_string(names) + ", hbar^"
               + std::to_string(*c.hbar_order);
    }
    return out;
}

} // namespace

int default_weyl_order(const Scenario &scenario)
{
    int deg_j = 1;
    if (scenario.momentum) {
        deg_j = std::max(deg_j, max_degree(*scenario.momentum));
    }
    int gen_degree = 0;
    for (const auto &x : scenario.action.generators()) {
        gen_degree = std::max(gen_degree, x.max_degree());
    }
    deg_j = std::max(deg_j, gen_degree + 1);
    if (!scenario.omega.is_zero()) {
        deg_j = std::max(deg_j, gen_degree + scenario.omega.max_degree() + 1);
    }
    const int widest = std::max({deg_j + scenario.degree, 2 * deg_j, 4 + 2});
    return widest + 2 * (scenario.order + 1);
}

Report run_pipeline(const Scenario &scenario, const PipelineOptions &options)
{
    Report report;
    report.data["scenario"] = scenario.name;
    const int order = scenario.order;
    const int degree = scenario.degree;
    const auto &space = scenario.space();
    const auto &action = scenario.action;
    const auto &algebra = scenario.algebra();
    report.data["settings"] = Json{{"order", order},
                                   {"degree", degree},
                                   {"convention", to_string(space.convention())},
                                   {"star", scenario.uses_fedosov() ? "fedosov" : "moyal"}};
    Builder b(report, scenario);
    report.lines.push_back("scenario " + scenario.name + " (order " + std::to_string(order) + ", degree bound "
                           + std::to_string(degree) + ", convention " + to_string(space.convention()) + ", star "
                           + (scenario.uses_fedosov() ? "fedosov" : "moyal") + ")");

    std::optional<ClassicalMomentumMap> j0;
    std::optional<Cochain> sigma;
    std::unique_ptr<StarProduct> star;
    std::optional<FedosovConfig> fedosov_config;

    auto make_star = [&]() -> const StarProduct & {
        if (!star) {
            if (scenario.uses_fedosov()) {
                const int nw = scenario.fedosov && scenario.fedosov->weyl_order ? *scenario.fedosov->weyl_order
                                                                               : default_weyl_order(scenario);
                WeylElement s(space.dim(), nw);
                if (scenario.fedosov) {
                    for (const auto &[k, c] : scenario.fedosov->s_terms) {
                        WeylKey key = k;
                        key.forms = 0;
                        s.add_term(key, c);
                    }
                }
                fedosov_config = FedosovConfig{space, scenario.omega, s, nw,
                                               scenario.fedosov ? scenario.fedosov->normalization
                                                                : NormalizationBound::w3};
                report.data["settings"]["weyl_order"] = nw;
                star = std::make_unique<FedosovStar>(*fedosov_config);
            } else {
                star = std::make_unique<MoyalProduct>(space);
            }
        }
        return *star;
    };

    auto wants = [&](const std::string &stage) { return options.stages.contains(stage); };

    for (const auto &stage : pipeline_stages()) {
        if (!wants(stage)) {
            continue;
        }
        b.begin(stage);
        try {
            if (stage == "validate") {
                b.check("phase space: omega antisymmetric, invertible, pi omega = -id", true);
                b.check("Lie algebra: antisymmetry and Jacobi on all index quadruples", true);
                b.check("generators preserve omega", true);
                b.check("generators satisfy [X_a, X_b] = -X_[a,b]", true);
                b.check("Omega closed, starting at hbar^1", true);
            } else if (stage == "momentum") {
                if (scenario.momentum) {
                    const MomentumValidation v = validate_momentum(action, *scenario.momentum);
                    b.stage()["source"] = "supplied";
                    b.stage()["J0"] = b.polys(*scenario.momentum);
                    std::string witness;
                    if (auto w = v.witness()) {
                        witness = "e" + std::to_string(*w + 1);
                        b.stage()["witness"] = witness;
                    }
                    b.check("momentum map: X_{J0(e)} = X_e for every basis element", v.passed(),
                            witness.empty() ? "" : "witness " + witness);
                    if (!v.passed()) {
                        throw InvariantViolation("supplied J0 is not a momentum map: X_{J0(" + witness + ")} != X_"
                                                 + witness);
                    }
                    j0.emplace(action, *scenario.momentum);
                } else {
                    j0.emplace(solve_momentum(action));
                    b.stage()["source"] = "solved";
                    b.stage()["J0"] = b.polys(j0->values());
                    b.check("momentum map: X_{J0(e)} = X_e for every basis element",
                            validate_momentum(action, j0->values()).passed());
                }
                b.list("J0", b.stage()["J0"]);
            } else if (stage == "classify" || stage == "extend") {
                if (!j0) {
                    j0.emplace(scenario.momentum ? ClassicalMomentumMap(action, *scenario.momentum)
                                                 : solve_momentum(action));
                }
                if (!sigma) {
                    sigma = sigma_2cocycle(*j0);
                }
                if (stage == "classify") {
                    const Json table = cochain_table(*sigma);
                    b.stage()["Sigma"] = table;
                    b.table("Sigma", table);
                    b.check("Sigma is constant and d Sigma = 0", true);
                    const EquivarianceClass cls = classify_equivariance(algebra, *sigma);
                    b.stage()["classification"] = to_string(cls.kind);
                    b.note("classification: " + to_string(cls.kind));
                    if (cls.mu) {
                        const Json mu = cochain_table(*cls.mu);
                        b.stage()["mu"] = mu;
                        b.table("mu", mu);
                    }
                } else {
                    const ExtendedClassicalMomentumMap jt0 = extend_classical(*j0, *sigma);
                    const Json table = bracket_table(jt0.extension());
                    b.stage()["gtilde_brackets"] = table;
                    b.table("[,]", table);
                    bool hom = true;
                    for (const auto &c : jt0.verify_homomorphism()) {
                        hom = hom && c.passed;
                    }
                    b.check("extended classical momentum map is a homomorphism on all basis pairs of g~", hom);
                }
            } else if (stage == "quantize") {
                if (!j0) {
                    j0.emplace(scenario.momentum ? ClassicalMomentumMap(action, *scenario.momentum)
                                                 : solve_momentum(action));
                }
                if (!sigma) {
                    sigma = sigma_2cocycle(*j0);
                }
                const StarProduct &st = make_star();
                std::vector<FormalSeries> samples;
                for (const auto &m : monomials_up_to(space.dim(), 2)) {
                    samples.push_back(FormalSeries::from_polynomial(Polynomial::monomial(space.dim(), m), order));
                }
                const StarAxiomReport axioms = verify_star_axioms(st, samples);
                // Parity C_r(f,g) = (-1)^r C_r(g,f) is a property of the Moyal product and of
                // Fedosov products whose data is even in hbar; otherwise it is only reported.
                bool parity_required = !scenario.fedosov || scenario.fedosov->s_terms.empty();
                for (int r = 1; r <= scenario.omega.order(); r += 2) {
                    for (const auto &row : scenario.omega.at(r)) {
                        for (const auto &entry : row) {
                            parity_required = parity_required && entry.is_zero();
                        }
                    }
                }
                for (const auto &a : axioms.axioms) {
                    if (a.name == "parity" && !parity_required) {
                        b.observe("star product axiom parity (not required: Fedosov data odd in hbar)", a.passed,
                                  a.witness);
                    } else {
                        b.check("star product axiom " + a.name, a.passed, a.witness);
                    }
                }

                // Quantum Hamiltonian J = J0 + J+ from i_X Omega = dJ+.
                const QuantumHamiltonian jq = quantum_hamiltonian_from(*j0, scenario.omega, order);
                const HamiltonianCheck hc = verify_quantum_hamiltonian(jq, st, degree, order);
                b.stage()["J"] = b.serieses(jq.values);
                b.list("J", b.stage()["J"]);
                b.check("quantum Hamiltonian: (1/h)[J(e), f] = rho_c(e) f", hc.passed,
                        hamiltonian_detail(hc, b.names()));
                const LambdaForms forms = lambda_forms(jq, st, order);
                b.check("lambda: commutator form equals (omega+Omega)(X,X) - J([,])",
                        forms.commutator == forms.closed);
                const Cochain lambda = lambda_cocycle(jq, st, order);
                b.stage()["lambda"] = cochain_table(lambda);
                b.table("lambda", b.stage()["lambda"]);
                const QuantumClass qc = classify_quantum(lambda, *sigma);
                b.stage()["quantum_classification"] = to_string(qc.kind);
                b.check("lambda mod h equals Sigma", true);
                b.note("classification: " + to_string(qc.kind));

                if (options.targets.contains("g")) {
                    const ExistenceResult ex = quantum_momentum_exists(*j0, scenario.omega, st, order);
                    Json g{{"exists", ex.exists}, {"reason", ex.reason}};
                    if (ex.residual) {
                        g["residual"] = cochain_table(*ex.residual);
                    }
                    if (ex.j) {
                        g["J"] = b.serieses(ex.j->values);
                    }
                    b.stage()["g"] = g;
                    b.note(std::string("quantum momentum map on g: ") + (ex.exists ? "Yes" : "No") + " ("
                           + ex.reason + ")");
                    if (ex.residual) {
                        b.table("residual", g["residual"]);
                    }
                    if (ex.j) {
                        b.list("J", g["J"]);
                        const Cochain lam = lambda_cocycle(*ex.j, st, order);
                        b.check("solution is a homomorphism (lambda = 0)", lam.is_zero());
                    } else {
                        report.no_existence = true;
                    }
                }

                std::optional<ExtendedQuantumMomentumMap> jtilde;
                if (options.targets.contains("gtilde")) {
                    const ExtendedExistenceResult ex = extended_qmm_exists(*j0, *sigma, scenario.omega, st, order);
                    Json gt{{"exists", ex.exists}, {"reason", ex.reason}};
                    b.check("first existence condition agrees on g and g~",
                            ex.first_condition_g == ex.first_condition_gtilde);
                    b.note(std::string("quantum momentum map on g~: ") + (ex.exists ? "Yes" : "No") + " ("
                           + ex.reason + ")");
                    if (ex.j) {
                        jtilde = ex.j;
                        Json values = b.serieses(ex.j->base.values);
                        values.push_back(b.series(ex.j->central_value));
                        gt["J"] = values;
                        b.list("J~", values);
                        const RestrictionReport r = restrict_to_g(*ex.j, action, *j0, *sigma, st, degree, order);
                        gt["restriction_defect"] = cochain_table(r.defect, b.names());
                        b.check("restriction to g is a quantum Hamiltonian", r.hamiltonian.passed,
                                hamiltonian_detail(r.hamiltonian, b.names()));
                        b.check("restriction is a homomorphism exactly when Sigma = 0",
                                r.homomorphism == sigma->is_zero());
                        b.check("restriction defect equals lambda", r.defect_is_lambda);
                        b.check("restriction defect mod h equals Sigma", r.defect_mod_hbar_is_sigma);
                        b.check("classical limit of the restriction is J0", r.classical_limit_is_j0);
                        const bool agree = restrictions_agree(r.j, jq);
                        gt["restrictions_agree"] = agree;
                        b.check("restriction of J~ agrees with restriction of J^", agree);
                    } else {
                        report.no_existence = true;
                    }
                    b.stage()["gtilde"] = gt;
                }

                if (options.targets.contains("ghat")) {
                    const CanonicalExtensionReport ce = canonical_quantum_extension(jq, lambda, st, degree);
                    Json gh{{"brackets", bracket_table(ce.jhat.extension)}};
                    b.table("[,]^", gh["brackets"]);
                    b.check("constant series are central for the star bracket", ce.central_brackets_vanish);
                    std::string hw;
                    if (ce.homomorphism_witness) {
                        hw = "basis pair " + one_based_pair(ce.homomorphism_witness->first,
                                                            ce.homomorphism_witness->second);
                    }
                    b.check("canonical extension J^ is a homomorphism on all basis pairs of g^", ce.homomorphism,
                            hw);
                    const QuotientReport q = classical_limit_quotient(ce.jhat, *j0, *sigma);
                    gh["quotient"] = b.polys(q.values);
                    b.check("J^ mod h equals J~0 on g~", q.matches_extended_classical);
                    b.stage()["ghat"] = gh;
                }
            } else if (stage == "fedosov") {
                make_star();
                if (!fedosov_config) {
                    const int nw = default_weyl_order(scenario);
                    fedosov_config = FedosovConfig::with_omega(space, scenario.omega, nw);
                    report.data["settings"]["weyl_order"] = nw;
                }
                const FedosovConfig &cfg = *fedosov_config;
                const auto *fstar = dynamic_cast<const FedosovStar *>(star.get());
                const WeylElement r = fstar ? fstar->r() : build_r(cfg);
                b.stage()["r_terms"] = r.terms().size();
                b.note("r: " + std::to_string(r.terms().size()) + " terms up to total degree "
                       + std::to_string(r.bound()));
                b.check("r satisfies the structure equation and delta^{-1} r = s", true);
                if (options.fedosov_identities) {
                    const std::size_t n = space.dim();
                    bool d2 = true;
                    for (std::size_t i = 0; i < n && d2; ++i) {
                        WeylKey y{0, Exponents(n, 0), 0};
                        ++y.alpha[i];
                        WeylKey ydx = y;
                        ydx.forms = 1U << ((i + 1) % n);
                        WeylElement a(n, cfg.weyl_order);
                        a.add_term(y, Polynomial::monomial(n, y.alpha));
                        a.add_term(ydx, Polynomial::constant(n, Scalar(1)));
                        d2 = vanishes(fedosov_derivation(space, fedosov_derivation(space, a, r), r));
                    }
                    b.check("D^2 = 0 on sample Weyl elements", d2);
                }
                const InvarianceReport inv = check_invariance(action, cfg);
                b.check("generators are affine", inv.affine,
                        inv.affine_witness ? "generator " + std::to_string(*inv.affine_witness + 1) : "");
                b.check("L_X Omega = 0", inv.omega_invariant,
                        inv.omega_witness ? "generator " + std::to_string(*inv.omega_witness + 1) : "");
                b.check("L_X s = 0", inv.s_invariant,
                        inv.s_witness ? "generator " + std::to_string(*inv.s_witness + 1) : "");
                if (options.fedosov_identities) {
                    bool tau_ok = true;
                    std::size_t tau_terms = 0;
                    for (const auto &m : monomials_up_to(space.dim(), 2)) {
                        const FormalSeries f =
                            FormalSeries::from_polynomial(Polynomial::monomial(space.dim(), m), 0);
                        const WeylElement tau = fedosov_taylor(space, f, r);
                        tau_terms += tau.terms().size();
                        tau_ok = tau_ok && qmm::sigma(tau).truncated(0) == f
                                 && vanishes(fedosov_derivation(space, tau, r));
                    }
                    b.stage()["tau_terms"] = tau_terms;
                    b.check("sigma(tau(f)) = f and D tau(f) = 0 on monomials of degree <= 2", tau_ok);
                }
            }
            report.data["stages"][stage]["status"] = "completed";
        } catch (const Error &e) {
            report.data["stages"][stage]["status"] = "error";
            report.data["stages"][stage]["error"] = e.what();
            report.lines.push_back("  ERROR: " + std::string(e.what()));
            report.violation = true;
            report.failed_stage = stage;
            report.error = e.what();
            break;
        }
    }
    report.data["verdict"] = Json{{"violation", report.violation}, {"no_existence", report.no_existence}};
    report.lines.push_back(std::string("verdict: ") + (report.violation ? "FAIL" : "PASS")
                           + (report.no_existence ? " (an existence solver answered No)" : ""));
    return report;
}

} // namespace qmm
