#include "dugg/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dugg {

using nlohmann::json;

std::vector<DualNumber> signed_elementary_symmetric(const std::vector<DualNumber>& values) {
    // Coefficients of prod (x - lambda), highest power first.
    std::vector<DualNumber> poly{DualNumber{1.0}};
    for (const DualNumber& lam : values) {
        std::vector<DualNumber> next(poly.size() + 1);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k] += poly[k];
            next[k + 1] -= poly[k] * lam;
        }
        poly = std::move(next);
    }
    poly.erase(poly.begin());
    return poly;
}

CharPolyReport make_charpoly_report(std::vector<DualNumber> coefficients, const std::vector<DualNumber>& eigenvalues,
                                    double tol) {
    CharPolyReport r;
    r.coefficients = std::move(coefficients);
    r.from_eigenvalues = signed_elementary_symmetric(eigenvalues);
    if (r.coefficients.size() != r.from_eigenvalues.size()) throw ShapeMismatch("coefficient count differs from order");
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        r.max_deviation = std::max(r.max_deviation, max_abs_diff(r.coefficients[i], r.from_eigenvalues[i]));
    r.consistent = r.max_deviation <= tol;
    return r;
}

MdetReport make_mdet_report(const DualScalar& moore, DualNumber subgraphs, const std::vector<DualNumber>& eigenvalues,
                            double tol) {
    MdetReport r;
    r.moore = moore;
    r.subgraphs = subgraphs;
    r.eigen_product = DualNumber{1.0};
    for (const DualNumber& lam : eigenvalues) r.eigen_product = r.eigen_product * lam;
    // The Moore determinant of a Hermitian matrix is real; any leftover
    // imaginary components count towards the deviation.
    const DualScalar wide = moore.widen(Ring::quaternion);
    const DualQuaternion& q = wide.as<Quaternion>();
    const DualQuaternion im{Quaternion{0.0, q.s.x, q.s.y, q.s.z}, Quaternion{0.0, q.d.x, q.d.y, q.d.z}};
    const DualNumber re = real_part(q);
    r.max_deviation = std::max({max_abs_diff(re, subgraphs), max_abs_diff(re, r.eigen_product),
                                max_abs_diff(subgraphs, r.eigen_product), max_abs_diff(im, DualQuaternion{})});
    r.consistent = r.max_deviation <= tol;
    return r;
}

double max_spectrum_deviation(const Spectrum& a, const Spectrum& b) {
    if (a.values.size() != b.values.size()) throw ShapeMismatch("spectra of different sizes");
    double out = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) out = std::max(out, max_abs_diff(a.values[i], b.values[i]));
    return out;
}

// ---- JSON ----------------------------------------------------------------

void to_json(json& j, const DualNumber& v) { j = json{{"std", v.s}, {"dual", v.d}}; }
void from_json(const json& j, DualNumber& v) {
    v.s = j.at("std").get<double>();
    v.d = j.at("dual").get<double>();
}

void to_json(json& j, const DualScalar& v) {
    std::visit([&](const auto& x) { j = json{{"std", components(x.s)}, {"dual", components(x.d)}}; }, v.storage());
}

void from_json(const json& j, DualScalar& v) {
    const auto s = j.at("std").get<std::vector<double>>();
    const auto d = j.at("dual").get<std::vector<double>>();
    if (s.size() != d.size()) throw BadParameter("dual scalar parts have different lengths");
    switch (s.size()) {
        case 1: v = DualNumber{s[0], d[0]}; break;
        case 2: v = DualComplex{from_components<Complex>(s), from_components<Complex>(d)}; break;
        case 4: v = DualQuaternion{from_components<Quaternion>(s), from_components<Quaternion>(d)}; break;
        default: throw BadParameter("dual scalar needs 1, 2 or 4 components");
    }
}

void to_json(json& j, const Spectrum& v) { j = json{{"kind", kind_name(v.kind)}, {"values", v.values}}; }
void from_json(const json& j, Spectrum& v) {
    v.kind = parse_kind(j.at("kind").get<std::string>());
    v.values = j.at("values").get<std::vector<DualNumber>>();
}

void to_json(json& j, const RadiusReport& v) {
    j = json{{"kind", kind_name(v.kind)},
             {"rho_graph", v.rho_graph},
             {"rho_gain", v.rho_gain},
             {"delta_bound", v.delta_bound},
             {"bound_holds", v.bound_holds},
             {"equality", v.equality},
             {"connected", v.connected},
             {"balanced", v.balanced},
             {"antibalanced", v.antibalanced},
             {"standard_balanced", v.standard_balanced},
             {"standard_antibalanced", v.standard_antibalanced},
             {"consistent", v.consistent}};
}
void from_json(const json& j, RadiusReport& v) {
    v.kind = parse_kind(j.at("kind").get<std::string>());
    j.at("rho_graph").get_to(v.rho_graph);
    j.at("rho_gain").get_to(v.rho_gain);
    j.at("delta_bound").get_to(v.delta_bound);
    j.at("bound_holds").get_to(v.bound_holds);
    j.at("equality").get_to(v.equality);
    j.at("connected").get_to(v.connected);
    j.at("balanced").get_to(v.balanced);
    j.at("antibalanced").get_to(v.antibalanced);
    j.at("standard_balanced").get_to(v.standard_balanced);
    j.at("standard_antibalanced").get_to(v.standard_antibalanced);
    j.at("consistent").get_to(v.consistent);
}

void to_json(json& j, const InterlacingVerdict& v) {
    j = json{{"kind", kind_name(v.kind)}, {"subset", v.subset}, {"full", v.full}, {"sub", v.sub},
             {"upper", v.upper},          {"lower", v.lower},   {"holds", v.holds}};
}
void from_json(const json& j, InterlacingVerdict& v) {
    v.kind = parse_kind(j.at("kind").get<std::string>());
    j.at("subset").get_to(v.subset);
    j.at("full").get_to(v.full);
    j.at("sub").get_to(v.sub);
    v.upper = j.at("upper").get<std::vector<bool>>();
    v.lower = j.at("lower").get<std::vector<bool>>();
    j.at("holds").get_to(v.holds);
}

void to_json(json& j, const InterlaceChainReport& v) {
    j = json{{"deleted", v.deleted}, {"steps", v.steps}, {"holds", v.holds}};
}
void from_json(const json& j, InterlaceChainReport& v) {
    j.at("deleted").get_to(v.deleted);
    j.at("steps").get_to(v.steps);
    j.at("holds").get_to(v.holds);
}

void to_json(json& j, const BalanceReport& v) {
    j = json{{"balanced", v.balanced},
             {"theta", v.theta},
             {"witness_cycle", v.witness_cycle},
             {"witness_gain", v.witness_gain ? json(*v.witness_gain) : json(nullptr)},
             {"max_mismatch", v.max_mismatch}};
}
void from_json(const json& j, BalanceReport& v) {
    j.at("balanced").get_to(v.balanced);
    j.at("theta").get_to(v.theta);
    j.at("witness_cycle").get_to(v.witness_cycle);
    const json& w = j.at("witness_gain");
    v.witness_gain = w.is_null() ? std::nullopt : std::optional<DualScalar>(w.get<DualScalar>());
    j.at("max_mismatch").get_to(v.max_mismatch);
}

void to_json(json& j, const CharPolyReport& v) {
    j = json{{"coefficients", v.coefficients},
             {"from_eigenvalues", v.from_eigenvalues},
             {"max_deviation", v.max_deviation},
             {"consistent", v.consistent}};
}
void from_json(const json& j, CharPolyReport& v) {
    j.at("coefficients").get_to(v.coefficients);
    j.at("from_eigenvalues").get_to(v.from_eigenvalues);
    j.at("max_deviation").get_to(v.max_deviation);
    j.at("consistent").get_to(v.consistent);
}

void to_json(json& j, const MdetReport& v) {
    j = json{{"moore", v.moore},
             {"subgraphs", v.subgraphs},
             {"eigen_product", v.eigen_product},
             {"max_deviation", v.max_deviation},
             {"consistent", v.consistent}};
}
void from_json(const json& j, MdetReport& v) {
    j.at("moore").get_to(v.moore);
    j.at("subgraphs").get_to(v.subgraphs);
    j.at("eigen_product").get_to(v.eigen_product);
    j.at("max_deviation").get_to(v.max_deviation);
    j.at("consistent").get_to(v.consistent);
}

void to_json(json& j, const ClosedFormReport& v) {
    j = json{{"family", v.family},
             {"n", v.n},
             {"kind", kind_name(v.kind)},
             {"closed_form", v.closed_form},
             {"eigensolver", v.eigensolver},
             {"max_deviation", v.max_deviation},
             {"consistent", v.consistent}};
}
void from_json(const json& j, ClosedFormReport& v) {
    j.at("family").get_to(v.family);
    j.at("n").get_to(v.n);
    v.kind = parse_kind(j.at("kind").get<std::string>());
    j.at("closed_form").get_to(v.closed_form);
    j.at("eigensolver").get_to(v.eigensolver);
    j.at("max_deviation").get_to(v.max_deviation);
    j.at("consistent").get_to(v.consistent);
}

void to_json(json& j, const CheckReport& v) {
    j = json{{"suite", v.suite},
             {"seed", v.seed},
             {"trials", v.trials},
             {"passed", v.passed},
             {"failed", v.failed},
             {"tol", v.tol},
             {"first_failure", v.first_failure ? json(*v.first_failure) : json(nullptr)},
             {"counterexample", v.counterexample ? json(*v.counterexample) : json(nullptr)},
             {"detail", v.detail}};
}
void from_json(const json& j, CheckReport& v) {
    j.at("suite").get_to(v.suite);
    j.at("seed").get_to(v.seed);
    j.at("trials").get_to(v.trials);
    j.at("passed").get_to(v.passed);
    j.at("failed").get_to(v.failed);
    j.at("tol").get_to(v.tol);
    const json& f = j.at("first_failure");
    v.first_failure = f.is_null() ? std::nullopt : std::optional<int>(f.get<int>());
    const json& c = j.at("counterexample");
    v.counterexample = c.is_null() ? std::nullopt : std::optional<std::string>(c.get<std::string>());
    j.at("detail").get_to(v.detail);
}

// ---- tables --------------------------------------------------------------

namespace {

std::string fixed(double v, int digits = 6) {
    char buf[64];
    if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string dual_cell(const DualNumber& v) {
    std::string d = fixed(v.d);
    if (d.front() != '-') d = "+" + d;
    return fixed(v.s) + " " + d.substr(0, 1) + " " + d.substr(1) + " eps";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_table(const Spectrum& v) {
    std::ostringstream os;
    os << kind_name(v.kind) << " spectrum (" << v.values.size() << " eigenvalues)\n";
    for (std::size_t i = 0; i < v.values.size(); ++i) os << "  lambda_" << i + 1 << " = " << dual_cell(v.values[i]) << "\n";
    return os.str();
}

std::string render_table(const RadiusReport& v) {
    std::ostringstream os;
    const bool adj = v.kind == MatrixKind::adjacency;
    os << kind_name(v.kind) << " spectral radius\n"
       << "  rho_gain     " << dual_cell(v.rho_gain) << "\n"
       << "  " << (adj ? "rho_A(G)   " : "rho_Q(G)   ") << "  " << fixed(v.rho_graph) << "\n"
       << "  " << (adj ? "Delta      " : "2 Delta    ") << "  " << fixed(v.delta_bound) << "\n"
       << "  bound_holds  " << yes_no(v.bound_holds) << "\n"
       << "  equality     " << yes_no(v.equality) << "\n"
       << "  connected    " << yes_no(v.connected) << "\n"
       << "  balanced     " << yes_no(v.balanced) << "\n"
       << "  antibalanced " << yes_no(v.antibalanced) << "\n"
       << "  standard part balanced     " << yes_no(v.standard_balanced) << "\n"
       << "  standard part antibalanced " << yes_no(v.standard_antibalanced) << "\n"
       << "  consistent   " << yes_no(v.consistent) << "\n";
    return os.str();
}

std::string render_table(const InterlaceChainReport& v) {
    std::ostringstream os;
    os << "interlacing along a deletion chain: " << (v.holds ? "holds" : "VIOLATED") << "\n";
    for (std::size_t s = 0; s < v.steps.size(); ++s) {
        const auto& st = v.steps[s];
        os << "  delete " << v.deleted[s] << " -> keep {";
        for (std::size_t k = 0; k < st.subset.size(); ++k) os << (k ? "," : "") << st.subset[k];
        os << "}: " << (st.holds ? "ok" : "VIOLATED") << "\n";
        for (std::size_t i = 0; i < st.sub.values.size(); ++i) {
            if (st.upper[i] && st.lower[i]) continue;
            os << "    mu_" << i + 1 << " = " << dual_cell(st.sub.values[i]) << (st.upper[i] ? "" : " above lambda")
               << (st.lower[i] ? "" : " below lambda") << "\n";
        }
    }
    return os.str();
}

std::string render_table(const BalanceReport& v) {
    std::ostringstream os;
    os << (v.balanced ? "balanced" : "unbalanced") << "\n";
    for (std::size_t i = 0; i < v.theta.size(); ++i) os << "  theta(" << i << ") = " << to_string(v.theta[i]) << "\n";
    if (!v.witness_cycle.empty()) {
        os << "  witness cycle:";
        for (int x : v.witness_cycle) os << " " << x;
        os << " " << v.witness_cycle.front() << "\n";
        if (v.witness_gain) os << "  cycle gain: " << to_string(*v.witness_gain) << "\n";
    }
    os << "  max mismatch: " << v.max_mismatch << "\n";
    return os.str();
}

std::string render_table(const CharPolyReport& v) {
    std::ostringstream os;
    os << "characteristic polynomial coefficients\n";
    for (std::size_t i = 0; i < v.coefficients.size(); ++i) {
        os << "  c_" << i + 1 << " = " << dual_cell(v.coefficients[i]) << "   eigenvalues: " << dual_cell(v.from_eigenvalues[i])
           << "\n";
    }
    os << "  max deviation " << v.max_deviation << " (" << (v.consistent ? "consistent" : "INCONSISTENT") << ")\n";
    return os.str();
}

std::string render_table(const MdetReport& v) {
    std::ostringstream os;
    os << "Moore determinant\n"
       << "  permutation expansion  " << to_string(v.moore) << "\n"
       << "  basic subgraphs        " << dual_cell(v.subgraphs) << "\n"
       << "  eigenvalue product     " << dual_cell(v.eigen_product) << "\n"
       << "  max deviation " << v.max_deviation << " (" << (v.consistent ? "consistent" : "INCONSISTENT") << ")\n";
    return os.str();
}

std::string render_table(const ClosedFormReport& v) {
    std::ostringstream os;
    os << v.family << " " << v.n << ", " << kind_name(v.kind) << "\n";
    for (std::size_t i = 0; i < v.closed_form.values.size(); ++i) {
        os << "  " << dual_cell(v.closed_form.values[i]) << "   eigensolver: " << dual_cell(v.eigensolver.values[i])
           << "\n";
    }
    os << "  max deviation " << v.max_deviation << " (" << (v.consistent ? "consistent" : "INCONSISTENT") << ")\n";
    return os.str();
}

std::string render_table(const CheckReport& v) {
    std::ostringstream os;
    os << v.suite << ": " << v.passed << " passed, " << v.failed << " failed of " << v.trials << " (seed " << v.seed
       << ", tol " << v.tol << ")\n";
    if (v.first_failure) {
        os << "first failure at trial " << *v.first_failure << ": " << v.detail << "\n";
        if (v.counterexample) os << *v.counterexample;
    }
    return os.str();
}

}  // namespace dugg
