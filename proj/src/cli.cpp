#include "dugg/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dugg/checks.hpp"
#include "dugg/moore.hpp"
#include "dugg/report.hpp"

namespace dugg {

namespace {

struct Options {
    std::string file;
    std::string matrix = "adjacency";
    std::string format = "table";
    std::string out;
    std::string ring = "complex";
    std::string gain = "1";
    std::string family;
    std::string suite;
    std::vector<int> deleted;
    std::optional<double> tol;
    double p = 0.5;
    int n = 0;
    int trials = 100;
    std::uint64_t seed = 0;
};

struct Emitted {
    std::string text;
    bool ok = true;
};

template <class Report>
Emitted emit(const Report& r, const Options& o, bool ok = true) {
    if (o.format == "json") return {nlohmann::json(r).dump(2) + "\n", ok};
    return {render_table(r), ok};
}

AnyGainGraph load(const Options& o) { return read_gain_graph_file(o.file); }

Emitted cmd_spectrum(const Options& o) {
    const MatrixKind kind = parse_kind(o.matrix);
    return emit(std::visit([&](const auto& g) { return spectrum(g, kind); }, load(o)), o);
}

Emitted cmd_balance(const Options& o) {
    const double tol = o.tol.value_or(kGainTol);
    return emit(std::visit([&](const auto& g) { return make_balance_report(g, tol); }, load(o)), o);
}

Emitted cmd_radius(const Options& o) {
    RadiusOptions opt;
    if (o.tol) opt.bound_tol = *o.tol;
    const MatrixKind kind = parse_kind(o.matrix);
    const RadiusReport r = std::visit([&](const auto& g) { return radius_report(g, kind, opt); }, load(o));
    return emit(r, o, r.bound_holds && r.consistent);
}

Emitted cmd_interlace(const Options& o) {
    const double tol = o.tol.value_or(1e-9);
    const MatrixKind kind = parse_kind(o.matrix);
    const InterlaceChainReport r =
        std::visit([&](const auto& g) { return interlace_chain(g, o.deleted, kind, tol); }, load(o));
    return emit(r, o, r.holds);
}

Emitted cmd_charpoly(const Options& o) {
    const double tol = o.tol.value_or(1e-8);
    const CharPolyReport r = std::visit([&](const auto& g) { return charpoly_report(g, tol); }, load(o));
    return emit(r, o, r.consistent);
}

Emitted cmd_mdet(const Options& o) {
    const double tol = o.tol.value_or(1e-8);
    const MdetReport r = std::visit(
        [&](const auto& g) {
            return make_mdet_report(DualScalar(moore_determinant(adjacency_matrix(g))), mdet_via_subgraphs(g),
                                    spectrum(g, MatrixKind::adjacency).values, tol);
        },
        load(o));
    return emit(r, o, r.consistent);
}

Emitted closed_form(const Options& o, Family family) {
    FamilySpec spec;
    spec.family = family;
    spec.n = o.n;
    spec.ring = parse_ring(o.ring);
    spec.gain = parse_dual_scalar(o.gain);
    const MatrixKind kind = parse_kind(o.matrix);
    ClosedFormReport r;
    r.family = family == Family::cycle ? "cycle" : "path";
    r.n = o.n;
    r.kind = kind;
    std::visit(
        [&](const auto& g) {
            using T = typename std::decay_t<decltype(g)>::Scalar;
            r.closed_form = family == Family::cycle
                                ? cycle_spectrum_closed_form(o.n, spec.gain.widen(ring_of<T>).template as<T>(), kind)
                                : path_spectrum_closed_form(o.n, kind);
            r.eigensolver = spectrum(g, kind);
        },
        generate(spec));
    r.max_deviation = max_spectrum_deviation(r.closed_form, r.eigensolver);
    r.consistent = r.max_deviation <= o.tol.value_or(1e-9);
    return emit(r, o, r.consistent);
}

Emitted cmd_check(const Options& o) {
    const CheckReport r = run_check(o.suite, o.trials, o.seed, o.tol.value_or(default_check_tol(o.suite)));
    return emit(r, o, r.failed == 0);
}

Emitted cmd_generate(const Options& o) {
    FamilySpec spec;
    spec.family = parse_family(o.family);
    spec.n = o.n;
    spec.ring = parse_ring(o.ring);
    spec.gain = parse_dual_scalar(o.gain);
    spec.p = o.p;
    spec.seed = o.seed;
    return {serialize(generate(spec)), true};
}

template <BaseRing To, BaseRing From>
GainGraph<To> widen_graph(const GainGraph<From>& g) {
    std::vector<GainEdge<To>> edges;
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v, DualScalar(e.gain).widen(ring_of<To>).template as<To>()});
    return GainGraph<To>::build(g.order(), edges, 1.0);
}

Emitted cmd_convert(const Options& o, bool ring_given) {
    AnyGainGraph g = load(o);
    if (ring_given) {
        const Ring target = parse_ring(o.ring);
        if (static_cast<int>(target) < static_cast<int>(graph_ring(g))) {
            throw BadParameter("cannot narrow a " + std::string(ring_name(graph_ring(g))) + " graph to " +
                               std::string(ring_name(target)));
        }
        g = std::visit(
            [&](const auto& h) -> AnyGainGraph {
                switch (target) {
                    case Ring::real: return widen_graph<double>(h);
                    case Ring::complex: return widen_graph<Complex>(h);
                    case Ring::quaternion: return widen_graph<Quaternion>(h);
                }
                throw BadParameter("unknown ring");
            },
            g);
    }
    return {serialize(g), true};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, balance and determinants of dual unit gain graphs"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::string> kinds{"adjacency", "laplacian"};
    const std::vector<std::string> formats{"table", "json"};
    const std::vector<std::string> rings{"real", "complex", "quaternion"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember(formats));
        sub->add_option("--out", o.out, "write the report to this file");
        sub->add_option("--tol", o.tol, "comparison tolerance");
    };
    auto with_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "gain graph file")->required();
        common(sub);
    };
    auto with_matrix = [&](CLI::App* sub) {
        sub->add_option("--matrix", o.matrix, "adjacency or laplacian")->check(CLI::IsMember(kinds));
    };

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues in decreasing dual order");
    with_file(spectrum_cmd);
    with_matrix(spectrum_cmd);
    CLI::App* balance_cmd = app.add_subcommand("balance", "potential function or a witness cycle");
    with_file(balance_cmd);
    CLI::App* radius_cmd = app.add_subcommand("radius", "spectral radius against the underlying graph");
    with_file(radius_cmd);
    with_matrix(radius_cmd);
    CLI::App* interlace_cmd = app.add_subcommand("interlace", "interlacing along a vertex-deletion chain");
    with_file(interlace_cmd);
    with_matrix(interlace_cmd);
    interlace_cmd->add_option("--delete", o.deleted, "vertices to delete, in order (default n-1 down to 1)")
        ->delimiter(',');
    CLI::App* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial from basic subgraphs");
    with_file(charpoly_cmd);
    CLI::App* mdet_cmd = app.add_subcommand("mdet", "Moore determinant three ways");
    with_file(mdet_cmd);

    CLI::App* cycle_cmd = app.add_subcommand("cycle", "closed-form cycle spectrum next to the eigensolver");
    cycle_cmd->add_option("n", o.n, "number of vertices")->required();
    cycle_cmd->add_option("--gain", o.gain, "gain of the walk around the cycle, e.g. \"(0.7071-0.7071i) + (0.7071+0.7071i)*eps\"");
    CLI::App* path_cmd = app.add_subcommand("path", "closed-form path spectrum next to the eigensolver");
    path_cmd->add_option("n", o.n, "number of vertices")->required();
    for (CLI::App* sub : {cycle_cmd, path_cmd}) {
        common(sub);
        with_matrix(sub);
        sub->add_option("--ring", o.ring, "base ring")->check(CLI::IsMember(rings));
    }

    CLI::App* check_cmd = app.add_subcommand("check", "randomized property suite");
    check_cmd->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(check_suites()));
    check_cmd->add_option("--trials", o.trials, "number of random instances");
    check_cmd->add_option("--seed", o.seed, "random seed");
    common(check_cmd);

    CLI::App* generate_cmd = app.add_subcommand("generate", "write a graph from a named family");
    generate_cmd->add_option("family", o.family, "path, cycle, complete or random")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "complete", "random"}));
    generate_cmd->add_option("n", o.n, "number of vertices")->required();
    generate_cmd->add_option("--gain", o.gain, "closing gain of a cycle");
    generate_cmd->add_option("--p", o.p, "edge probability for random graphs");
    generate_cmd->add_option("--seed", o.seed, "random seed");
    generate_cmd->add_option("--ring", o.ring, "base ring")->check(CLI::IsMember(rings));
    generate_cmd->add_option("--out", o.out, "output file");

    CLI::App* convert_cmd = app.add_subcommand("convert", "re-serialize a graph, optionally over a wider ring");
    convert_cmd->add_option("file", o.file, "gain graph file")->required();
    CLI::Option* convert_ring = convert_cmd->add_option("--ring", o.ring, "target ring")->check(CLI::IsMember(rings));
    convert_cmd->add_option("--out", o.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        Emitted result;
        if (*spectrum_cmd) result = cmd_spectrum(o);
        else if (*balance_cmd) result = cmd_balance(o);
        else if (*radius_cmd) result = cmd_radius(o);
        else if (*interlace_cmd) result = cmd_interlace(o);
        else if (*charpoly_cmd) result = cmd_charpoly(o);
        else if (*mdet_cmd) result = cmd_mdet(o);
        else if (*cycle_cmd) result = closed_form(o, Family::cycle);
        else if (*path_cmd) result = closed_form(o, Family::path);
        else if (*check_cmd) result = cmd_check(o);
        else if (*generate_cmd) result = cmd_generate(o);
        else if (*convert_cmd) result = cmd_convert(o, convert_ring->count() > 0);

        if (o.out.empty()) out << result.text;
        else write_text_file(o.out, result.text);
        return result.ok ? kExitOk : kExitViolation;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

}  // namespace dugg
