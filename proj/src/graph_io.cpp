#include "dugg/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace dugg {

using nlohmann::json;

namespace {

constexpr std::string_view kFormat = "dugg-gain-graph";
constexpr int kVersion = 1;

int line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

[[noreturn]] void structural(const std::string& what) { throw SyntaxError(0, what); }

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) structural(where + ": missing \"" + key + "\"");
    return *it;
}

int integer_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer()) structural(where + "." + key + ": expected an integer");
    return v.get<int>();
}

template <BaseRing T>
T read_components(const json& arr, const std::string& where) {
    constexpr int k = component_count<T>();
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(k)) {
        structural(where + ": expected " + std::to_string(k) + " numbers");
    }
    std::vector<double> c;
    for (const json& x : arr) {
        if (!x.is_number()) structural(where + ": expected a number");
        c.push_back(x.get<double>());
    }
    return from_components<T>(c);
}

template <BaseRing T>
GainGraph<T> read_graph(const json& doc, int n, double tol) {
    const json& edges = field(doc, "edges", "document");
    if (!edges.is_array()) structural("edges: expected an array");
    std::vector<GainEdge<T>> out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "edges[" + std::to_string(k) + "]";
        const json& e = edges[k];
        if (!e.is_object()) structural(where + ": expected an object");
        const int u = integer_field(e, "u", where);
        const int v = integer_field(e, "v", where);
        const T s = read_components<T>(field(e, "gain_std", where), where + ".gain_std");
        const T d = read_components<T>(field(e, "gain_dual", where), where + ".gain_dual");
        out.push_back({u, v, {s, d}});
    }
    return GainGraph<T>::build(n, out, tol);
}

template <BaseRing T>
json write_graph(const GainGraph<T>& g) {
    json doc = json::object();
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    doc["ring"] = ring_name(ring_of<T>);
    doc["n"] = g.order();
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"u", e.u}, {"v", e.v}, {"gain_std", components(e.gain.s)}, {"gain_dual", components(e.gain.d)}});
    }
    doc["edges"] = std::move(edges);
    return doc;
}

}  // namespace

AnyGainGraph parse_gain_graph(std::string_view text, double tol) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw SyntaxError(line_of(text, e.byte == 0 ? 0 : e.byte - 1), e.what());
    }
    if (!doc.is_object()) structural("document: expected an object");
    const json& format = field(doc, "format", "document");
    if (!format.is_string() || format.get<std::string>() != kFormat) structural("format: expected \"dugg-gain-graph\"");
    if (integer_field(doc, "version", "document") != kVersion) structural("version: unsupported");
    const json& ring = field(doc, "ring", "document");
    if (!ring.is_string()) structural("ring: expected a string");
    const int n = integer_field(doc, "n", "document");
    if (n < 0) structural("n: must be non-negative");
    switch (parse_ring(ring.get<std::string>())) {
        case Ring::real: return read_graph<double>(doc, n, tol);
        case Ring::complex: return read_graph<Complex>(doc, n, tol);
        case Ring::quaternion: return read_graph<Quaternion>(doc, n, tol);
    }
    structural("ring: unreachable");
}

std::string serialize(const AnyGainGraph& g) {
    return std::visit([](const auto& h) { return write_graph(h).dump(2); }, g) + "\n";
}

AnyGainGraph read_gain_graph_file(const std::string& path, double tol) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadParameter("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gain_graph(buf.str(), tol);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw BadParameter("cannot write '" + path + "'");
    out << text;
}

std::vector<std::pair<int, int>> random_edges(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) out.emplace_back(u, v);
    return out;
}

std::vector<std::pair<int, int>> random_connected_edges(int n, double p, Rng& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k < n; ++k) {
        const int parent = order[std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(k) - 1)(rng)];
        const int child = order[static_cast<std::size_t>(k)];
        out.emplace_back(std::min(parent, child), std::max(parent, child));
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const bool present = std::find(out.begin(), out.end(), std::pair{u, v}) != out.end();
            if (!present && coin(rng)) out.emplace_back(u, v);
        }
    }
    return out;
}

Family parse_family(std::string_view name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "complete") return Family::complete;
    if (name == "random") return Family::random;
    throw BadParameter("unknown family '" + std::string(name) + "'");
}

namespace {

template <BaseRing T>
GainGraph<T> generate_typed(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph<T>(spec.n);
        case Family::cycle: return cycle_graph<T>(spec.n, spec.gain.widen(ring_of<T>).template as<T>());
        case Family::complete: return complete_graph<T>(spec.n);
        case Family::random: return random_gain_graph<T>(spec.n, spec.p, spec.seed);
    }
    throw BadParameter("unknown family");
}

}  // namespace

AnyGainGraph generate(const FamilySpec& spec) {
    if (static_cast<int>(spec.gain.ring()) > static_cast<int>(spec.ring)) {
        throw BadParameter("gain needs a wider ring than " + std::string(ring_name(spec.ring)));
    }
    switch (spec.ring) {
        case Ring::real: return generate_typed<double>(spec);
        case Ring::complex: return generate_typed<Complex>(spec);
        case Ring::quaternion: return generate_typed<Quaternion>(spec);
    }
    throw BadParameter("unknown ring");
}

}  // namespace dugg
