#include "msep/io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include "msep/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "volume payloads are little-endian; big-endian hosts are unsupported");

namespace msep {

namespace {

[[noreturn]] void bad_format(const std::string& what, int line = -1) {
    if (line >= 0)
        throw format_error(what + " (line " + std::to_string(line) + ")");
    throw format_error(what);
}

std::string fmt_cost(double c) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", c);
    return buf;
}

struct LineReader {
    std::istream& in;
    int line = 0;

    bool next(std::string& out) {
        while (std::getline(in, out)) {
            ++line;
            if (!out.empty()) return true;
        }
        return false;
    }
    void expect(std::string& out, const std::string& what) {
        if (!next(out)) bad_format("unexpected end of file, expected " + what, line);
    }
};

}  // namespace

void write_gray_volume(std::ostream& out, const GrayVolume& volume) {
    out << "MSEPVOL gray " << volume.nx << ' ' << volume.ny << ' ' << volume.nz << '\n';
    out.write(reinterpret_cast<const char*>(volume.values.data()),
              static_cast<std::streamsize>(volume.values.size() * sizeof(double)));
}

void write_binary_volume(std::ostream& out, const BinaryVolume& volume) {
    out << "MSEPVOL bin " << volume.nx << ' ' << volume.ny << ' ' << volume.nz << '\n';
    out.write(reinterpret_cast<const char*>(volume.labels.data()),
              static_cast<std::streamsize>(volume.labels.size()));
}

namespace {

void read_volume_header(std::istream& in, const std::string& want_kind, int& nx, int& ny, int& nz) {
    std::string header;
    if (!std::getline(in, header)) bad_format("missing volume header", 1);
    std::istringstream hs(header);
    std::string magic, kind;
    if (!(hs >> magic >> kind >> nx >> ny >> nz) || magic != "MSEPVOL")
        bad_format("malformed volume header: " + header, 1);
    if (kind != want_kind) bad_format("expected a " + want_kind + " volume, found " + kind, 1);
    if (nx < 1 || ny < 1 || nz < 1) bad_format("non-positive volume dimensions", 1);
}

}  // namespace

GrayVolume read_gray_volume(std::istream& in) {
    GrayVolume v;
    read_volume_header(in, "gray", v.nx, v.ny, v.nz);
    v.values.resize(static_cast<std::size_t>(v.voxel_count()));
    in.read(reinterpret_cast<char*>(v.values.data()),
            static_cast<std::streamsize>(v.values.size() * sizeof(double)));
    if (!in) bad_format("truncated gray volume payload");
    return v;
}

BinaryVolume read_binary_volume(std::istream& in) {
    BinaryVolume v;
    read_volume_header(in, "bin", v.nx, v.ny, v.nz);
    v.labels.resize(static_cast<std::size_t>(v.voxel_count()));
    in.read(reinterpret_cast<char*>(v.labels.data()), static_cast<std::streamsize>(v.labels.size()));
    if (!in) bad_format("truncated binary volume payload");
    for (auto b : v.labels)
        if (b > 1) bad_format("binary volume byte out of range");
    return v;
}

void write_instance(std::ostream& out, const MspInstance& instance) {
    out << "MSEPINST " << instance.node_count() << ' ' << instance.graph().edge_count() << ' '
        << instance.interaction_count() << '\n';
    for (const auto& [u, v] : instance.graph().edges()) out << "e " << u << ' ' << v << '\n';
    for (NodeId v = 0; v < instance.node_count(); ++v)
        out << "n " << v << ' ' << fmt_cost(instance.node_costs()[v]) << '\n';
    for (const auto& f : instance.interactions())
        out << "i " << f.u << ' ' << f.v << ' ' << fmt_cost(f.cost) << '\n';
}

MspInstance read_instance(std::istream& in) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPINST header");
    std::istringstream hs(line);
    std::string magic;
    NodeId n = 0;
    std::int64_t n_edges = 0, n_inter = 0;
    if (!(hs >> magic >> n >> n_edges >> n_inter) || magic != "MSEPINST")
        bad_format("malformed instance header: " + line, reader.line);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::int64_t e = 0; e < n_edges; ++e) {
        reader.expect(line, "edge line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u, v;
        if (!(ls >> tag >> u >> v) || tag != "e") bad_format("malformed edge line: " + line, reader.line);
        edges.emplace_back(u, v);
    }
    std::vector<double> costs(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        reader.expect(line, "node cost line");
        std::istringstream ls(line);
        std::string tag;
        NodeId v;
        double c;
        if (!(ls >> tag >> v >> c) || tag != "n" || v < 0 || v >= n)
            bad_format("malformed node line: " + line, reader.line);
        costs[v] = c;
    }
    std::vector<Interaction> interactions;
    for (std::int64_t i = 0; i < n_inter; ++i) {
        reader.expect(line, "interaction line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u, v;
        double c;
        if (!(ls >> tag >> u >> v >> c) || tag != "i")
            bad_format("malformed interaction line: " + line, reader.line);
        interactions.push_back({u, v, c});
    }
    try {
        return MspInstance(Graph(n, std::move(edges)), std::move(interactions), std::move(costs));
    } catch (const precondition_error& e) {
        bad_format(std::string("invalid instance: ") + e.what(), reader.line);
    }
}

void write_separator(std::ostream& out, const Separator& separator) {
    out << "MSEPSEP " << separator.node_count() << ' ' << separator.size() << '\n';
    for (NodeId v : separator.members()) out << v << '\n';
}

Separator read_separator(std::istream& in) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPSEP header");
    std::istringstream hs(line);
    std::string magic;
    NodeId n = 0, k = 0;
    if (!(hs >> magic >> n >> k) || magic != "MSEPSEP")
        bad_format("malformed separator header: " + line, reader.line);
    Separator s(n);
    for (NodeId i = 0; i < k; ++i) {
        reader.expect(line, "separator member");
        NodeId v;
        std::istringstream ls(line);
        if (!(ls >> v) || v < 0 || v >= n) bad_format("bad separator member: " + line, reader.line);
        s.insert(v);
    }
    return s;
}

void write_lmp(std::ostream& out, const LmpInstance& instance) {
    out << "MSEPLMP " << instance.graph().node_count() << ' ' << instance.graph().edge_count() << ' '
        << instance.lifted().size() << '\n';
    const auto& edges = instance.graph().edges();
    for (std::size_t e = 0; e < edges.size(); ++e)
        out << "e " << edges[e].first << ' ' << edges[e].second << ' '
            << fmt_cost(instance.edge_costs()[e]) << '\n';
    for (const auto& f : instance.lifted())
        out << "l " << f.u << ' ' << f.v << ' ' << fmt_cost(f.cost) << '\n';
}

LmpInstance read_lmp(std::istream& in) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPLMP header");
    std::istringstream hs(line);
    std::string magic;
    NodeId n = 0;
    std::int64_t n_edges = 0, n_lifted = 0;
    if (!(hs >> magic >> n >> n_edges >> n_lifted) || magic != "MSEPLMP")
        bad_format("malformed lmp header: " + line, reader.line);
    std::vector<std::pair<std::pair<NodeId, NodeId>, double>> keyed;
    for (std::int64_t e = 0; e < n_edges; ++e) {
        reader.expect(line, "edge line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u, v;
        double c;
        if (!(ls >> tag >> u >> v >> c) || tag != "e") bad_format("malformed edge line: " + line, reader.line);
        if (u > v) std::swap(u, v);
        keyed.push_back({{u, v}, c});
    }
    std::vector<Interaction> lifted;
    for (std::int64_t i = 0; i < n_lifted; ++i) {
        reader.expect(line, "lifted line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u, v;
        double c;
        if (!(ls >> tag >> u >> v >> c) || tag != "l")
            bad_format("malformed lifted line: " + line, reader.line);
        lifted.push_back({u, v, c});
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& [key, cost] : keyed) edges.push_back(key);
    try {
        Graph graph(n, edges);
        std::vector<double> costs(graph.edges().size());
        for (const auto& [key, cost] : keyed) {
            const auto it = std::lower_bound(graph.edges().begin(), graph.edges().end(), key);
            costs[static_cast<std::size_t>(it - graph.edges().begin())] = cost;
        }
        return LmpInstance(std::move(graph), std::move(costs), std::move(lifted));
    } catch (const precondition_error& e) {
        bad_format(std::string("invalid lmp instance: ") + e.what(), reader.line);
    }
}

void write_qubo(std::ostream& out, const std::vector<QuboTerm>& terms, int n) {
    out << "MSEPQUBO " << n << ' ' << terms.size() << '\n';
    for (const auto& t : terms) out << "q " << t.i << ' ' << t.j << ' ' << fmt_cost(t.q) << '\n';
}

std::pair<std::vector<QuboTerm>, int> read_qubo(std::istream& in) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPQUBO header");
    std::istringstream hs(line);
    std::string magic;
    int n = 0;
    std::int64_t count = 0;
    if (!(hs >> magic >> n >> count) || magic != "MSEPQUBO")
        bad_format("malformed qubo header: " + line, reader.line);
    std::vector<QuboTerm> terms;
    for (std::int64_t i = 0; i < count; ++i) {
        reader.expect(line, "qubo term");
        std::istringstream ls(line);
        std::string tag;
        QuboTerm t;
        if (!(ls >> tag >> t.i >> t.j >> t.q) || tag != "q")
            bad_format("malformed qubo term: " + line, reader.line);
        terms.push_back(t);
    }
    return {terms, n};
}

void write_terminal_problem(std::ostream& out, const TerminalProblem& problem) {
    out << "MSEPTERM " << problem.graph.node_count() << ' ' << problem.graph.edge_count() << ' '
        << problem.terminals.size() << '\n';
    for (const auto& [u, v] : problem.graph.edges()) out << "e " << u << ' ' << v << '\n';
    for (NodeId t : problem.terminals) out << "t " << t << '\n';
    for (NodeId v = 0; v < problem.graph.node_count(); ++v)
        out << "w " << v << ' ' << fmt_cost(problem.weights[v]) << '\n';
}

TerminalProblem read_terminal_problem(std::istream& in) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPTERM header");
    std::istringstream hs(line);
    std::string magic;
    NodeId n = 0;
    std::int64_t n_edges = 0, n_terminals = 0;
    if (!(hs >> magic >> n >> n_edges >> n_terminals) || magic != "MSEPTERM")
        bad_format("malformed terminal problem header: " + line, reader.line);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::int64_t e = 0; e < n_edges; ++e) {
        reader.expect(line, "edge line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u, v;
        if (!(ls >> tag >> u >> v) || tag != "e") bad_format("malformed edge line: " + line, reader.line);
        edges.emplace_back(u, v);
    }
    TerminalProblem problem;
    for (std::int64_t t = 0; t < n_terminals; ++t) {
        reader.expect(line, "terminal line");
        std::istringstream ls(line);
        std::string tag;
        NodeId u;
        if (!(ls >> tag >> u) || tag != "t" || u < 0 || u >= n)
            bad_format("malformed terminal line: " + line, reader.line);
        problem.terminals.push_back(u);
    }
    problem.weights.assign(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
        reader.expect(line, "weight line");
        std::istringstream ls(line);
        std::string tag;
        NodeId v;
        double w;
        if (!(ls >> tag >> v >> w) || tag != "w" || v < 0 || v >= n)
            bad_format("malformed weight line: " + line, reader.line);
        problem.weights[v] = w;
    }
    try {
        problem.graph = Graph(n, std::move(edges));
    } catch (const precondition_error& e) {
        bad_format(std::string("invalid graph: ") + e.what(), reader.line);
    }
    return problem;
}

namespace {

char tri_char(Tri t) { return t == Tri::Zero ? '0' : t == Tri::One ? '1' : '*'; }

Tri parse_tri(const std::string& s, int line) {
    if (s == "0") return Tri::Zero;
    if (s == "1") return Tri::One;
    if (s == "*") return Tri::Star;
    bad_format("bad label '" + s + "'", line);
}

}  // namespace

void write_assignment(std::ostream& out, const PartialAssignment& assignment) {
    out << "MSEPPA " << assignment.node_labels.size() << ' ' << assignment.interaction_labels.size()
        << '\n';
    for (std::size_t v = 0; v < assignment.node_labels.size(); ++v)
        out << "v " << v << ' ' << tri_char(assignment.node_labels[v]) << '\n';
    for (std::size_t f = 0; f < assignment.interaction_labels.size(); ++f)
        out << "f " << f << ' ' << tri_char(assignment.interaction_labels[f]) << '\n';
}

PartialAssignment read_assignment(std::istream& in, const MspInstance& instance) {
    LineReader reader{in};
    std::string line;
    reader.expect(line, "MSEPPA header");
    std::istringstream hs(line);
    std::string magic;
    std::int64_t n = 0, m = 0;
    if (!(hs >> magic >> n >> m) || magic != "MSEPPA")
        bad_format("malformed assignment header: " + line, reader.line);
    if (n != instance.node_count() || m != instance.interaction_count())
        bad_format("assignment does not match instance dimensions", reader.line);
    PartialAssignment x = PartialAssignment::all_star(instance);
    for (std::int64_t i = 0; i < n + m; ++i) {
        reader.expect(line, "label line");
        std::istringstream ls(line);
        std::string tag, value;
        std::int64_t index;
        if (!(ls >> tag >> index >> value)) bad_format("malformed label line: " + line, reader.line);
        if (tag == "v" && index >= 0 && index < n)
            x.node_labels[index] = parse_tri(value, reader.line);
        else if (tag == "f" && index >= 0 && index < m)
            x.interaction_labels[index] = parse_tri(value, reader.line);
        else
            bad_format("malformed label line: " + line, reader.line);
    }
    return x;
}

std::vector<std::array<int, 3>> read_dimacs_cnf3(std::istream& in) {
    std::vector<std::array<int, 3>> formula;
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        if (line[0] == 'p') {
            saw_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::array<int, 3> clause{};
        int terminator = -1;
        if (!(ls >> clause[0] >> clause[1] >> clause[2] >> terminator) || terminator != 0)
            bad_format("expected three literals and a 0 terminator: " + line, line_no);
        for (int lit : clause)
            if (lit == 0) bad_format("zero literal inside clause: " + line, line_no);
        formula.push_back(clause);
    }
    if (!saw_header && formula.empty()) bad_format("empty cnf input");
    return formula;
}

namespace {

template <class T, class Reader>
T load(const std::string& path, Reader reader, bool binary) {
    std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
    if (!in) throw format_error("cannot open " + path);
    try {
        return reader(in);
    } catch (const format_error& e) {
        throw format_error(path + ": " + e.what());
    }
}

template <class T, class Writer>
void save(const std::string& path, const T& object, Writer writer, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw format_error("cannot open " + path + " for writing");
    writer(out, object);
    if (!out) throw format_error("write failed: " + path);
}

}  // namespace

GrayVolume load_gray_volume(const std::string& path) {
    return load<GrayVolume>(path, read_gray_volume, true);
}
BinaryVolume load_binary_volume(const std::string& path) {
    return load<BinaryVolume>(path, read_binary_volume, true);
}
MspInstance load_instance(const std::string& path) {
    return load<MspInstance>(path, read_instance, false);
}
Separator load_separator(const std::string& path) {
    return load<Separator>(path, read_separator, false);
}
LmpInstance load_lmp(const std::string& path) { return load<LmpInstance>(path, read_lmp, false); }

void save_gray_volume(const std::string& path, const GrayVolume& v) {
    save(path, v, write_gray_volume, true);
}
void save_binary_volume(const std::string& path, const BinaryVolume& v) {
    save(path, v, write_binary_volume, true);
}
void save_instance(const std::string& path, const MspInstance& v) {
    save(path, v, write_instance, false);
}
void save_separator(const std::string& path, const Separator& v) {
    save(path, v, write_separator, false);
}
void save_lmp(const std::string& path, const LmpInstance& v) { save(path, v, write_lmp, false); }

}  // namespace msep
