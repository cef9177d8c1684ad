#include "spheredeg/genus_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

GenusGraph::GenusGraph(std::vector<GraphVertex> vertices, std::vector<GraphEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.end_a > e.end_b) std::swap(e.end_a, e.end_b);
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        vertex_index_.emplace(vertices_[i].id, i);
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        edge_index_.emplace(edges_[i].id, i);
    }
}

bool GenusGraph::has_vertex(int id) const { return vertex_index_.count(id) > 0; }

bool GenusGraph::has_edge(int id) const { return edge_index_.count(id) > 0; }

const GraphVertex& GenusGraph::vertex(int id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) {
        throw Error("no vertex with id " + std::to_string(id));
    }
    return vertices_[it->second];
}

const GraphEdge& GenusGraph::edge(int id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) {
        throw NoSuchEdgeError("no edge with id " + std::to_string(id));
    }
    return edges_[it->second];
}

std::optional<int> GenusGraph::basepoint_id() const {
    std::optional<int> found;
    for (const auto& v : vertices_) {
        if (!v.basepoint) continue;
        if (found) return std::nullopt;
        found = v.id;
    }
    return found;
}

bool GenusGraph::operator==(const GenusGraph& other) const {
    if (vertices_.size() != other.vertices_.size()) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& a = vertices_[i];
        const auto& b = other.vertices_[i];
        if (a.id != b.id || a.genus != b.genus || a.basepoint != b.basepoint) return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& a = edges_[i];
        const auto& b = other.edges_[i];
        if (a.id != b.id || a.end_a != b.end_a || a.end_b != b.end_b) return false;
    }
    return true;
}

GenusGraph make_rose(int basepoint_genus, int loops) {
    std::vector<GraphVertex> vs{{0, basepoint_genus, true}};
    std::vector<GraphEdge> es;
    for (int i = 0; i < loops; ++i) es.push_back({i, 0, 0});
    return GenusGraph(std::move(vs), std::move(es));
}

namespace {

std::map<int, int> raw_valences(const GenusGraph& g) {
    std::map<int, int> val;
    for (const auto& v : g.vertices()) val[v.id] = 0;
    for (const auto& e : g.edges()) {
        val[e.end_a] += 1;
        val[e.end_b] += 1;  // a loop contributes 2 to its vertex
    }
    return val;
}

bool is_connected(const GenusGraph& g) {
    if (g.vertices().empty()) return false;
    std::map<int, std::vector<int>> adj;
    for (const auto& v : g.vertices()) adj[v.id];
    for (const auto& e : g.edges()) {
        adj[e.end_a].push_back(e.end_b);
        adj[e.end_b].push_back(e.end_a);
    }
    std::set<int> seen{g.vertices().front().id};
    std::queue<int> work;
    work.push(g.vertices().front().id);
    while (!work.empty()) {
        int cur = work.front();
        work.pop();
        for (int nb : adj[cur]) {
            if (seen.insert(nb).second) work.push(nb);
        }
    }
    return seen.size() == g.vertices().size();
}

}  // namespace

void require_valid(const GenusGraph& g, const char* op) {
    ValidationReport report = validate_graph(g);
    if (report.ok()) return;
    std::ostringstream msg;
    msg << op << " requires a valid graph; first violation: "
        << report.violations.front().rule << " (" << report.violations.front().detail << ")";
    throw InvalidGraphError(msg.str());
}

ValidationReport validate_graph(const GenusGraph& g) {
    ValidationReport report;
    if (g.vertices().empty()) {
        report.add("no-vertices", "graph has no vertices");
        return report;
    }

    bool structural_ok = true;
    std::set<int> vertex_ids;
    for (const auto& v : g.vertices()) {
        if (!vertex_ids.insert(v.id).second) {
            report.add("duplicate-vertex-id", "vertex id " + std::to_string(v.id));
            structural_ok = false;
        }
        if (v.genus < 0) {
            report.add("negative-genus", "vertex " + std::to_string(v.id));
        }
    }
    std::set<int> edge_ids;
    for (const auto& e : g.edges()) {
        if (!edge_ids.insert(e.id).second) {
            report.add("duplicate-edge-id", "edge id " + std::to_string(e.id));
            structural_ok = false;
        }
        if (!vertex_ids.count(e.end_a) || !vertex_ids.count(e.end_b)) {
            report.add("dangling-edge", "edge " + std::to_string(e.id));
            structural_ok = false;
        }
    }
    if (!structural_ok) return report;

    int basepoints = 0;
    for (const auto& v : g.vertices()) basepoints += v.basepoint ? 1 : 0;
    if (basepoints != 1) {
        report.add("basepoint-count", "expected exactly 1 basepoint, found " + std::to_string(basepoints));
    }

    if (!is_connected(g)) {
        report.add("disconnected", "graph is not connected");
    }

    auto val = raw_valences(g);
    int total_genus = 0;
    for (const auto& v : g.vertices()) {
        total_genus += v.genus;
        if (v.basepoint) continue;
        // A complementary piece with too little topology would give a sphere
        // configuration that is not reduced, so every non-basepoint vertex
        // needs valence + 2 genus >= 3.
        if (val[v.id] + 2 * v.genus < 3) {
            report.add("thin-vertex", "vertex " + std::to_string(v.id) + " has valence " +
                                          std::to_string(val[v.id]) + " and genus " +
                                          std::to_string(v.genus));
        }
    }

    if (basepoints == 1) {
        auto bp = g.basepoint_id();
        const auto& b = g.vertex(*bp);
        // A genus-0 valence-1 basepoint piece lies between the boundary
        // sphere and a single system sphere, making that sphere
        // boundary-parallel; such systems are excluded.
        if (b.genus == 0 && val[b.id] == 1 && g.vertices().size() >= 2) {
            report.add("boundary-parallel-basepoint",
                       "basepoint " + std::to_string(b.id) + " has genus 0 and valence 1");
        }
    }

    int rank = static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
    if (total_genus + rank < 1) {
        report.add("trivial-ambient", "total genus + rank is " + std::to_string(total_genus + rank));
    }
    return report;
}

GraphStats graph_stats(const GenusGraph& g) {
    require_valid(g, "graph_stats");
    GraphStats stats;
    stats.valences = raw_valences(g);
    for (const auto& v : g.vertices()) stats.total_genus += v.genus;
    stats.rank_pi1 = static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + 1;
    stats.n = stats.total_genus + stats.rank_pi1;
    stats.dim = static_cast<int>(g.edges().size()) - 1;
    return stats;
}

int degree(const GenusGraph& g) {
    require_valid(g, "degree");
    auto val = raw_valences(g);
    int deg = 0;
    for (const auto& v : g.vertices()) {
        if (v.basepoint) continue;
        deg += val[v.id] + 2 * v.genus - 2;
    }
    return deg;
}

GenusGraph collapse_edge(const GenusGraph& g, int edge_id) {
    require_valid(g, "collapse_edge");
    const GraphEdge collapsed = g.edge(edge_id);

    std::vector<GraphVertex> vs;
    std::vector<GraphEdge> es;
    if (collapsed.is_loop()) {
        for (const auto& v : g.vertices()) {
            GraphVertex copy = v;
            if (v.id == collapsed.end_a) copy.genus += 1;
            vs.push_back(copy);
        }
        for (const auto& e : g.edges()) {
            if (e.id != edge_id) es.push_back(e);
        }
        return GenusGraph(std::move(vs), std::move(es));
    }

    const GraphVertex& u = g.vertex(collapsed.end_a);
    const GraphVertex& w = g.vertex(collapsed.end_b);
    int keep = u.id;
    if (w.basepoint) {
        keep = w.id;
    } else if (!u.basepoint) {
        keep = std::min(u.id, w.id);
    }
    int gone = (keep == u.id) ? w.id : u.id;

    for (const auto& v : g.vertices()) {
        if (v.id == gone) continue;
        GraphVertex copy = v;
        if (v.id == keep) {
            copy.genus = u.genus + w.genus;
            copy.basepoint = u.basepoint || w.basepoint;
        }
        vs.push_back(copy);
    }
    for (const auto& e : g.edges()) {
        if (e.id == edge_id) continue;
        GraphEdge copy = e;
        if (copy.end_a == gone) copy.end_a = keep;
        if (copy.end_b == gone) copy.end_b = keep;
        if (copy.end_a > copy.end_b) std::swap(copy.end_a, copy.end_b);
        es.push_back(copy);
    }
    return GenusGraph(std::move(vs), std::move(es));
}

std::set<int> pillar_edges(const GenusGraph& g) {
    require_valid(g, "pillar_edges");
    int bp = *g.basepoint_id();
    std::set<int> out;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) continue;
        if (e.end_a == bp || e.end_b == bp) out.insert(e.id);
    }
    return out;
}

bool is_pillar(const GenusGraph& g) {
    return pillar_edges(g).size() == g.edges().size();
}

GenusGraph pillar_graph(const GenusGraph& g) {
    GenusGraph cur = g;
    for (;;) {
        std::set<int> pillars = pillar_edges(cur);
        int next = -1;
        for (const auto& e : cur.edges()) {
            if (!pillars.count(e.id)) {
                next = e.id;
                break;
            }
        }
        if (next < 0) return cur;
        cur = collapse_edge(cur, next);
    }
}

namespace {

// Invariants of a non-basepoint vertex preserved by basepoint-fixing
// isomorphisms; only vertices sharing a key may trade places.
struct VertexKey {
    int genus = 0;
    int valence = 0;
    int loops = 0;
    int to_basepoint = 0;

    auto tie() const { return std::tie(genus, valence, loops, to_basepoint); }
    bool operator<(const VertexKey& other) const { return tie() < other.tie(); }
    bool operator==(const VertexKey& other) const { return tie() == other.tie(); }
};

std::vector<std::pair<int, int>> encode_edges(const GenusGraph& g,
                                              const std::map<int, int>& pos) {
    std::vector<std::pair<int, int>> enc;
    enc.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        int a = pos.at(e.end_a);
        int b = pos.at(e.end_b);
        enc.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(enc.begin(), enc.end());
    return enc;
}

}  // namespace

std::string canonical_form(const GenusGraph& g) {
    require_valid(g, "canonical_form");
    int bp = *g.basepoint_id();
    auto val = raw_valences(g);

    std::map<int, VertexKey> keys;
    for (const auto& v : g.vertices()) {
        if (v.id == bp) continue;
        keys[v.id] = {v.genus, val[v.id], 0, 0};
    }
    for (const auto& e : g.edges()) {
        if (e.is_loop()) {
            if (e.end_a != bp) keys[e.end_a].loops += 1;
        } else if (e.end_a == bp && keys.count(e.end_b)) {
            keys[e.end_b].to_basepoint += 1;
        } else if (e.end_b == bp && keys.count(e.end_a)) {
            keys[e.end_a].to_basepoint += 1;
        }
    }

    // Group non-basepoint vertices by key; the group sequence is ordering-
    // independent, and minimizing over within-group permutations makes the
    // encoding a complete isomorphism invariant.
    std::map<VertexKey, std::vector<int>> groups;
    for (const auto& [id, key] : keys) groups[key].push_back(id);
    std::vector<std::vector<int>> perms;
    for (auto& [key, ids] : groups) {
        std::sort(ids.begin(), ids.end());
        perms.push_back(ids);
    }

    std::vector<int> genus_seq{g.vertex(bp).genus};
    for (const auto& perm : perms) {
        for (int id : perm) genus_seq.push_back(g.vertex(id).genus);
    }

    std::vector<std::pair<int, int>> best;
    bool have_best = false;
    for (;;) {
        std::map<int, int> pos{{bp, 0}};
        int next = 1;
        for (const auto& perm : perms) {
            for (int id : perm) pos[id] = next++;
        }
        auto enc = encode_edges(g, pos);
        if (!have_best || enc < best) {
            best = std::move(enc);
            have_best = true;
        }
        // Advance the odometer of per-group permutations.
        std::size_t i = 0;
        while (i < perms.size() && !std::next_permutation(perms[i].begin(), perms[i].end())) {
            ++i;  // perms[i] rolled over to sorted order; carry to the next group
        }
        if (i == perms.size()) break;
    }

    std::ostringstream out;
    out << "g:";
    for (std::size_t i = 0; i < genus_seq.size(); ++i) {
        if (i) out << ",";
        out << genus_seq[i];
    }
    out << "|e:";
    for (std::size_t i = 0; i < best.size(); ++i) {
        if (i) out << ",";
        out << best[i].first << "-" << best[i].second;
    }
    return out.str();
}

GenusGraph graph_from_canonical(const std::string& form) {
    auto bar = form.find("|e:");
    if (form.rfind("g:", 0) != 0 || bar == std::string::npos) {
        throw SchemaError("malformed canonical form: " + form);
    }
    std::string genus_part = form.substr(2, bar - 2);
    std::string edge_part = form.substr(bar + 3);

    std::vector<GraphVertex> vs;
    std::stringstream gs(genus_part);
    std::string tok;
    while (std::getline(gs, tok, ',')) {
        GraphVertex v;
        v.id = static_cast<int>(vs.size());
        v.genus = std::stoi(tok);
        v.basepoint = vs.empty();
        vs.push_back(v);
    }
    std::vector<GraphEdge> es;
    std::stringstream es_in(edge_part);
    while (std::getline(es_in, tok, ',')) {
        auto dash = tok.find('-');
        if (dash == std::string::npos) throw SchemaError("malformed canonical edge: " + tok);
        GraphEdge e;
        e.id = static_cast<int>(es.size());
        e.end_a = std::stoi(tok.substr(0, dash));
        e.end_b = std::stoi(tok.substr(dash + 1));
        es.push_back(e);
    }
    return GenusGraph(std::move(vs), std::move(es));
}

}  // namespace spheredeg
