#include "spheredeg/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

void check_caps(int n, int d, const EnumerationLimits& limits) {
    if (limits.override_caps) return;
    if (n + d > limits.max_n_plus_d) {
        std::ostringstream msg;
        msg << "n + max_degree = " << n + d << " exceeds cap " << limits.max_n_plus_d
            << "; rerun with the cap override to proceed";
        throw ResourceLimitError(msg.str());
    }
}

// Nonincreasing positive vectors (c_1 >= ... >= c_k >= 1) with sum <= budget.
void degree_splits(int k, int budget, int max_part, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    int remaining_slots = k - static_cast<int>(cur.size());
    for (int part = std::min(max_part, budget - (remaining_slots - 1)); part >= 1; --part) {
        cur.push_back(part);
        degree_splits(k, budget - part, part, cur, out);
        cur.pop_back();
    }
}

struct VertexShape {
    int genus = 0;
    int valence = 0;
};

// All (genus, valence) pairs realizing contribution c = valence + 2 genus - 2.
std::vector<VertexShape> shapes_for_contribution(int c) {
    std::vector<VertexShape> out;
    for (int genus = 0; 2 * genus <= c + 1; ++genus) {
        int valence = c + 2 - 2 * genus;
        if (valence >= 1) out.push_back({genus, valence});
    }
    return out;
}

struct SlotState {
    // Slot i covers either a loop (a == b) or a vertex pair (a < b);
    // counts[i] is the multiplicity assigned so far.
    std::vector<std::pair<int, int>> slots;
    std::vector<int> counts;
};

bool slots_connected(const SlotState& state, int vertex_count) {
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < state.slots.size(); ++i) {
        auto [a, b] = state.slots[i];
        if (a != b && state.counts[i] > 0) parent[find(a)] = find(b);
    }
    int root = find(0);
    for (int v = 1; v < vertex_count; ++v) {
        if (find(v) != root) return false;
    }
    return true;
}

GenusGraph graph_from_slots(const SlotState& state, int basepoint_genus,
                            const std::vector<int>& leaf_genus) {
    std::vector<GraphVertex> vs;
    vs.push_back({0, basepoint_genus, true});
    for (std::size_t i = 0; i < leaf_genus.size(); ++i) {
        vs.push_back({static_cast<int>(i) + 1, leaf_genus[i], false});
    }
    std::vector<GraphEdge> es;
    for (std::size_t i = 0; i < state.slots.size(); ++i) {
        for (int copy = 0; copy < state.counts[i]; ++copy) {
            es.push_back({static_cast<int>(es.size()), state.slots[i].first,
                          state.slots[i].second});
        }
    }
    return GenusGraph(std::move(vs), std::move(es));
}

// Fills slot multiplicities so each vertex v ends with exactly target[v]
// valence (loops consume 2), emitting every solution.
void fill_slots(SlotState& state, std::size_t slot_index, std::vector<int>& remaining,
                const std::function<void(const SlotState&)>& emit) {
    if (slot_index == state.slots.size()) {
        for (int rem : remaining) {
            if (rem != 0) return;
        }
        emit(state);
        return;
    }
    auto [a, b] = state.slots[slot_index];
    // The cap keeps every remaining valence nonnegative; leftover valence is
    // rejected at the leaf. Search spaces stay tiny at this scale.
    int cap = (a == b) ? remaining[a] / 2 : std::min(remaining[a], remaining[b]);
    for (int m = 0; m <= cap; ++m) {
        state.counts[slot_index] = m;
        int use = (a == b) ? 2 * m : m;
        remaining[a] -= use;
        if (a != b) remaining[b] -= m;
        fill_slots(state, slot_index + 1, remaining, emit);
        remaining[a] += use;
        if (a != b) remaining[b] += m;
    }
    state.counts[slot_index] = 0;
}

}  // namespace

std::vector<GenusGraph> enumerate_types(const EnumerationRequest& request,
                                        const EnumerationLimits& limits) {
    if (request.n < 1) throw SchemaError("enumeration requires n >= 1");
    if (request.max_degree < 0) throw SchemaError("enumeration requires max_degree >= 0");
    check_caps(request.n, request.max_degree, limits);

    const int n = request.n;
    const int d = request.max_degree;
    std::set<std::string> seen;

    // Roses: the only types without non-basepoint vertices.
    for (int loops = request.include_empty ? 0 : 1; loops <= n; ++loops) {
        seen.insert(canonical_form(make_rose(n - loops, loops)));
    }

    // k non-basepoint vertices contribute >= 1 each to the degree.
    for (int k = 1; k <= d; ++k) {
        std::vector<std::vector<int>> splits;
        std::vector<int> cur;
        degree_splits(k, d, d, cur, splits);
        for (const auto& split : splits) {
            std::vector<std::vector<VertexShape>> options;
            for (int c : split) options.push_back(shapes_for_contribution(c));

            std::vector<std::size_t> pick(k, 0);
            for (;;) {
                std::vector<int> leaf_genus(k);
                std::vector<int> leaf_valence(k);
                int genus_sum = 0;
                int valence_sum = 0;
                for (int i = 0; i < k; ++i) {
                    leaf_genus[i] = options[i][pick[i]].genus;
                    leaf_valence[i] = options[i][pick[i]].valence;
                    genus_sum += leaf_genus[i];
                    valence_sum += leaf_valence[i];
                }

                for (int g0 = 0; g0 + genus_sum <= n; ++g0) {
                    int rank = n - g0 - genus_sum;
                    int edge_count = k + rank;
                    int basepoint_valence = 2 * edge_count - valence_sum;
                    if (basepoint_valence < 1) continue;
                    if (g0 == 0 && basepoint_valence == 1) continue;

                    SlotState state;
                    for (int i = 0; i <= k; ++i) state.slots.emplace_back(i, i);
                    for (int i = 0; i <= k; ++i) {
                        for (int j = i + 1; j <= k; ++j) state.slots.emplace_back(i, j);
                    }
                    state.counts.assign(state.slots.size(), 0);

                    std::vector<int> remaining(k + 1);
                    remaining[0] = basepoint_valence;
                    for (int i = 0; i < k; ++i) remaining[i + 1] = leaf_valence[i];

                    fill_slots(state, 0, remaining, [&](const SlotState& done) {
                        if (!slots_connected(done, k + 1)) return;
                        GenusGraph g = graph_from_slots(done, g0, leaf_genus);
                        auto report = validate_graph(g);
                        if (!report.ok()) {
                            throw Error("enumeration produced an invalid graph: " +
                                        report.violations.front().rule);
                        }
                        seen.insert(canonical_form(g));
                    });
                }

                // Advance the shape odometer.
                int idx = k - 1;
                while (idx >= 0 && ++pick[idx] == options[idx].size()) {
                    pick[idx] = 0;
                    --idx;
                }
                if (idx < 0) break;
            }
        }
    }

    std::vector<GenusGraph> out;
    out.reserve(seen.size());
    for (const auto& form : seen) out.push_back(graph_from_canonical(form));
    std::sort(out.begin(), out.end(), [](const GenusGraph& a, const GenusGraph& b) {
        auto key = [](const GenusGraph& g) {
            return std::tuple<std::size_t, int, std::string>(g.edges().size(), degree(g),
                                                             canonical_form(g));
        };
        return key(a) < key(b);
    });
    return out;
}

namespace {

void record(VerificationReport& report, const std::string& text) {
    report.counterexamples.push_back(text);
}

// Terminal type reached by exhaustively collapsing non-pillar edges in every
// order; records a counterexample if two orders disagree.
std::string confluent_terminal(const GenusGraph& g, std::map<std::string, std::string>& memo,
                               VerificationReport& report) {
    std::string form = canonical_form(g);
    auto it = memo.find(form);
    if (it != memo.end()) return it->second;

    auto pillars = pillar_edges(g);
    std::string result;
    bool found = false;
    for (const auto& e : g.edges()) {
        if (pillars.count(e.id)) continue;
        std::string terminal = confluent_terminal(collapse_edge(g, e.id), memo, report);
        if (!found) {
            result = terminal;
            found = true;
        } else if (terminal != result) {
            record(report, "collapse order diverges from " + form + ": " + terminal +
                               " vs " + result);
        }
    }
    if (!found) result = form;
    memo.emplace(form, result);
    return result;
}

void run_collapse_lemma(VerificationReport& report, int n_max, int d_max,
                        const EnumerationLimits& limits) {
    for (int n = 1; n <= n_max; ++n) {
        auto types = enumerate_types({n, d_max, true}, limits);
        std::set<std::string> universe;
        for (const auto& g : types) universe.insert(canonical_form(g));
        for (const auto& g : types) {
            report.instances_checked += 1;
            int deg = degree(g);
            auto pillars = pillar_edges(g);
            for (const auto& e : g.edges()) {
                report.checks_performed += 1;
                GenusGraph h = collapse_edge(g, e.id);
                std::string at = canonical_form(g) + " edge " + std::to_string(e.id);
                auto validity = validate_graph(h);
                if (!validity.ok()) {
                    record(report, "collapse not valid at " + at);
                    continue;
                }
                int deg_h = degree(h);
                bool is_pillar_edge = pillars.count(e.id) > 0;
                if (is_pillar_edge && deg_h >= deg) {
                    record(report, "pillar collapse did not lower degree at " + at);
                }
                if (!is_pillar_edge && deg_h != deg) {
                    record(report, "non-pillar collapse changed degree at " + at);
                }
                if (graph_stats(h).n != n) {
                    record(report, "collapse changed n at " + at);
                }
                if (!universe.count(canonical_form(h))) {
                    record(report, "collapse left the enumerated family at " + at);
                }
            }
        }
    }
}

void run_pillar_identity(VerificationReport& report, int n_max, int d_max,
                         const EnumerationLimits& limits) {
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::string, std::string> memo;
        for (const auto& g : enumerate_types({n, d_max, true}, limits)) {
            report.instances_checked += 1;
            report.checks_performed += 1;
            GenusGraph pg = pillar_graph(g);
            if (degree(pg) != degree(g)) {
                record(report, "pillar graph changed degree at " + canonical_form(g));
            }
            if (!is_pillar(pg)) {
                record(report, "pillar graph kept a non-pillar edge at " + canonical_form(g));
            }
            if (canonical_form(pillar_graph(pg)) != canonical_form(pg)) {
                record(report, "pillar graph is not a fixed point at " + canonical_form(g));
            }
            if (g.edges().size() <= 5) {
                report.checks_performed += 1;
                std::string terminal = confluent_terminal(g, memo, report);
                if (terminal != canonical_form(pg)) {
                    record(report, "pillar graph differs from collapse terminal at " +
                                       canonical_form(g));
                }
            }
        }
    }
}

void run_rank_identity(VerificationReport& report, int n_max, int d_max,
                       const EnumerationLimits& limits) {
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& g : enumerate_types({n, d_max, true}, limits)) {
            report.instances_checked += 1;
            auto stats = graph_stats(g);
            if (stats.n != n || stats.total_genus + stats.rank_pi1 != n) {
                record(report, "stats disagree with n at " + canonical_form(g));
            }
            for (const auto& e : g.edges()) {
                report.checks_performed += 1;
                auto collapsed_stats = graph_stats(collapse_edge(g, e.id));
                if (collapsed_stats.total_genus + collapsed_stats.rank_pi1 != n) {
                    record(report, "collapse changed total genus + rank at " +
                                       canonical_form(g) + " edge " + std::to_string(e.id));
                }
            }
        }
    }
}

void run_degree_zero_roses(VerificationReport& report, int n_max,
                           const EnumerationLimits& limits) {
    for (int n = 1; n <= n_max; ++n) {
        auto types = enumerate_types({n, 0, false}, limits);
        report.checks_performed += 1;
        if (static_cast<int>(types.size()) != n) {
            record(report, "expected " + std::to_string(n) + " degree-0 types for n=" +
                               std::to_string(n) + ", found " + std::to_string(types.size()));
        }
        std::set<int> loop_counts;
        for (const auto& g : types) {
            report.instances_checked += 1;
            if (g.vertices().size() != 1 || degree(g) != 0) {
                record(report, "degree-0 type is not a rose: " + canonical_form(g));
                continue;
            }
            int loops = static_cast<int>(g.edges().size());
            if (g.vertex(0).genus + loops != n) {
                record(report, "rose invariant mismatch: " + canonical_form(g));
            }
            loop_counts.insert(loops);
        }
        if (static_cast<int>(loop_counts.size()) != static_cast<int>(types.size())) {
            record(report, "duplicate rose loop count at n=" + std::to_string(n));
        }
    }
}

void run_pillar_arithmetic(VerificationReport& report, int n_max, int d_max,
                           const EnumerationLimits& limits) {
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& g : enumerate_types({n, d_max, true}, limits)) {
            if (!is_pillar(g)) continue;
            bool genus_at_basepoint = true;
            for (const auto& v : g.vertices()) {
                if (!v.basepoint && v.genus != 0) genus_at_basepoint = false;
            }
            if (!genus_at_basepoint) continue;

            report.instances_checked += 1;
            report.checks_performed += 1;
            auto stats = graph_stats(g);
            int k = static_cast<int>(g.vertices().size()) - 1;
            int dim = stats.dim;
            int deg = degree(g);
            std::string at = canonical_form(g);

            if (deg != dim + 1 - 2 * k) {
                record(report, "degree identity fails at " + at);
            }
            if (stats.rank_pi1 != dim + 1 - k) {
                record(report, "rank identity fails at " + at);
            }
            int basepoint_genus = g.vertex(*g.basepoint_id()).genus;
            if (basepoint_genus != n - stats.rank_pi1) {
                record(report, "basepoint genus identity fails at " + at);
            }
            int bookkeeping = basepoint_genus - 2 + 2 * (k + 1) - 2;
            for (const auto& v : g.vertices()) {
                if (!v.basepoint) bookkeeping += stats.valences.at(v.id) - 5;
            }
            if (bookkeeping != n - 2 * k - 2 || bookkeeping != n + deg - dim - 3) {
                record(report, "join bookkeeping identity fails at " + at);
            }
        }
    }
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "collapse-lemma", "pillar-identity", "rank-identity", "degree-zero-roses",
        "pillar-arithmetic"};
    return names;
}

VerificationReport verify_suite(const std::string& suite, int n_max, int d_max,
                                const EnumerationLimits& limits) {
    const auto& names = verify_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw SchemaError("unknown verification suite: " + suite);
    }
    if (n_max < 1) throw SchemaError("verification requires n_max >= 1");
    if (d_max < 0) throw SchemaError("verification requires d_max >= 0");
    check_caps(n_max, d_max, limits);

    VerificationReport report;
    report.suite = suite;
    auto start = std::chrono::steady_clock::now();
    if (suite == "collapse-lemma") {
        run_collapse_lemma(report, n_max, d_max, limits);
    } else if (suite == "pillar-identity") {
        run_pillar_identity(report, n_max, d_max, limits);
    } else if (suite == "rank-identity") {
        run_rank_identity(report, n_max, d_max, limits);
    } else if (suite == "degree-zero-roses") {
        run_degree_zero_roses(report, n_max, limits);
    } else if (suite == "pillar-arithmetic") {
        run_pillar_arithmetic(report, n_max, d_max, limits);
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace spheredeg
