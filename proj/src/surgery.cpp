#include "spheredeg/surgery.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

std::string face_text(const Face& face) {
    std::string out = "{";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += ",";
        out += face[i];
    }
    out += "}";
    return out;
}

std::string measure_text(const std::array<long long, 3>& m) {
    std::ostringstream os;
    os << "(" << m[0] << "," << m[1] << "," << m[2] << ")";
    return os.str();
}

// All nonempty subfaces of a face.
std::vector<Face> proper_and_full_subfaces(const Face& face) {
    std::vector<Face> out;
    const std::size_t count = face.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << count); ++mask) {
        Face sub;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (std::size_t{1} << i)) sub.push_back(face[i]);
        }
        out.push_back(sub);
    }
    return out;
}

// Deterministic fresh-label source: s0, s1, ... skipping reserved names.
class FreshLabels {
public:
    explicit FreshLabels(std::set<std::string> reserved)
        : reserved_(std::move(reserved)) {}

    std::string next() {
        for (;; ++counter_) {
            std::string candidate = "s" + std::to_string(counter_);
            if (reserved_.count(candidate) == 0) {
                reserved_.insert(candidate);
                ++counter_;
                return candidate;
            }
        }
    }

private:
    std::set<std::string> reserved_;
    int counter_ = 0;
};

Face mapped_face(const std::map<std::string, std::string>& vertex_map,
                 const Face& face) {
    std::set<std::string> out;
    for (const auto& label : face) {
        auto it = vertex_map.find(label);
        if (it == vertex_map.end()) {
            throw SchemaError("vertex " + label + " has no image");
        }
        out.insert(it->second);
    }
    return Face(out.begin(), out.end());
}

// ---- fillers ------------------------------------------------------------

FillResult fill_empty_sphere(const SimplicialComplex& target,
                             FreshLabels& fresh) {
    if (target.empty()) {
        throw FillError("the low link has no vertex to carry a point filler");
    }
    std::string apex = fresh.next();
    std::string image =
        *std::min_element(target.labels().begin(), target.labels().end());
    FillResult out;
    out.ball = SimplicialComplex::make({{apex}});
    out.vertex_map[apex] = image;
    return out;
}

FillResult fill_zero_sphere(const SimplicialComplex& sphere,
                            const std::map<std::string, std::string>& rim_map,
                            const SimplicialComplex& target,
                            const std::set<Face>& forbidden,
                            FreshLabels& fresh) {
    if (sphere.facet_count() != 2 || sphere.dim() != 0) {
        throw SchemaError("filler expected a two-point sphere");
    }
    const std::string p = sphere.facets()[0][0];
    const std::string q = sphere.facets()[1][0];
    const std::string a = rim_map.at(p);
    const std::string b = rim_map.at(q);

    // Shortest path between the rim images in the 1-skeleton, ties broken
    // by label order.
    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& edge : target.faces_of_dim(1)) {
        adjacency[edge[0]].push_back(edge[1]);
        adjacency[edge[1]].push_back(edge[0]);
    }
    std::map<std::string, std::string> parent;
    std::vector<std::string> path;
    if (a == b) {
        path = {a};
    } else {
        std::queue<std::string> work;
        work.push(a);
        parent[a] = a;
        while (!work.empty() && parent.count(b) == 0) {
            std::string cur = work.front();
            work.pop();
            auto& nbs = adjacency[cur];
            std::sort(nbs.begin(), nbs.end());
            for (const auto& nb : nbs) {
                if (parent.count(nb) == 0) {
                    parent[nb] = cur;
                    work.push(nb);
                }
            }
        }
        if (parent.count(b) == 0) {
            throw FillError("the low link does not connect " + a + " to " + b);
        }
        for (std::string cur = b;; cur = parent[cur]) {
            path.push_back(cur);
            if (cur == a) break;
        }
        std::reverse(path.begin(), path.end());
    }

    FillResult out;
    if (path.size() <= 2) {
        Face direct = normalize_face({p, q});
        if (forbidden.count(direct) == 0) {
            out.ball = SimplicialComplex::make({direct});
            return out;
        }
        // The straight edge already exists elsewhere in the disk; route
        // through one fresh vertex instead.
        std::string mid = fresh.next();
        out.ball = SimplicialComplex::make(
            {normalize_face({p, mid}), normalize_face({mid, q})});
        out.vertex_map[mid] = path.front();
        return out;
    }
    std::vector<Face> edges;
    std::string prev = p;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        std::string mid = fresh.next();
        out.vertex_map[mid] = path[i];
        edges.push_back(normalize_face({prev, mid}));
        prev = mid;
    }
    edges.push_back(normalize_face({prev, q}));
    out.ball = SimplicialComplex::make(edges);
    return out;
}

// Orders the vertices of a 1-sphere along the cycle, starting from the
// least label and moving toward its lesser neighbor.
std::vector<std::string> cycle_order(const SimplicialComplex& sphere) {
    std::map<std::string, std::vector<std::string>> adjacency;
    for (const auto& edge : sphere.facets()) {
        if (edge.size() != 2) throw SchemaError("filler expected a cycle");
        adjacency[edge[0]].push_back(edge[1]);
        adjacency[edge[1]].push_back(edge[0]);
    }
    for (auto& [label, nbs] : adjacency) {
        if (nbs.size() != 2) throw SchemaError("filler expected a cycle");
        std::sort(nbs.begin(), nbs.end());
    }
    std::vector<std::string> cycle;
    std::string start = sphere.labels().front();
    std::string prev = start;
    std::string cur = adjacency[start][0];
    cycle.push_back(start);
    while (cur != start) {
        cycle.push_back(cur);
        const auto& nbs = adjacency[cur];
        std::string next = (nbs[0] == prev) ? nbs[1] : nbs[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != sphere.vertex_count()) {
        throw SchemaError("filler expected a single cycle");
    }
    return cycle;
}

// True when every consecutive pair of the cycle spans a target face
// together with apex_image.
bool cone_images_fit(const std::vector<std::string>& cycle,
                     const std::map<std::string, std::string>& rim_map,
                     const SimplicialComplex& target,
                     const std::string& apex_image) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::set<std::string> tri{apex_image, rim_map.at(cycle[i]),
                                  rim_map.at(cycle[(i + 1) % cycle.size()])};
        if (!target.has_face(Face(tri.begin(), tri.end()))) return false;
    }
    return true;
}

// Least target vertex that can cone the whole cycle, if any.
bool find_cone_apex(const std::vector<std::string>& cycle,
                    const std::map<std::string, std::string>& rim_map,
                    const SimplicialComplex& target, std::string& apex_image) {
    for (const auto& candidate : target.labels()) {
        if (cone_images_fit(cycle, rim_map, target, candidate)) {
            apex_image = candidate;
            return true;
        }
    }
    return false;
}

std::string cycle_key(const std::vector<std::string>& cycle) {
    // Canonical form under rotation and reflection, so revisited fill
    // states are pruned once.
    std::string best;
    const std::size_t r = cycle.size();
    for (int reflect = 0; reflect < 2; ++reflect) {
        std::vector<std::string> seq = cycle;
        if (reflect) std::reverse(seq.begin(), seq.end());
        for (std::size_t shift = 0; shift < r; ++shift) {
            std::string key;
            for (std::size_t i = 0; i < r; ++i) {
                key += seq[(shift + i) % r];
                key += ';';
            }
            if (best.empty() || key < best) best = key;
        }
    }
    return best;
}

struct EarFillState {
    const std::map<std::string, std::string>* rim_map;
    const SimplicialComplex* target;
    const std::set<Face>* forbidden;
    std::set<Face> used;
    std::vector<Face> triangles;
    std::set<std::string> failed;
    int area_left = 0;
};

bool triangle_allowed(const EarFillState& state, const Face& triangle) {
    if (state.used.count(triangle) || state.forbidden->count(triangle)) {
        return false;
    }
    std::set<std::string> image;
    for (const auto& label : triangle) image.insert(state.rim_map->at(label));
    return state.target->has_face(Face(image.begin(), image.end()));
}

bool fill_by_ears(std::vector<std::string>& cycle, EarFillState& state,
                  std::map<std::string, std::string>& additions,
                  FreshLabels& fresh) {
    const std::size_t r = cycle.size();
    if (state.area_left <= 0) return false;

    if (r == 3) {
        Face triangle = normalize_face({cycle[0], cycle[1], cycle[2]});
        if (triangle_allowed(state, triangle)) {
            state.triangles.push_back(triangle);
            --state.area_left;
            return true;
        }
    }

    // Cone finish: one fresh apex over the whole remaining cycle. Fresh
    // labels never collide with forbidden faces.
    if (state.area_left >= static_cast<int>(r)) {
        std::string apex_image;
        if (find_cone_apex(cycle, *state.rim_map, *state.target, apex_image)) {
            std::string apex = fresh.next();
            additions[apex] = apex_image;
            for (std::size_t i = 0; i < r; ++i) {
                state.triangles.push_back(
                    normalize_face({apex, cycle[i], cycle[(i + 1) % r]}));
            }
            state.area_left -= static_cast<int>(r);
            return true;
        }
    }

    if (r == 3) return false;

    std::string key = cycle_key(cycle);
    if (state.failed.count(key)) return false;

    // Ear cuts: drop cycle[i], closing with the chord between its
    // neighbors, provided that chord is genuinely new.
    for (std::size_t i = 0; i < r; ++i) {
        const std::string& before = cycle[(i + r - 1) % r];
        const std::string& at = cycle[i];
        const std::string& after = cycle[(i + 1) % r];
        if (before == after) continue;
        Face chord = normalize_face({before, after});
        if (state.used.count(chord) || state.forbidden->count(chord)) continue;
        Face triangle = normalize_face({before, at, after});
        if (!triangle_allowed(state, triangle)) continue;

        state.triangles.push_back(triangle);
        state.used.insert(chord);
        state.used.insert(triangle);
        --state.area_left;
        std::vector<std::string> smaller;
        for (std::size_t j = 0; j < r; ++j) {
            if (j != i) smaller.push_back(cycle[j]);
        }
        // Rotate so the sequence starts right after the cut, preserving
        // cycle order.
        if (fill_by_ears(smaller, state, additions, fresh)) return true;
        ++state.area_left;
        state.used.erase(triangle);
        state.used.erase(chord);
        state.triangles.pop_back();
    }

    state.failed.insert(key);
    return false;
}

FillResult fill_one_sphere(const SimplicialComplex& sphere,
                           const std::map<std::string, std::string>& rim_map,
                           const SimplicialComplex& target,
                           const FillOptions& options,
                           const std::set<Face>& forbidden,
                           FreshLabels& fresh) {
    std::vector<std::string> cycle = cycle_order(sphere);
    FillResult out;

    if (options.strategy == FillStrategy::Path) {
        throw FillError("the path strategy only fills 0-spheres");
    }

    if (options.strategy == FillStrategy::Star) {
        std::string apex_image;
        if (!find_cone_apex(cycle, rim_map, target, apex_image)) {
            throw FillError("no single target vertex cones the link cycle");
        }
        std::string apex = fresh.next();
        out.vertex_map[apex] = apex_image;
        std::vector<Face> triangles;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            triangles.push_back(normalize_face(
                {apex, cycle[i], cycle[(i + 1) % cycle.size()]}));
        }
        out.ball = SimplicialComplex::make(triangles);
        return out;
    }

    EarFillState state;
    state.rim_map = &rim_map;
    state.target = &target;
    state.forbidden = &forbidden;
    state.area_left = options.max_area;
    for (const auto& edge : sphere.facets()) {
        for (const auto& sub : proper_and_full_subfaces(edge)) {
            state.used.insert(sub);
        }
    }
    if (!fill_by_ears(cycle, state, out.vertex_map, fresh)) {
        throw FillError("no filler for the link cycle within area " +
                        std::to_string(options.max_area));
    }
    out.ball = SimplicialComplex::make(state.triangles);
    return out;
}

}  // namespace

Face image_face(const DiskMap& f, const Face& face) {
    return mapped_face(f.vertex_map, normalize_face(face));
}

ValidationReport validate_disk_map(const DiskMap& f) {
    ValidationReport report;
    if (f.dim != 1 && f.dim != 2) {
        report.add("ball-dimension",
                   "disk dimension must be 1 or 2, got " + std::to_string(f.dim));
        return report;
    }
    if (is_combinatorial_ball(f.disk, f.dim) != Recognition::Yes) {
        report.add("not-a-ball", "the disk is not a certified ball of dimension " +
                                     std::to_string(f.dim));
    }
    bool mapped = true;
    for (const auto& label : f.disk.labels()) {
        auto it = f.vertex_map.find(label);
        if (it == f.vertex_map.end()) {
            report.add("unmapped-vertex", label + " has no image");
            mapped = false;
        } else if (!f.target.complex().has_label(it->second)) {
            report.add("image-not-a-vertex",
                       label + " maps to unknown vertex " + it->second);
            mapped = false;
        }
    }
    if (!mapped) return report;
    for (const auto& facet : f.disk.facets()) {
        Face image = image_face(f, facet);
        if (!f.target.complex().has_face(image)) {
            report.add("not-simplicial", "facet " + face_text(facet) +
                                             " maps onto the non-face " +
                                             face_text(image));
        }
    }
    return report;
}

std::vector<BadSimplex> bad_simplices(const DiskMap& f, int budget) {
    SimplicialComplex boundary = boundary_complex(f.disk, f.dim);
    std::vector<BadSimplex> out;
    for (const auto& face : f.disk.all_faces()) {
        if (boundary.has_face(face)) continue;
        Face image = image_face(f, face);
        int value = f.target.deg(image);
        if (value <= budget) continue;
        if (!is_pillar_face(f.target, image)) continue;
        out.push_back({face, image, value});
    }
    std::sort(out.begin(), out.end(),
              [](const BadSimplex& a, const BadSimplex& b) {
                  if (a.deg != b.deg) return a.deg > b.deg;
                  if (a.simplex.size() != b.simplex.size()) {
                      return a.simplex.size() > b.simplex.size();
                  }
                  return a.simplex < b.simplex;
              });
    return out;
}

std::array<long long, 3> descent_measure(const DiskMap& f) {
    std::array<long long, 3> out{0, -1, 0};
    std::vector<Face> faces = f.disk.all_faces();
    std::vector<int> degs;
    degs.reserve(faces.size());
    for (const auto& face : faces) {
        degs.push_back(f.target.deg(image_face(f, face)));
        out[0] = std::max<long long>(out[0], degs.back());
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (degs[i] != out[0]) continue;
        if (!is_pillar_face(f.target, image_face(f, faces[i]))) continue;
        long long dim = static_cast<long long>(faces[i].size()) - 1;
        if (dim > out[1]) {
            out[1] = dim;
            out[2] = 1;
        } else if (dim == out[1]) {
            ++out[2];
        }
    }
    return out;
}

FillResult fill_sphere_map(const SimplicialComplex& sphere, int sphere_dim,
                           const std::map<std::string, std::string>& rim_map,
                           const SimplicialComplex& target,
                           const FillOptions& options,
                           const std::set<Face>& forbidden,
                           const std::set<std::string>& reserved) {
    FreshLabels fresh(reserved);
    switch (sphere_dim) {
        case -1:
            if (!sphere.empty()) {
                throw SchemaError("a (-1)-sphere must be the empty complex");
            }
            return fill_empty_sphere(target, fresh);
        case 0:
            return fill_zero_sphere(sphere, rim_map, target, forbidden, fresh);
        case 1:
            return fill_one_sphere(sphere, rim_map, target, options, forbidden,
                                   fresh);
        default:
            throw SchemaError("fillers exist for sphere dimensions -1, 0, 1");
    }
}

DiskMap surgery_step(const DiskMap& f, const Face& omega_in, int budget,
                     const FillOptions& options) {
    Face omega = normalize_face(omega_in);
    std::vector<BadSimplex> bads = bad_simplices(f, budget);
    std::array<long long, 3> before = descent_measure(f);
    bool legal = false;
    for (const auto& bad : bads) {
        if (bad.simplex == omega) {
            legal = bad.deg == before[0] &&
                    static_cast<long long>(omega.size()) - 1 == before[1];
            break;
        }
    }
    if (!legal) {
        throw SchemaError("omega " + face_text(omega) +
                          " is not a bad simplex of maximal degree and "
                          "maximal dimension");
    }

    Face core = image_face(f, omega);
    SimplicialComplex lk = link(f.disk, omega);
    int sphere_dim = f.dim - static_cast<int>(omega.size());
    if (sphere_dim < 0) {
        if (!lk.empty()) {
            throw Error("a facet of the disk has a nonempty link");
        }
    } else if (is_combinatorial_sphere(lk, sphere_dim) != Recognition::Yes) {
        throw Error("the link of omega is not a certified sphere");
    }

    SimplicialComplex low = low_link(f.target, core);
    std::map<std::string, std::string> rim_map;
    for (const auto& label : lk.labels()) {
        rim_map[label] = f.vertex_map.at(label);
    }
    for (const auto& sigma : lk.facets()) {
        Face image = mapped_face(rim_map, sigma);
        if (!low.has_face(image)) {
            throw Error("link face " + face_text(sigma) +
                        " maps outside the low link of " + face_text(core));
        }
    }

    std::set<std::string> reserved(f.disk.labels().begin(),
                                   f.disk.labels().end());
    for (const auto& label : f.target.complex().labels()) {
        reserved.insert(label);
    }
    SimplicialComplex kept = remove_open_star(f.disk, omega);
    std::set<Face> forbidden;
    for (const auto& face : kept.all_faces()) forbidden.insert(face);

    FillResult fill;
    try {
        fill = fill_sphere_map(lk, sphere_dim, rim_map, low, options,
                               forbidden, reserved);
    } catch (const FillError& e) {
        throw FillError("cannot fill around " + face_text(omega) + ": " +
                        e.what());
    }

    SimplicialComplex glued = fill.ball;
    if (omega.size() > 1) {
        std::vector<Face> rim;
        for (const auto& vertex : omega) {
            Face side;
            for (const auto& other : omega) {
                if (other != vertex) side.push_back(other);
            }
            rim.push_back(side);
        }
        glued = join(fill.ball, SimplicialComplex::make(rim));
    }

    std::vector<Face> facets = kept.facets();
    for (const auto& facet : glued.facets()) facets.push_back(facet);

    DiskMap out;
    out.disk = SimplicialComplex::make(facets);
    out.dim = f.dim;
    out.target = f.target;
    for (const auto& label : out.disk.labels()) {
        auto it = f.vertex_map.find(label);
        if (it != f.vertex_map.end()) {
            out.vertex_map[label] = it->second;
        } else {
            out.vertex_map[label] = fill.vertex_map.at(label);
        }
    }

    if (is_combinatorial_ball(out.disk, out.dim) != Recognition::Yes) {
        throw Error("surgery produced a disk that is not a certified ball");
    }
    SimplicialComplex old_boundary = boundary_complex(f.disk, f.dim);
    if (!(boundary_complex(out.disk, out.dim) == old_boundary)) {
        throw Error("surgery changed the boundary of the disk");
    }
    for (const auto& label : old_boundary.labels()) {
        if (out.vertex_map.at(label) != f.vertex_map.at(label)) {
            throw Error("surgery changed the map on the boundary");
        }
    }
    for (const auto& facet : out.disk.facets()) {
        if (!f.target.complex().has_face(image_face(out, facet))) {
            throw Error("surgery produced a non-simplicial map");
        }
    }
    std::array<long long, 3> after = descent_measure(out);
    if (!(after < before)) {
        throw Error("surgery did not decrease the measure: " +
                    measure_text(before) + " to " + measure_text(after));
    }
    return out;
}

DescentResult surgery_descent(const DiskMap& f, int budget,
                              const FillOptions& options) {
    if (budget < 0) {
        throw SchemaError("the degree budget must be nonnegative");
    }
    ValidationReport disk_report = validate_disk_map(f);
    if (!disk_report.ok()) {
        throw SchemaError("invalid disk map: " +
                          disk_report.violations.front().rule + " (" +
                          disk_report.violations.front().detail + ")");
    }
    ValidationReport filtration_report = validate_filtration(f.target);
    if (!filtration_report.ok()) {
        throw SchemaError("invalid filtration: " +
                          filtration_report.violations.front().rule + " (" +
                          filtration_report.violations.front().detail + ")");
    }
    SimplicialComplex boundary = boundary_complex(f.disk, f.dim);
    for (const auto& face : boundary.all_faces()) {
        int value = f.target.deg(image_face(f, face));
        if (value > budget) {
            throw SchemaError("boundary face " + face_text(face) +
                              " maps to degree " + std::to_string(value) +
                              ", above the budget " + std::to_string(budget));
        }
    }

    DescentResult out;
    out.final_map = f;
    for (int step = 0;; ++step) {
        std::vector<BadSimplex> bads = bad_simplices(out.final_map, budget);
        if (bads.empty()) break;
        if (step >= 100000) {
            throw Error("surgery descent exceeded the step cap");
        }
        TraceEntry entry;
        entry.step = step;
        entry.measure = descent_measure(out.final_map);
        entry.omega = bads.front().simplex;
        entry.image = bads.front().image;
        out.trace.push_back(entry);
        out.final_map =
            surgery_step(out.final_map, bads.front().simplex, budget, options);
    }
    out.final_measure = descent_measure(out.final_map);
    return out;
}

namespace {

// Portable deterministic draw in [0, bound).
int draw(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

PlantedInstance plant_alternating_path(std::mt19937_64& rng) {
    PlantedInstance out;
    out.family = "alternating-path";
    const int budget = draw(rng, 2);
    const int hot_count = 1 + draw(rng, 2);

    std::map<std::string, int> weights{{"u", 0}, {"z0", draw(rng, budget + 1)}};
    std::vector<Face> target_facets{{"u", "z0"}};
    for (int i = 0; i < hot_count; ++i) {
        std::string hot = "h" + std::to_string(i);
        weights[hot] = budget + 1 + draw(rng, 2);
        target_facets.push_back({"u", hot});
    }
    SimplicialComplex target = SimplicialComplex::from_facets(target_facets);

    const int segments = 1 + draw(rng, 3);
    std::vector<Face> disk_facets;
    std::map<std::string, std::string> vertex_map;
    for (int i = 0; i <= 2 * segments; ++i) {
        std::string label = "p" + std::to_string(i);
        if (i % 2 == 0) {
            vertex_map[label] = "u";
        } else {
            vertex_map[label] = "h" + std::to_string(((i - 1) / 2) % hot_count);
        }
        if (i < 2 * segments) {
            disk_facets.push_back({label, "p" + std::to_string(i + 1)});
        }
    }

    out.disk_map.disk = SimplicialComplex::from_facets(disk_facets);
    out.disk_map.dim = 1;
    out.disk_map.target = additive_weight_filtration(target, weights);
    out.disk_map.vertex_map = vertex_map;
    out.budget = budget;
    return out;
}

PlantedInstance plant_hot_wheel(std::mt19937_64& rng) {
    PlantedInstance out;
    out.family = "hot-wheel";
    const int budget = 1 + draw(rng, 2);

    std::map<std::string, int> weights{{"u", 0},
                                       {"z0", draw(rng, budget + 1)},
                                       {"z1", 1 + draw(rng, budget)},
                                       {"h", budget + 1 + draw(rng, 2)}};
    SimplicialComplex target =
        SimplicialComplex::from_facets({{"h", "u", "z0"}, {"h", "u", "z1"}});

    const int rim = 4 + 2 * draw(rng, 2);
    std::vector<Face> disk_facets;
    std::map<std::string, std::string> vertex_map{{"q", "h"}};
    for (int i = 0; i < rim; ++i) {
        std::string label = "c" + std::to_string(i);
        if (i % 2 == 0) {
            vertex_map[label] = "u";
        } else if (i == 1) {
            vertex_map[label] = "z1";
        } else {
            vertex_map[label] = "z" + std::to_string(draw(rng, 2));
        }
        disk_facets.push_back(
            {"q", label, "c" + std::to_string((i + 1) % rim)});
    }

    out.disk_map.disk = SimplicialComplex::from_facets(disk_facets);
    out.disk_map.dim = 2;
    out.disk_map.target = additive_weight_filtration(target, weights);
    out.disk_map.vertex_map = vertex_map;
    out.budget = budget;
    return out;
}

PlantedInstance plant_hot_edge_triangles(std::mt19937_64& rng) {
    PlantedInstance out;
    out.family = "hot-edge-triangles";
    const int budget = 1 + draw(rng, 2);

    std::map<std::string, int> weights{{"u", 0},
                                       {"zb", budget},
                                       {"zc", 1 + draw(rng, budget)}};
    SimplicialComplex target =
        SimplicialComplex::from_facets({{"u", "zb", "zc"}});

    SimplicialComplex disk =
        SimplicialComplex::from_facets({{"da", "db", "dc"}, {"db", "dc", "dd"}});

    out.disk_map.disk = disk;
    out.disk_map.dim = 2;
    out.disk_map.target = additive_weight_filtration(target, weights);
    out.disk_map.vertex_map = {
        {"da", "u"}, {"db", "zb"}, {"dc", "zc"}, {"dd", "u"}};
    out.budget = budget;
    return out;
}

PlantedInstance plant_hot_triangle_hexagon(std::mt19937_64& rng) {
    PlantedInstance out;
    out.family = "hot-triangle-hexagon";

    std::map<std::string, int> weights{{"u", 0}};
    for (int j = 0; j < 3; ++j) {
        weights["h" + std::to_string(j)] = 1 + draw(rng, 2);
    }
    // The solid tetrahedron: the hot triangle must keep the cold vertex
    // in its link so point fillers have somewhere to land.
    SimplicialComplex target =
        SimplicialComplex::from_facets({{"u", "h0", "h1", "h2"}});

    // Hexagon around an inner hot triangle: each outer arc of two edges
    // is coned from one inner vertex, with one connector per corner.
    SimplicialComplex disk = SimplicialComplex::from_facets(
        {{"o0", "o1", "i0"},
         {"o1", "o2", "i0"},
         {"o2", "o3", "i1"},
         {"o3", "o4", "i1"},
         {"o4", "o5", "i2"},
         {"o0", "o5", "i2"},
         {"o2", "i0", "i1"},
         {"o4", "i1", "i2"},
         {"o0", "i0", "i2"},
         {"i0", "i1", "i2"}});

    std::map<std::string, std::string> vertex_map;
    for (int i = 0; i < 6; ++i) vertex_map["o" + std::to_string(i)] = "u";
    for (int j = 0; j < 3; ++j) {
        vertex_map["i" + std::to_string(j)] = "h" + std::to_string(j);
    }

    out.disk_map.disk = disk;
    out.disk_map.dim = 2;
    out.disk_map.target = additive_weight_filtration(target, weights);
    out.disk_map.vertex_map = vertex_map;
    out.budget = 0;
    return out;
}

}  // namespace

PlantedInstance generate_planted_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
    switch (seed % 4) {
        case 0:
            return plant_alternating_path(rng);
        case 1:
            return plant_hot_wheel(rng);
        case 2:
            return plant_hot_edge_triangles(rng);
        default:
            return plant_hot_triangle_hexagon(rng);
    }
}

VerificationReport run_planted_descents(int instance_count,
                                        const FillOptions& options,
                                        std::uint64_t base_seed) {
    if (instance_count < 1) {
        throw SchemaError("instance_count must be at least 1");
    }
    VerificationReport report;
    report.suite = "surgery-descent";
    auto started = std::chrono::steady_clock::now();

    for (int offset = 0; offset < instance_count; ++offset) {
        std::uint64_t seed = base_seed + static_cast<std::uint64_t>(offset);
        PlantedInstance instance = generate_planted_instance(seed);
        std::string tag =
            "seed=" + std::to_string(seed) + " family=" + instance.family;
        ++report.instances_checked;
        auto fail = [&](const std::string& what) {
            report.counterexamples.push_back(tag + ": " + what);
        };
        try {
            ValidationReport disk_report = validate_disk_map(instance.disk_map);
            ++report.checks_performed;
            if (!disk_report.ok()) {
                fail("instance disk map invalid: " +
                     disk_report.violations.front().rule);
                continue;
            }
            ValidationReport filtration_report =
                validate_filtration(instance.disk_map.target);
            ++report.checks_performed;
            if (!filtration_report.ok()) {
                fail("instance filtration invalid: " +
                     filtration_report.violations.front().rule);
                continue;
            }
            ++report.checks_performed;
            if (bad_simplices(instance.disk_map, instance.budget).empty()) {
                fail("instance has nothing planted above the budget");
                continue;
            }

            DescentResult result =
                surgery_descent(instance.disk_map, instance.budget, options);

            ++report.checks_performed;
            if (!bad_simplices(result.final_map, instance.budget).empty()) {
                fail("bad simplices survived the descent");
            }
            ++report.checks_performed;
            if (is_combinatorial_ball(result.final_map.disk,
                                      result.final_map.dim) !=
                Recognition::Yes) {
                fail("final disk is not a certified ball");
            }
            ++report.checks_performed;
            SimplicialComplex before =
                boundary_complex(instance.disk_map.disk, instance.disk_map.dim);
            SimplicialComplex after =
                boundary_complex(result.final_map.disk, result.final_map.dim);
            if (!(before == after)) {
                fail("the boundary changed");
            } else {
                bool same = true;
                for (const auto& label : before.labels()) {
                    if (result.final_map.vertex_map.at(label) !=
                        instance.disk_map.vertex_map.at(label)) {
                        same = false;
                    }
                }
                ++report.checks_performed;
                if (!same) fail("the boundary map changed");
            }
            SimplicialComplex sublevel =
                instance.disk_map.target.sublevel(instance.budget);
            bool inside = true;
            for (const auto& facet : result.final_map.disk.facets()) {
                if (!sublevel.has_face(image_face(result.final_map, facet))) {
                    inside = false;
                }
            }
            ++report.checks_performed;
            if (!inside) fail("the final image leaves the sublevel complex");

            ++report.checks_performed;
            if (result.trace.empty()) {
                fail("descent recorded no steps despite planted content");
            }
            bool decreasing = true;
            for (std::size_t i = 0; i + 1 < result.trace.size(); ++i) {
                if (!(result.trace[i + 1].measure < result.trace[i].measure)) {
                    decreasing = false;
                }
            }
            if (!result.trace.empty() &&
                !(result.final_measure < result.trace.back().measure)) {
                decreasing = false;
            }
            ++report.checks_performed;
            if (!decreasing) fail("the measure did not strictly decrease");
        } catch (const Error& e) {
            fail(std::string("exception: ") + e.what());
        }
    }

    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      started)
            .count();
    return report;
}

}  // namespace spheredeg
