#include "spheredeg/homology.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <map>
#include <sstream>

#include "spheredeg/errors.hpp"

namespace spheredeg {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a != b) std::swap(m[a], m[b]);
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<BigInt> smith_invariant_factors(Matrix m) {
    if (m.empty() || m.front().empty()) return {};
    const std::size_t rows = m.size();
    const std::size_t cols = m.front().size();
    std::vector<BigInt> diagonal;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing submatrix becomes the pivot;
        // small pivots keep the intermediate entries from exploding.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
            for (std::size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                if (pr == rows || big_abs(m[i][j]) < big_abs(m[pr][pc])) {
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr == rows) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);

        for (bool clean = false; !clean;) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                BigInt q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {
                    // Remainder is smaller than the pivot; promote it.
                    swap_rows(m, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                BigInt q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    swap_cols(m, t, j);
                    clean = false;
                }
            }
        }
        diagonal.push_back(big_abs(m[t][t]));
    }

    // The diagonal presents the same group as the invariant factors; gcd/lcm
    // sweeps enforce the divisibility chain without changing the group.
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
            BigInt g = boost::multiprecision::gcd(diagonal[i], diagonal[j]);
            BigInt l = (diagonal[i] / g) * diagonal[j];
            diagonal[i] = g;
            diagonal[j] = l;
        }
    }
    for (std::size_t i = 0; i + 1 < diagonal.size(); ++i) {
        if (diagonal[i + 1] % diagonal[i] != 0) {
            throw Error("invariant factor chain failed to close");
        }
    }
    return diagonal;
}

namespace {

// Boundary matrix from p-faces to (p-1)-faces; for p == 0 the augmentation
// row sending every vertex to 1.
Matrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper,
                       int p) {
    if (p == 0) {
        return {std::vector<BigInt>(upper.size(), BigInt(1))};
    }
    std::map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < lower.size(); ++i) row_of.emplace(lower[i], i);
    Matrix m(lower.size(), std::vector<BigInt>(upper.size(), BigInt(0)));
    for (std::size_t col = 0; col < upper.size(); ++col) {
        const Face& face = upper[col];
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            Face sub;
            sub.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i) {
                if (i != drop) sub.push_back(face[i]);
            }
            m[row_of.at(sub)][col] = (drop % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

long long to_long_long(const BigInt& x) {
    if (x > BigInt(LLONG_MAX)) {
        throw Error("torsion coefficient exceeds long long");
    }
    return static_cast<long long>(x);
}

SimplicialComplex prefix_labels(const SimplicialComplex& k, const std::string& prefix) {
    std::vector<Face> facets;
    for (const auto& facet : k.facets()) {
        Face renamed;
        for (const auto& label : facet) renamed.push_back(prefix + label);
        facets.push_back(renamed);
    }
    return SimplicialComplex::make(facets);
}

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& k, std::size_t face_cap) {
    HomologyProfile profile;
    if (k.empty()) return profile;
    const int top = k.dim();

    std::vector<std::vector<Face>> faces(top + 1);
    std::size_t total = 0;
    for (int p = 0; p <= top; ++p) {
        faces[p] = k.faces_of_dim(p);
        total += faces[p].size();
        if (total > face_cap) {
            throw ResourceLimitError("homology face count exceeds cap of " +
                                     std::to_string(face_cap));
        }
    }

    // ranks[p] = rank of the boundary map leaving dimension p; the map
    // leaving dimension 0 is the augmentation, of rank 1 on anything
    // nonempty, which is what makes the answer reduced.
    std::vector<std::vector<BigInt>> factors(top + 2);
    std::vector<int> ranks(top + 2, 0);
    for (int p = 0; p <= top; ++p) {
        Matrix m = boundary_matrix(p == 0 ? std::vector<Face>{} : faces[p - 1], faces[p], p);
        factors[p] = smith_invariant_factors(std::move(m));
        ranks[p] = static_cast<int>(factors[p].size());
    }

    profile.dims.resize(top + 1);
    for (int p = 0; p <= top; ++p) {
        profile.dims[p].rank = static_cast<int>(faces[p].size()) - ranks[p] - ranks[p + 1];
        for (const auto& factor : factors[p + 1]) {
            if (factor > 1) profile.dims[p].torsion.push_back(to_long_long(factor));
        }
    }
    return profile;
}

bool is_homologically_k_connected(const SimplicialComplex& k, int connectivity,
                                  std::size_t face_cap) {
    if (connectivity <= -2) return true;
    if (k.empty()) return false;
    if (connectivity == -1) return true;
    HomologyProfile profile = reduced_homology(k, face_cap);
    int upto = std::min(connectivity, k.dim());
    for (int p = 0; p <= upto; ++p) {
        if (!profile.dims[p].trivial()) return false;
    }
    return true;
}

VerificationReport verify_join_connectivity(const std::vector<JoinInstance>& instances,
                                            std::size_t face_cap) {
    VerificationReport report;
    report.suite = "join-connectivity";
    auto start = std::chrono::steady_clock::now();
    for (const auto& instance : instances) {
        report.instances_checked += 1;
        SimplicialComplex joined;
        int claimed_sum = 0;
        bool parts_ok = true;
        for (std::size_t i = 0; i < instance.parts.size(); ++i) {
            const auto& [part, claimed] = instance.parts[i];
            report.checks_performed += 1;
            if (!is_homologically_k_connected(part, claimed, face_cap)) {
                report.counterexamples.push_back(instance.name + ": part " +
                                                 std::to_string(i) +
                                                 " is not " + std::to_string(claimed) +
                                                 "-connected");
                parts_ok = false;
            }
            joined = join(joined, prefix_labels(part, "p" + std::to_string(i) + "."));
            claimed_sum += claimed;
        }
        if (!parts_ok) continue;
        int expected =
            claimed_sum + 2 * static_cast<int>(instance.parts.size()) - 2;
        report.checks_performed += 1;
        if (!is_homologically_k_connected(joined, expected, face_cap)) {
            report.counterexamples.push_back(instance.name + ": join is not " +
                                             std::to_string(expected) + "-connected");
        }
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

std::map<Face, int> cofacet_counts(const SimplicialComplex& k, int ridge_dim) {
    std::map<Face, int> counts;
    for (const auto& ridge : k.faces_of_dim(ridge_dim)) counts.emplace(ridge, 0);
    for (const auto& facet : k.facets()) {
        for (auto& [ridge, count] : counts) {
            if (std::includes(facet.begin(), facet.end(), ridge.begin(), ridge.end())) {
                count += 1;
            }
        }
    }
    return counts;
}

bool sphere_homology(const HomologyProfile& profile, int d) {
    for (int p = 0; p < static_cast<int>(profile.dims.size()); ++p) {
        const auto& group = profile.dims[p];
        if (p == d) {
            if (group.rank != 1 || !group.torsion.empty()) return false;
        } else if (!group.trivial()) {
            return false;
        }
    }
    return true;
}

}  // namespace

Recognition is_combinatorial_sphere(const SimplicialComplex& k, int d) {
    if (d <= -1) {
        return (d == -1 && k.empty()) ? Recognition::Yes : Recognition::No;
    }
    if (k.empty() || k.dim() != d || !is_pure(k, d)) return Recognition::No;

    if (d == 0) {
        return k.vertex_count() == 2 ? Recognition::Yes : Recognition::No;
    }
    if (d == 1) {
        if (!is_connected_complex(k)) return Recognition::No;
        if (k.vertex_count() != k.facet_count()) return Recognition::No;
        for (const auto& [vertex, count] : cofacet_counts(k, 0)) {
            if (count != 2) return Recognition::No;
        }
        return Recognition::Yes;
    }
    if (d == 2) {
        if (!is_connected_complex(k)) return Recognition::No;
        for (const auto& [edge, count] : cofacet_counts(k, 1)) {
            if (count != 2) return Recognition::No;
        }
        for (const auto& label : k.labels()) {
            if (is_combinatorial_sphere(link(k, {label}), 1) != Recognition::Yes) {
                return Recognition::No;
            }
        }
        // Closed connected surface with chi = 2 is the 2-sphere.
        return euler_characteristic(k) == 2 ? Recognition::Yes : Recognition::No;
    }

    for (const auto& [ridge, count] : cofacet_counts(k, d - 1)) {
        if (count != 2) return Recognition::No;
    }
    if (!sphere_homology(reduced_homology(k), d)) return Recognition::No;
    return Recognition::Unverified;
}

Recognition is_combinatorial_ball(const SimplicialComplex& k, int d) {
    if (d < 0 || k.empty() || k.dim() != d || !is_pure(k, d)) return Recognition::No;

    if (d == 0) {
        return k.vertex_count() == 1 ? Recognition::Yes : Recognition::No;
    }
    if (d == 1) {
        if (!is_connected_complex(k)) return Recognition::No;
        if (k.facet_count() + 1 != k.vertex_count()) return Recognition::No;
        for (const auto& [vertex, count] : cofacet_counts(k, 0)) {
            if (count > 2) return Recognition::No;
        }
        return Recognition::Yes;  // connected tree of maximum valence 2: a path
    }
    if (d == 2) {
        if (!is_connected_complex(k)) return Recognition::No;
        for (const auto& [edge, count] : cofacet_counts(k, 1)) {
            if (count < 1 || count > 2) return Recognition::No;
        }
        SimplicialComplex rim = boundary_complex(k, 2);
        if (rim.empty()) return Recognition::No;
        if (is_combinatorial_sphere(rim, 1) != Recognition::Yes) return Recognition::No;
        for (const auto& label : k.labels()) {
            SimplicialComplex vertex_link = link(k, {label});
            bool cycle = is_combinatorial_sphere(vertex_link, 1) == Recognition::Yes;
            bool path = is_combinatorial_ball(vertex_link, 1) == Recognition::Yes;
            if (!cycle && !path) return Recognition::No;
        }
        // Connected surface, one boundary circle, chi = 1: a disk.
        return euler_characteristic(k) == 1 ? Recognition::Yes : Recognition::No;
    }

    for (const auto& [ridge, count] : cofacet_counts(k, d - 1)) {
        if (count < 1 || count > 2) return Recognition::No;
    }
    if (!reduced_homology(k).trivial()) return Recognition::No;
    return Recognition::Unverified;
}

}  // namespace spheredeg
