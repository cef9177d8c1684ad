#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "spheredeg/report.hpp"
#include "spheredeg/simplicial.hpp"

namespace spheredeg {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced homology in one dimension: free rank plus the invariant-factor
/// torsion coefficients (each >= 2, each dividing the next).
struct HomologyDim {
    int rank = 0;
    std::vector<long long> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyDim& other) const {
        return rank == other.rank && torsion == other.torsion;
    }
};

/// Reduced integral homology in dimensions 0..dim(K). Reduced means a
/// point has every group zero; dimensions above dim(K) are always zero
/// and are not listed.
struct HomologyProfile {
    std::vector<HomologyDim> dims;

    bool trivial() const {
        for (const auto& d : dims) {
            if (!d.trivial()) return false;
        }
        return true;
    }
    bool operator==(const HomologyProfile& other) const { return dims == other.dims; }
};

/// Invariant factors d_1 | d_2 | ... of an integer matrix, all positive,
/// zeros dropped. Exact computation; entries may grow arbitrarily large
/// during elimination, hence the arbitrary-precision type.
std::vector<BigInt> smith_invariant_factors(std::vector<std::vector<BigInt>> m);

/// Exact reduced integral homology over the integers via Smith normal
/// form of the boundary matrices (with an augmentation row in degree 0).
/// Throws ResourceLimitError when the complex has more than face_cap faces.
HomologyProfile reduced_homology(const SimplicialComplex& k, std::size_t face_cap = 200000);

/// Homological k-connectivity: every k' <= -2 holds vacuously, k = -1
/// means nonempty, and k >= 0 means nonempty with trivial reduced
/// homology in dimensions 0..k. This is the computable shadow of
/// k-connectivity: the two agree on simply connected complexes, and
/// homological connectivity is what the join bound below consumes.
bool is_homologically_k_connected(const SimplicialComplex& k, int connectivity,
                                  std::size_t face_cap = 200000);

/// One named join-connectivity check: parts with their claimed
/// connectivities. Labels are prefixed per part, so parts may share labels.
struct JoinInstance {
    std::string name;
    std::vector<std::pair<SimplicialComplex, int>> parts;
};

/// Checks each part's claimed connectivity homologically, then checks that
/// the join of q parts is (sum of connectivities + 2q - 2)-connected.
VerificationReport verify_join_connectivity(const std::vector<JoinInstance>& instances,
                                            std::size_t face_cap = 200000);

}  // namespace spheredeg
