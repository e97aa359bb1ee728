#pragma once

#include <array>
#include <string>
#include <vector>

#include "homsuper/errors.hpp"
#include "homsuper/grading.hpp"

namespace homsuper {

/// One of the six elements of S_3 acting on argument triples:
/// tau(x1, x2, x3) = (x_{image[0]+1}, x_{image[1]+1}, x_{image[2]+1}).
/// The parity of tau depends on the argument parities and is the sum of
/// |x_a||x_b| over the recorded pairs; the sign is the usual signature.
struct Perm3 {
    const char* name;
    std::array<int, 3> image;
    int sign;
    std::vector<std::pair<int, int>> parity_pairs;
};

/// id, s1, s2, s1*s2, s2*s1, s2*s1*s2 where s1 swaps arguments 1,2 and
/// s2 swaps arguments 2,3.
inline const std::array<Perm3, 6>& s3_elements() {
    static const std::array<Perm3, 6> elems = {{
        {"id", {0, 1, 2}, 1, {}},
        {"s1", {1, 0, 2}, -1, {{0, 1}}},
        {"s2", {0, 2, 1}, -1, {{1, 2}}},
        {"s1s2", {2, 0, 1}, 1, {{1, 2}, {0, 2}}},
        {"s2s1", {1, 2, 0}, 1, {{0, 1}, {0, 2}}},
        {"s2s1s2", {2, 1, 0}, -1, {{1, 2}, {0, 2}, {0, 1}}},
    }};
    return elems;
}

/// |tau(x1, x2, x3)| mod 2 from the parities of the (unpermuted) arguments.
inline Parity permutation_parity(const Perm3& tau, const std::array<Parity, 3>& parities) {
    int acc = 0;
    for (const auto& [a, b] : tau.parity_pairs) acc += parity_product(parities[a], parities[b]);
    return static_cast<Parity>(acc % 2);
}

/// rho∘tau as an element of the table above (first apply tau, then rho).
inline const Perm3& compose(const Perm3& rho, const Perm3& tau) {
    std::array<int, 3> img;
    for (int k = 0; k < 3; ++k) img[k] = tau.image[rho.image[k]];
    for (const Perm3& e : s3_elements()) {
        if (e.image == img) return e;
    }
    throw structural_error("Perm3: composition fell outside S3");
}

/// Subgroups of S_3 in the fixed classification order.
enum class SubgroupId { G1, G2, G3, G4, G5, G6 };

inline const char* subgroup_name(SubgroupId g) {
    switch (g) {
        case SubgroupId::G1: return "G1";
        case SubgroupId::G2: return "G2";
        case SubgroupId::G3: return "G3";
        case SubgroupId::G4: return "G4";
        case SubgroupId::G5: return "G5";
        case SubgroupId::G6: return "G6";
    }
    throw structural_error("SubgroupId: invalid value");
}

/// Members as indices into s3_elements(). G5 is the alternating group A_3.
inline const std::vector<int>& subgroup_members(SubgroupId g) {
    static const std::vector<int> g1 = {0};
    static const std::vector<int> g2 = {0, 1};
    static const std::vector<int> g3 = {0, 2};
    static const std::vector<int> g4 = {0, 5};
    static const std::vector<int> g5 = {0, 3, 4};
    static const std::vector<int> g6 = {0, 1, 2, 3, 4, 5};
    switch (g) {
        case SubgroupId::G1: return g1;
        case SubgroupId::G2: return g2;
        case SubgroupId::G3: return g3;
        case SubgroupId::G4: return g4;
        case SubgroupId::G5: return g5;
        case SubgroupId::G6: return g6;
    }
    throw structural_error("SubgroupId: invalid value");
}

} // namespace homsuper
