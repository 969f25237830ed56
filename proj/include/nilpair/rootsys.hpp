#ifndef NILPAIR_ROOTSYS_HPP
#define NILPAIR_ROOTSYS_HPP

#include <string>
#include <vector>

// Combinatorial root systems for all simple types, Bourbaki node ordering.
// Used to read zero-weight Levi subsystems off weighted Dynkin diagrams.

namespace nilpair {

struct CartanType {
    char letter = 'A';  // 'A'..'G'
    int rank = 1;

    bool operator==(const CartanType&) const = default;
    auto operator<=>(const CartanType&) const = default;
    std::string str() const { return std::string(1, letter) + std::to_string(rank); }
};

CartanType parse_cartan_type(const std::string& s);

struct RootSystem {
    CartanType type;
    // Cartan matrix, convention C[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<int>> cartan;
    std::vector<int> dsym;  // symmetrizer: (alpha_i, alpha_i)/2 up to scale
    std::vector<std::vector<int>> roots;  // all roots in simple-root coordinates

    int rank() const { return type.rank; }
    long dim() const { return static_cast<long>(roots.size()) + rank(); }
    // symmetric bilinear form (alpha_i, alpha_j)
    long pairing(const std::vector<int>& a, const std::vector<int>& b) const;
};

RootSystem build_root_system(CartanType t);

struct WeightedDiagram {
    CartanType type;
    std::vector<int> labels;  // one per simple root, Bourbaki order
};

// compact form "E7:0100000"
WeightedDiagram parse_diagram(const std::string& s);

struct LeviResult {
    std::vector<CartanType> components;  // normalized (B1/C1 -> A1, B2 canonical, D3 -> A3)
    int center_dim = 0;
    int zero_root_count = 0;
};

LeviResult zero_weight_levi(const RootSystem& rs, const std::vector<int>& labels);

// Canonical "+"-joined component list, e.g. "D5+A1"; "0" for the empty system.
std::string type_list_str(std::vector<CartanType> comps);

// parse "D5+A1", "2G2", "G2+A1", "0"
std::vector<CartanType> parse_type_list(const std::string& s);

// dim g - dim z(h) for the even diagram; error("not_even") on odd labels
long orbit_dim_from_diagram(const RootSystem& rs, const std::vector<int>& labels);

int rank_of_type_list(const std::vector<CartanType>& comps);

}  // namespace nilpair

#endif
