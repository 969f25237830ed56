#ifndef NILPAIR_PARTITION_HPP
#define NILPAIR_PARTITION_HPP

#include <string>
#include <vector>

// Partition combinatorics for nilpotent orbits in the classical algebras:
// Levi subalgebras of even orbits, reductive centralizers, double
// centralizers, the excellence test, and the type-A duality.

namespace nilpair {

enum class Family { SL, SO, SP };

std::string family_name(Family f);

struct ClassicalFamily {
    Family fam;
    int size;  // matrix size: N for sl_N and so_N, 2N for sp_{2N}

    ClassicalFamily(Family f, int n);
    int rank() const;
    long dim() const;
    std::string str() const;  // "sp10", "so8", "sl6"
};

ClassicalFamily parse_algebra(const std::string& s);

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all >= 1

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }

    // distinct parts with multiplicities, largest first: (d_i, r_i)
    std::vector<std::pair<int, int>> grouped() const;

    std::string str() const;  // "3,3,1,1,1,1"
};

Partition parse_partition(const std::string& s);

Partition transpose(const Partition& p);
bool validate_partition(const ClassicalFamily& fam, const Partition& p);
bool is_even_orbit(const Partition& p);

// all parts even in so_N: the partition stands for two orbits that share
// every invariant computed here, so it is kept as one record with a flag
bool is_very_even(const ClassicalFamily& fam, const Partition& p);

// Reductive algebra described by simple factors plus an abelian summand.
// so2 is representable but poisons semisimplicity; zero-dimensional factors
// (sl1, so1, so0, sp0) are dropped on construction.
struct SimpleFactor {
    Family fam;
    int size;  // matrix size, same convention as ClassicalFamily

    int rank() const;
    long dim() const;
    bool is_zero_dim() const;
    std::string str() const;
    bool operator==(const SimpleFactor&) const = default;
    auto operator<=>(const SimpleFactor&) const = default;
};

struct AlgebraDescriptor {
    std::vector<SimpleFactor> factors;  // sorted, zero-dim factors removed
    int abelian_rank = 0;

    static AlgebraDescriptor make(std::vector<SimpleFactor> fs, int abelian);

    int rank() const;  // sum of factor ranks + abelian_rank
    long dim() const;
    bool has_so2() const;
    bool semisimple() const { return abelian_rank == 0 && !has_so2(); }
    // center dimension: abelian_rank plus one per so2 factor
    int center_dim() const;

    std::string str() const;  // canonical text form, e.g. "sp2+sp4", "sl3^2+ab1"
    bool operator==(const AlgebraDescriptor&) const = default;
};

// Isomorphism-normalized comparison (B1 = C1 = A1, B2 = C2, D2 = A1+A1,
// D3 = A3, so/sp/sl low-rank coincidences identified).
std::string normalized_type_string(const AlgebraDescriptor& d);
bool iso_equal(const AlgebraDescriptor& a, const AlgebraDescriptor& b);

// Levi subalgebra z(h~) of an even orbit; requires is_even_orbit.
AlgebraDescriptor levi_of_even_orbit(const ClassicalFamily& fam, const Partition& p);

// k = z(e, h~, f), the reductive part of the centralizer.
AlgebraDescriptor reductive_centralizer(const ClassicalFamily& fam, const Partition& p);

// z(k). Refuses with error("unsupported_so2") when some so-factor of k has
// multiplicity 2: the closed formulas assume r != 2.
AlgebraDescriptor double_centralizer(const ClassicalFamily& fam, const Partition& p);

struct ExcellenceCertificate {
    bool is_even = false;
    int dim_center_levi = 0;
    int rank_double_centralizer = 0;
    bool verdict = false;
    bool anomaly_flag = false;  // the so-type (d1, 1) regular case
};

ExcellenceCertificate is_excellent(const ClassicalFamily& fam, const Partition& p);

struct ExcellentOrbit {
    ClassicalFamily fam;
    Partition p;
    ExcellenceCertificate cert;
};

// All excellent partitions for each algebra of the family up to max_size
// (SO starts at size 3; SP sizes are even).
std::vector<ExcellentOrbit> enumerate_excellent(Family family, int max_size);

// Weighted Dynkin diagram labels in Bourbaki order for the ambient type
// (A_{N-1}, B_k, C_N, D_k).
std::vector<int> weighted_diagram_from_partition(const ClassicalFamily& fam,
                                                 const Partition& p);

bool dominance_leq(const Partition& p, const Partition& q);
Partition spaltenstein_dual_A(const Partition& p);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> valid_partitions(const ClassicalFamily& fam);

}  // namespace nilpair

#endif
