#ifndef NILPAIR_CATALOG_HPP
#define NILPAIR_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "nilpair/partition.hpp"
#include "nilpair/rootsys.hpp"

// Checked-in datasets for the excellent-orbit classification: the exceptional
// rows (weighted diagram, Levi semisimple part, reductive centralizer type,
// section dimension) and the classical parametric families, with
// cross-validation hooks into the root-system and partition modules.

namespace nilpair {

struct OrbitRecord {
    std::string id;             // "E7:2A2"
    std::string algebra;        // "F4", "E7", ...
    std::string orbit_label;    // "~A2", "(3A1)''", "D4(a1)+A2"
    std::vector<int> diagram;   // weighted Dynkin diagram, Bourbaki order
    std::string levi_ss;        // Cartan type of [l,l], e.g. "B3", "D5+A1"
    std::string k_type;         // Cartan type of k (recorded data)
    int dim_section = 0;
    std::optional<std::string> partner;  // id of the paired orbit, when printed paired
    std::optional<std::string> note;
};

struct ClassicalRow {
    std::string id;       // "T2:sp-odd"
    Family family;
    std::string partition_pattern;   // e.g. "(m^{2n},1^{2l})"
    std::string constraints;
    std::string k_pattern;           // e.g. "sp_{2n}+sp_{2l}"
    std::string dim_section_pattern;
    // three concrete instances used by the validator: (size, partition)
    std::vector<std::pair<int, std::string>> instances;
};

struct FixtureOrbitRecord {
    std::string algebra;
    std::string partition;
    bool nonspecial = false;
    std::string note;
};

struct Catalog {
    std::vector<OrbitRecord> exceptional;
    std::vector<ClassicalRow> classical;
    std::vector<FixtureOrbitRecord> fixture_orbits;
};

const Catalog& load_tables();  // parses and validates the embedded data once

const OrbitRecord* lookup(const std::string& algebra, const std::string& orbit);

struct ConsistencyIssue {
    std::string where;
    std::string what;
};

struct ConsistencyReport {
    int checks_run = 0;
    std::vector<ConsistencyIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Recomputes every recomputable column: zero-weight Levi of each exceptional
// diagram, evenness of the diagrams, the paired-row duality and rank checks,
// and the classical rows against the partition formulas.
ConsistencyReport consistency_report();

std::string catalog_as_text();
std::string catalog_as_json();

}  // namespace nilpair

#endif
