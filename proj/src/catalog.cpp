#include "nilpair/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "nilpair/rational.hpp"

namespace nilpair {

namespace {

// One record per line, schema versioned. Diagrams are in Bourbaki node order;
// the printed sources list exceptional chains right-to-left, so the
// transcription reverses them (each row is re-derived by the zero-weight
// Levi check in consistency_report, which pins the ordering).
const char* kCatalogData = R"JSON(
{"schema":"nilpair-orbit-catalog/1"}
{"type":"exceptional","id":"F4:~A2","algebra":"F4","label":"~A2","diagram":[0,0,0,2],"levi_ss":"B3","k":"G2","dimA":1,"partner":"F4:B3"}
{"type":"exceptional","id":"F4:B3","algebra":"F4","label":"B3","diagram":[2,2,0,0],"levi_ss":"~A2","k":"A1","dimA":2,"partner":"F4:~A2"}
{"type":"exceptional","id":"E6:2A2","algebra":"E6","label":"2A2","diagram":[2,0,0,0,0,2],"levi_ss":"D4","k":"G2","dimA":2,"partner":"E6:D4"}
{"type":"exceptional","id":"E6:D4","algebra":"E6","label":"D4","diagram":[0,2,0,2,0,0],"levi_ss":"2A2","k":"A2","dimA":2,"partner":"E6:2A2"}
{"type":"exceptional","id":"E7:(3A1)''","algebra":"E7","label":"(3A1)''","diagram":[0,0,0,0,0,0,2],"levi_ss":"E6","k":"F4","dimA":1,"partner":"E7:E6"}
{"type":"exceptional","id":"E7:E6","algebra":"E7","label":"E6","diagram":[2,0,2,2,0,2,0],"levi_ss":"(3A1)''","k":"A1","dimA":4,"partner":"E7:(3A1)''"}
{"type":"exceptional","id":"E7:A2+3A1","algebra":"E7","label":"A2+3A1","diagram":[0,2,0,0,0,0,0],"levi_ss":"A6","k":"G2","dimA":1,"partner":"E7:A6"}
{"type":"exceptional","id":"E7:A6","algebra":"E7","label":"A6","diagram":[0,0,0,2,0,2,0],"levi_ss":"A2+3A1","k":"A1","dimA":2,"partner":"E7:A2+3A1"}
{"type":"exceptional","id":"E7:D4","algebra":"E7","label":"D4","diagram":[2,0,2,0,0,0,0],"levi_ss":"(A5)''","k":"C3","dimA":2,"partner":"E7:(A5)''"}
{"type":"exceptional","id":"E7:(A5)''","algebra":"E7","label":"(A5)''","diagram":[2,0,0,0,0,2,2],"levi_ss":"D4","k":"G2","dimA":3,"partner":"E7:D4"}
{"type":"exceptional","id":"E7:A3+A2+A1","algebra":"E7","label":"A3+A2+A1","diagram":[0,0,0,0,2,0,0],"levi_ss":"A4+A2","k":"A1","dimA":1,"partner":"E7:A4+A2"}
{"type":"exceptional","id":"E7:A4+A2","algebra":"E7","label":"A4+A2","diagram":[0,0,0,2,0,0,0],"levi_ss":"A3+A2+A1","k":"A1","dimA":1,"partner":"E7:A3+A2+A1"}
{"type":"exceptional","id":"E7:2A2","algebra":"E7","label":"2A2","diagram":[0,0,0,0,0,2,0],"levi_ss":"D5+A1","k":"G2+A1","dimA":1,"note":"printed separated from the paired blocks; kept unpaired with this cross-reference"}
{"type":"exceptional","id":"E8:D4","algebra":"E8","label":"D4","diagram":[0,0,0,0,0,0,2,2],"levi_ss":"E6","k":"F4","dimA":2,"partner":"E8:E6"}
{"type":"exceptional","id":"E8:E6","algebra":"E8","label":"E6","diagram":[2,0,0,0,0,2,2,2],"levi_ss":"D4","k":"G2","dimA":4,"partner":"E8:D4"}
{"type":"exceptional","id":"E8:2A2","algebra":"E8","label":"2A2","diagram":[2,0,0,0,0,0,0,0],"levi_ss":"D7","k":"2G2","dimA":1}
{"type":"exceptional","id":"E8:D4(a1)+A2","algebra":"E8","label":"D4(a1)+A2","diagram":[0,2,0,0,0,0,0,0],"levi_ss":"A7","k":"A2","dimA":1}
{"type":"exceptional","id":"E8:A4+A2","algebra":"E8","label":"A4+A2","diagram":[0,0,0,0,0,2,0,0],"levi_ss":"D5+A2","k":"2A1","dimA":1}
{"type":"exceptional","id":"E8:A6","algebra":"E8","label":"A6","diagram":[2,0,0,0,0,2,0,0],"levi_ss":"D4+A2","k":"2A1","dimA":2}
{"type":"classical","id":"T2:sl","family":"sl","partition":"(n^m)","constraints":"nm >= 2","k":"sl_m","dimA":"n-1","instances":[{"size":4,"partition":"2,2","k":"sl2","dimA":1},{"size":6,"partition":"2,2,2","k":"sl3","dimA":1},{"size":6,"partition":"3,3","k":"sl2","dimA":2}]}
{"type":"classical","id":"T2:sp-even","family":"sp","partition":"((2n)^m)","constraints":"m != 2","k":"so_m","dimA":"n","instances":[{"size":2,"partition":"2","k":"0","dimA":1},{"size":6,"partition":"2,2,2","k":"so3","dimA":1},{"size":12,"partition":"4,4,4","k":"so3","dimA":2}]}
{"type":"classical","id":"T2:sp-odd","family":"sp","partition":"(m^{2n},1^{2l})","constraints":"m odd","k":"sp_{2n}+sp_{2l}","dimA":"(m-1)/2","instances":[{"size":10,"partition":"3,3,1,1,1,1","k":"sp2+sp4","dimA":1},{"size":6,"partition":"3,3","k":"sp2","dimA":1},{"size":14,"partition":"3,3,3,3,1,1","k":"sp2+sp4","dimA":1}]}
{"type":"classical","id":"T2:so-even","family":"so","partition":"(m^n)","constraints":"m, n even","k":"sp_n","dimA":"m/2","instances":[{"size":8,"partition":"2,2,2,2","k":"sp4","dimA":1},{"size":8,"partition":"4,4","k":"sp2","dimA":2},{"size":12,"partition":"6,6","k":"sp2","dimA":3}]}
{"type":"classical","id":"T2:so-odd","family":"so","partition":"(m^n,1^l)","constraints":"m odd, n != 2, l != 2; dimA gains 1 in the regular case n = l = 1","k":"so_n+so_l","dimA":"(m-1)/2","instances":[{"size":7,"partition":"3,1,1,1,1","k":"so4","dimA":1},{"size":10,"partition":"3,3,3,1","k":"so3","dimA":1},{"size":6,"partition":"5,1","k":"0","dimA":3}]}
{"type":"fixture_orbit","algebra":"sp4","partition":"2,2","nonspecial":true,"note":"first member of the Z-type series at n=1"}
{"type":"fixture_orbit","algebra":"sp8","partition":"4,4","nonspecial":true,"note":"first member of the Z-type series at n=2"}
{"type":"fixture_orbit","algebra":"sp12","partition":"6,6","nonspecial":true,"note":"first member of the Z-type series at n=3"}
)JSON";

Catalog parse_catalog() {
    Catalog cat;
    std::istringstream in(kCatalogData);
    std::string line;
    bool versioned = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line);
        if (j.contains("schema")) {
            if (j["schema"] != "nilpair-orbit-catalog/1")
                throw error("data_corruption", "unknown catalog schema");
            versioned = true;
            continue;
        }
        std::string type = j.at("type");
        if (type == "exceptional") {
            OrbitRecord r;
            r.id = j.at("id");
            r.algebra = j.at("algebra");
            r.orbit_label = j.at("label");
            r.diagram = j.at("diagram").get<std::vector<int>>();
            r.levi_ss = j.at("levi_ss");
            r.k_type = j.at("k");
            r.dim_section = j.at("dimA");
            if (j.contains("partner")) r.partner = j.at("partner").get<std::string>();
            if (j.contains("note")) r.note = j.at("note").get<std::string>();
            cat.exceptional.push_back(std::move(r));
        } else if (type == "classical") {
            ClassicalRow r;
            r.id = j.at("id");
            std::string fam = j.at("family");
            r.family = fam == "sl" ? Family::SL : fam == "so" ? Family::SO : Family::SP;
            r.partition_pattern = j.at("partition");
            r.constraints = j.at("constraints");
            r.k_pattern = j.at("k");
            r.dim_section_pattern = j.at("dimA");
            for (const auto& inst : j.at("instances"))
                r.instances.emplace_back(inst.at("size").get<int>(),
                                         inst.at("partition").get<std::string>() + "|" +
                                             inst.at("k").get<std::string>() + "|" +
                                             std::to_string(inst.at("dimA").get<int>()));
            cat.classical.push_back(std::move(r));
        } else if (type == "fixture_orbit") {
            FixtureOrbitRecord r;
            r.algebra = j.at("algebra");
            r.partition = j.at("partition");
            r.nonspecial = j.at("nonspecial");
            r.note = j.at("note");
            cat.fixture_orbits.push_back(std::move(r));
        } else {
            throw error("data_corruption", "unknown record type " + type);
        }
    }
    if (!versioned) throw error("data_corruption", "missing schema line");
    return cat;
}

// strip decorations from an orbit label to get a Cartan type list: tildes
// mark short-root subsystems, primes mark conjugacy classes
std::string plain_type(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c != '~' && c != '\'' && c != '(' && c != ')') out.push_back(c);
    return out;
}

AlgebraDescriptor parse_descriptor(const std::string& s) {
    AlgebraDescriptor d;
    if (s == "0" || s.empty()) return d;
    std::istringstream ss(s);
    std::string item;
    std::vector<SimpleFactor> fs;
    int abelian = 0;
    while (std::getline(ss, item, '+')) {
        int mult = 1;
        auto caret = item.find('^');
        if (caret != std::string::npos) {
            mult = std::stoi(item.substr(caret + 1));
            item = item.substr(0, caret);
        }
        if (item.rfind("ab", 0) == 0) {
            abelian += std::stoi(item.substr(2));
            continue;
        }
        ClassicalFamily f = parse_algebra(item);
        for (int c = 0; c < mult; ++c) fs.push_back({f.fam, f.size});
    }
    return AlgebraDescriptor::make(std::move(fs), abelian);
}

ConsistencyReport consistency_report_for(const Catalog& cat) {
    ConsistencyReport rep;
    auto issue = [&](const std::string& where, const std::string& what) {
        rep.issues.push_back({where, what});
    };

    std::map<std::string, int> counts;
    std::map<std::string, const OrbitRecord*> by_id;
    for (const auto& r : cat.exceptional) {
        counts[r.algebra]++;
        by_id[r.id] = &r;
    }
    std::map<std::string, int> expected{{"F4", 2}, {"E6", 2}, {"E7", 9}, {"E8", 6}};
    for (auto& [alg, n] : expected) {
        rep.checks_run++;
        if (counts[alg] != n)
            issue(alg, "expected " + std::to_string(n) + " rows, found " +
                           std::to_string(counts[alg]));
    }

    std::map<std::string, RootSystem> systems;
    for (const auto& r : cat.exceptional) {
        if (!systems.count(r.algebra))
            systems.emplace(r.algebra, build_root_system(parse_cartan_type(r.algebra)));
        const RootSystem& rs = systems.at(r.algebra);

        rep.checks_run++;
        bool even = std::all_of(r.diagram.begin(), r.diagram.end(),
                                [](int l) { return l == 0 || l == 2; });
        if (!even) issue(r.id, "diagram has odd labels");

        rep.checks_run++;
        LeviResult lev = zero_weight_levi(rs, r.diagram);
        auto want = parse_type_list(plain_type(r.levi_ss));
        if (lev.components != want)
            issue(r.id, "zero-weight Levi is " + type_list_str(lev.components) +
                            ", table says " + r.levi_ss);

        if (r.partner) {
            rep.checks_run += 2;
            auto it = by_id.find(*r.partner);
            if (it == by_id.end()) {
                issue(r.id, "partner " + *r.partner + " missing");
            } else {
                const OrbitRecord& p = *it->second;
                if (parse_type_list(plain_type(r.orbit_label)) !=
                    parse_type_list(plain_type(p.levi_ss)))
                    issue(r.id, "label does not match partner's Levi");
                if (r.dim_section != rank_of_type_list(parse_type_list(plain_type(p.k_type))))
                    issue(r.id, "dimA != rank of partner's k");
            }
        }
    }

    for (const auto& row : cat.classical) {
        for (const auto& [size, packed] : row.instances) {
            auto bar1 = packed.find('|');
            auto bar2 = packed.find('|', bar1 + 1);
            std::string pstr = packed.substr(0, bar1);
            std::string kstr = packed.substr(bar1 + 1, bar2 - bar1 - 1);
            int dima = std::stoi(packed.substr(bar2 + 1));
            ClassicalFamily fam(row.family, size);
            Partition p = parse_partition(pstr);
            rep.checks_run += 3;
            if (!validate_partition(fam, p)) {
                issue(row.id, pstr + " invalid for " + fam.str());
                continue;
            }
            auto cert = is_excellent(fam, p);
            if (!cert.verdict) issue(row.id, pstr + " not excellent in " + fam.str());
            if (cert.dim_center_levi != dima)
                issue(row.id, pstr + " dimA " + std::to_string(cert.dim_center_levi) +
                                  " != " + std::to_string(dima));
            auto k = reductive_centralizer(fam, p);
            if (!iso_equal(k, parse_descriptor(kstr)))
                issue(row.id, pstr + " k " + k.str() + " != " + kstr);
        }
    }

    for (const auto& f : cat.fixture_orbits) {
        rep.checks_run++;
        ClassicalFamily fam = parse_algebra(f.algebra);
        if (!validate_partition(fam, parse_partition(f.partition)))
            issue(f.algebra, f.partition + " invalid");
    }
    return rep;
}

}  // namespace

const Catalog& load_tables() {
    static Catalog cat = [] {
        Catalog c = parse_catalog();
        auto rep = consistency_report_for(c);
        if (!rep.ok())
            throw error("data_corruption", "catalog failed validation: " +
                                               rep.issues.front().where + ": " +
                                               rep.issues.front().what);
        return c;
    }();
    return cat;
}

const OrbitRecord* lookup(const std::string& algebra, const std::string& orbit) {
    const Catalog& cat = load_tables();
    for (const auto& r : cat.exceptional) {
        if (r.algebra != algebra) continue;
        if (r.orbit_label == orbit || r.id == orbit) return &r;
    }
    return nullptr;
}

ConsistencyReport consistency_report() { return consistency_report_for(load_tables()); }

std::string catalog_as_text() {
    const Catalog& cat = load_tables();
    std::ostringstream os;
    os << "exceptional excellent orbits (non-regular)\n";
    os << "algebra  orbit          [l,l]       k        dimA  partner\n";
    for (const auto& r : cat.exceptional) {
        std::ostringstream diag;
        for (int l : r.diagram) diag << l;
        os << "  " << r.algebra << "  " << r.orbit_label;
        for (size_t i = r.orbit_label.size(); i < 13; ++i) os << ' ';
        os << r.levi_ss;
        for (size_t i = r.levi_ss.size(); i < 12; ++i) os << ' ';
        os << r.k_type;
        for (size_t i = r.k_type.size(); i < 9; ++i) os << ' ';
        os << r.dim_section << "     " << (r.partner ? *r.partner : "-") << "   [" << diag.str()
           << "]\n";
    }
    os << "\nclassical families\n";
    for (const auto& r : cat.classical) {
        os << "  " << family_name(r.family) << "  " << r.partition_pattern << "  k = "
           << r.k_pattern << "  dimA = " << r.dim_section_pattern << "  (" << r.constraints
           << ")\n";
    }
    return os.str();
}

std::string catalog_as_json() {
    const Catalog& cat = load_tables();
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : cat.exceptional) {
        nlohmann::json j;
        j["id"] = r.id;
        j["algebra"] = r.algebra;
        j["label"] = r.orbit_label;
        j["diagram"] = r.diagram;
        j["levi_ss"] = r.levi_ss;
        j["k"] = r.k_type;
        j["dimA"] = r.dim_section;
        if (r.partner) j["partner"] = *r.partner;
        if (r.note) j["note"] = *r.note;
        out.push_back(j);
    }
    for (const auto& r : cat.classical) {
        nlohmann::json j;
        j["id"] = r.id;
        j["family"] = family_name(r.family);
        j["partition"] = r.partition_pattern;
        j["constraints"] = r.constraints;
        j["k"] = r.k_pattern;
        j["dimA"] = r.dim_section_pattern;
        out.push_back(j);
    }
    for (const auto& r : cat.fixture_orbits) {
        nlohmann::json j;
        j["algebra"] = r.algebra;
        j["partition"] = r.partition;
        j["nonspecial"] = r.nonspecial;
        j["note"] = r.note;
        out.push_back(j);
    }
    return out.dump(2);
}

}  // namespace nilpair
