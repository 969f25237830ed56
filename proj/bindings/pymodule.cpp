#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "nilpair/catalog.hpp"
#include "nilpair/engine.hpp"
#include "nilpair/pairlab.hpp"
#include "nilpair/partition.hpp"
#include "nilpair/rootsys.hpp"

namespace py = pybind11;
using namespace nilpair;
using nlohmann::json;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list l;
            for (const auto& x : j) l.append(json_to_py(x));
            return l;
        }
        case json::value_t::object: {
            py::dict d;
            for (auto it = j.begin(); it != j.end(); ++it)
                d[py::str(it.key())] = json_to_py(it.value());
            return d;
        }
        default: return py::none();
    }
}

json certificate_json(const ClassicalFamily& fam, const Partition& p) {
    json j;
    j["family"] = family_name(fam.fam);
    j["size"] = fam.size;
    j["partition"] = p.parts;
    if (!validate_partition(fam, p)) {
        j["valid"] = false;
        return j;
    }
    j["valid"] = true;
    j["even"] = is_even_orbit(p);
    if (is_even_orbit(p)) j["levi"] = levi_of_even_orbit(fam, p).str();
    j["k"] = reductive_centralizer(fam, p).str();
    try {
        j["zk"] = double_centralizer(fam, p).str();
    } catch (const error&) {
        j["zk"] = nullptr;
    }
    auto cert = is_excellent(fam, p);
    j["excellent"] = cert.verdict;
    j["very_even"] = is_very_even(fam, p);
    j["dimA"] = cert.dim_center_levi;
    j["rank_zk"] = cert.rank_double_centralizer;
    j["anomaly"] = cert.anomaly_flag;
    return j;
}

Quadruple fixture_by_name(const std::string& name, int n, int m, int k) {
    if (name == "sp4-z") return construct_sp4_examples().first;
    if (name == "sp4-nonz") return construct_sp4_examples().second;
    if (name == "sp4n") return construct_sp4n_series(n);
    if (name == "sl3") return construct_sl3_pair();
    if (name == "rect-sl") return construct_rect_pn_sl(n, m);
    if (name == "rect-sp") return construct_rect_apn_sp(k, n);
    throw error("unknown_fixture", name);
}

}  // namespace

PYBIND11_MODULE(_nilpair, mod) {
    mod.doc() = "exact-arithmetic laboratory for nilpotent pairs, dual pairs and "
                "excellent sheets in the classical Lie algebras";

    mod.def(
        "classify",
        [](const std::string& algebra, const std::vector<int>& parts) {
            return json_to_py(
                certificate_json(parse_algebra(algebra), Partition(parts)));
        },
        py::arg("algebra"), py::arg("partition"),
        "partition invariants: Levi, centralizer, double centralizer, excellence");

    mod.def(
        "enumerate_excellent",
        [](const std::string& family, int max_size) {
            Family f = parse_algebra(family + "2").fam;
            py::list out;
            for (const auto& e : enumerate_excellent(f, max_size)) {
                py::dict d;
                d["algebra"] = e.fam.str();
                d["partition"] = e.p.parts;
                d["dimA"] = e.cert.dim_center_levi;
                d["anomaly"] = e.cert.anomaly_flag;
                out.append(d);
            }
            return out;
        },
        py::arg("family"), py::arg("max_size"));

    mod.def(
        "transpose",
        [](const std::vector<int>& parts) { return transpose(Partition(parts)).parts; },
        py::arg("partition"));

    mod.def(
        "dominance_leq",
        [](const std::vector<int>& p, const std::vector<int>& q) {
            return dominance_leq(Partition(p), Partition(q));
        },
        py::arg("p"), py::arg("q"));

    mod.def(
        "weighted_diagram",
        [](const std::string& algebra, const std::vector<int>& parts) {
            return weighted_diagram_from_partition(parse_algebra(algebra), Partition(parts));
        },
        py::arg("algebra"), py::arg("partition"));

    mod.def(
        "verify_fixture",
        [](const std::string& name, int n, int m, int l, int k, const std::string& tail) {
            if (name == "spr") {
                auto t = tail.empty() ? Partition() : parse_partition(tail);
                auto rep = verify_spr(construct_spr_sp(m, n, l, t));
                return json_to_py(json::parse(report_to_json(rep)));
            }
            auto rep = verify_structure(fixture_by_name(name, n, m, k));
            return json_to_py(json::parse(report_to_json(rep)));
        },
        py::arg("name"), py::arg("n") = 1, py::arg("m") = 3, py::arg("l") = 0,
        py::arg("k") = 1, py::arg("tail") = "");

    mod.def(
        "classify_fixture",
        [](const std::string& name, int n, int m, int k) {
            auto q = fixture_by_name(name, n, m, k);
            auto cls = classify_pair(q);
            py::dict d;
            d["kind"] = kind_name(cls.kind);
            d["dim_z"] = cls.dim_z;
            d["rank"] = cls.rank_g;
            if (cls.subtype) d["subtype"] = subtype_name(*cls.subtype);
            if (cls.extra_biweight) {
                py::tuple t(2);
                t[0] = rat_to_string(cls.extra_biweight->first);
                t[1] = rat_to_string(cls.extra_biweight->second);
                d["extra_biweight"] = t;
            }
            return d;
        },
        py::arg("name"), py::arg("n") = 1, py::arg("m") = 3, py::arg("k") = 1);

    mod.def(
        "sheet_section_report",
        [](const std::string& algebra, const std::vector<int>& parts, int samples) {
            auto fam = parse_algebra(algebra);
            Model g = build_model(fam);
            QMat e = nilpotent_from_partition(g, Partition(parts));
            auto sec = sheet_section(g, e, samples);
            py::dict d;
            d["dim_section"] = sec.dim_section;
            d["orbit_dim"] = sec.orbit_dim;
            d["constant_orbit_dim"] = sec.constant_orbit_dim;
            py::list dims;
            for (const auto& s : sec.samples) dims.append(s.dim_z);
            d["sample_dims"] = dims;
            return d;
        },
        py::arg("algebra"), py::arg("partition"), py::arg("samples") = 10);

    mod.def("zero_weight_levi", [](const std::string& diagram) {
        auto wd = parse_diagram(diagram);
        auto rs = build_root_system(wd.type);
        auto lev = zero_weight_levi(rs, wd.labels);
        return py::make_tuple(type_list_str(lev.components), lev.center_dim);
    });

    mod.def("tables_check", [] {
        auto rep = consistency_report();
        py::dict d;
        d["checks_run"] = rep.checks_run;
        d["ok"] = rep.ok();
        py::list issues;
        for (const auto& i : rep.issues) issues.append(i.where + ": " + i.what);
        d["issues"] = issues;
        return d;
    });

    mod.def("catalog_json", [] { return catalog_as_json(); });

    py::register_exception<error>(mod, "NilpairError");
}
