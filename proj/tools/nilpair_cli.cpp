#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "nilpair/catalog.hpp"
#include "nilpair/engine.hpp"
#include "nilpair/pairlab.hpp"
#include "nilpair/partition.hpp"
#include "nilpair/rootsys.hpp"

using namespace nilpair;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "text";
    uint64_t seed = kDefaultSeed;
};

json classify_json(const ClassicalFamily& fam, const Partition& p) {
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
    } catch (const error& e) {
        j["zk"] = nullptr;
        j["zk_refused"] = e.code;
    }
    auto cert = is_excellent(fam, p);
    j["excellent"] = cert.verdict;
    j["very_even"] = is_very_even(fam, p);
    j["dimA"] = cert.dim_center_levi;
    j["rank_zk"] = cert.rank_double_centralizer;
    j["anomaly"] = cert.anomaly_flag;
    j["diagram"] = weighted_diagram_from_partition(fam, p);
    return j;
}

void print_classify_text(const json& j) {
    std::cout << j["family"].get<std::string>() << j["size"].get<int>() << "  partition ";
    bool first = true;
    for (int x : j["partition"]) {
        if (!first) std::cout << ",";
        std::cout << x;
        first = false;
    }
    std::cout << "\n";
    if (!j["valid"].get<bool>()) {
        std::cout << "  invalid partition for this algebra\n";
        return;
    }
    std::cout << "  even=" << (j["even"].get<bool>() ? "true" : "false");
    if (j.contains("levi") && !j["levi"].is_null())
        std::cout << "  levi=" << j["levi"].get<std::string>();
    std::cout << "\n  k=" << j["k"].get<std::string>();
    if (j["zk"].is_null())
        std::cout << "  zk=(refused: multiplicity 2)";
    else
        std::cout << "  zk=" << j["zk"].get<std::string>();
    std::cout << "\n  excellent=" << (j["excellent"].get<bool>() ? "true" : "false")
              << "  dimA=" << j["dimA"].get<int>();
    if (j["anomaly"].get<bool>()) std::cout << "  (regular-orbit anomaly)";
    std::cout << "\n";
}

json report_json(const VerifyReport& r) { return json::parse(report_to_json(r)); }

void print_report_text(const VerifyReport& r) {
    std::cout << "fixture " << r.fixture << "\n";
    for (const auto& c : r.checks) {
        std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.rule;
        if (!c.pass && !c.witness.empty()) std::cout << "  (" << c.witness << ")";
        std::cout << "\n";
    }
}

int finish_report(const VerifyReport& r, const Options& opt) {
    if (opt.format == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else
        print_report_text(r);
    if (!r.all_pass()) {
        for (const auto& c : r.checks)
            if (!c.pass) {
                std::cerr << "failed check: " << c.name << "\n";
                return 1;
            }
    }
    return 0;
}

void append_classification(VerifyReport& rep, const Quadruple& q,
                           PairKind want_kind,
                           std::optional<AlmostSubtype> want_sub = std::nullopt) {
    auto cls = classify_pair(q);
    std::string got = kind_name(cls.kind);
    if (cls.subtype) got += "/" + subtype_name(*cls.subtype);
    std::string want = kind_name(want_kind);
    if (want_sub) want += "/" + subtype_name(*want_sub);
    rep.checks.push_back({"classification", "pair classifies as " + want,
                          cls.kind == want_kind && cls.subtype == want_sub, "got " + got});
}

Quadruple build_fixture(const std::string& name, int n, int m, int k) {
    if (name == "sp4-z") return construct_sp4_examples().first;
    if (name == "sp4-nonz") return construct_sp4_examples().second;
    if (name == "sp4n") return construct_sp4n_series(n);
    if (name == "sl3") return construct_sl3_pair();
    if (name == "rect-sl") return construct_rect_pn_sl(n, m);
    if (name == "rect-sp") return construct_rect_apn_sp(k, n);
    throw error("unknown_fixture", name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilpair: nilpotent pairs, dual pairs and excellent sheets in classical Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for generic-rank sampling");

    std::string algebra, partition_str, fixture, family_str, tail_str;
    int n = 1, m = 3, l = 0, kpar = 1, max_size = 6, samples = 10;
    bool check_flag = false;

    auto* classify = app.add_subcommand("classify", "partition invariants and excellence");
    classify->add_option("--algebra", algebra, "e.g. sp10")->required();
    classify->add_option("--partition", partition_str, "comma list")->required();

    auto* enumerate = app.add_subcommand("enumerate", "excellent partitions up to a size");
    enumerate->add_option("--family", family_str, "sl, so or sp")->required();
    enumerate->add_option("--max", max_size, "maximum matrix size")->required();

    auto* verify = app.add_subcommand("verify", "run the structural checks on a fixture");
    verify->add_option("--fixture", fixture,
                       "sp4-z | sp4-nonz | sp4n | sl3 | rect-sl | rect-sp | spr")
        ->required();
    verify->add_option("--n", n, "fixture parameter n");
    verify->add_option("--m", m, "fixture parameter m");
    verify->add_option("--l", l, "fixture parameter l");
    verify->add_option("--k", kpar, "fixture parameter k");
    verify->add_option("--tail", tail_str, "tail partition for spr");

    auto* dual = app.add_subcommand("dual-pair", "dual pair report for a fixture");
    dual->add_option("--fixture", fixture, "as for verify")->required();
    dual->add_option("--n", n, "fixture parameter n");
    dual->add_option("--m", m, "fixture parameter m");
    dual->add_option("--k", kpar, "fixture parameter k");

    auto* section = app.add_subcommand("section", "sheet section through an excellent orbit");
    section->add_option("--algebra", algebra, "e.g. sl6")->required();
    section->add_option("--partition", partition_str, "comma list")->required();
    section->add_option("--samples", samples, "number of sampled points");

    auto* tables = app.add_subcommand("tables", "dump or check the orbit catalog");
    tables->add_flag("--check", check_flag, "run the full consistency report");

    auto* duality = app.add_subcommand("duality", "type A duality property run");
    duality->add_option("--max", max_size, "largest N");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*classify) {
            auto fam = parse_algebra(algebra);
            auto p = parse_partition(partition_str);
            json j = classify_json(fam, p);
            if (opt.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                print_classify_text(j);
            return 0;
        }
        if (*enumerate) {
            Family f = parse_algebra(family_str + "2").fam;
            auto all = enumerate_excellent(f, max_size);
            if (opt.format == "json") {
                json out = json::array();
                for (const auto& e : all) {
                    json j;
                    j["algebra"] = e.fam.str();
                    j["partition"] = e.p.parts;
                    j["dimA"] = e.cert.dim_center_levi;
                    j["anomaly"] = e.cert.anomaly_flag;
                    out.push_back(j);
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (const auto& e : all)
                    std::cout << e.fam.str() << "  (" << e.p.str() << ")  dimA="
                              << e.cert.dim_center_levi << (e.cert.anomaly_flag ? "  regular" : "")
                              << "\n";
            }
            return 0;
        }
        if (*verify) {
            if (fixture == "spr") {
                auto tail = tail_str.empty() ? Partition() : parse_partition(tail_str);
                auto s = construct_spr_sp(m, n, l, tail);
                return finish_report(verify_spr(s, opt.seed), opt);
            }
            Quadruple q = build_fixture(fixture, n, m, kpar);
            VerifyReport rep = verify_structure(q, opt.seed);
            if (fixture == "sp4n") {
                append_classification(rep, q, PairKind::almost_principal, AlmostSubtype::z_type);
                auto z = centralizer(q.g(), {q.e1, q.e2});
                rep.checks.push_back({"dim_z", "dim z(e1,e2) = 2n+1",
                                      z.dim() == 2 * n + 1, std::to_string(z.dim())});
            } else if (fixture == "sp4-z") {
                append_classification(rep, q, PairKind::almost_principal, AlmostSubtype::z_type);
            } else if (fixture == "sp4-nonz" || fixture == "rect-sp") {
                append_classification(rep, q, PairKind::almost_principal,
                                      AlmostSubtype::non_z_type);
            } else if (fixture == "sl3" || fixture == "rect-sl") {
                append_classification(rep, q, PairKind::principal);
            }
            return finish_report(rep, opt);
        }
        if (*dual) {
            Quadruple q = build_fixture(fixture, n, m, kpar);
            auto rep = dual_pair_check(q, opt.seed);
            json j;
            j["fixture"] = q.name;
            j["dim_k1"] = rep.k1.dim();
            j["dim_k2"] = rep.k2.dim();
            j["commute"] = rep.commute;
            j["mutual"] = rep.mutual;
            j["reductive"] = rep.reductive;
            j["rectangular"] = rep.rectangular == RectVerdict::rectangular;
            j["graded_surjective"] = rep.graded_surjective;
            j["center_trivial"] = rep.center_trivial;
            if (opt.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "fixture " << q.name << "\n  dim k1=" << rep.k1.dim()
                          << " dim k2=" << rep.k2.dim() << "\n  commute=" << rep.commute
                          << " mutual=" << rep.mutual << " reductive=" << rep.reductive
                          << " rectangular="
                          << (rep.rectangular == RectVerdict::rectangular ? "yes" : "not-shown")
                          << "\n";
            return rep.mutual ? 0 : 1;
        }
        if (*section) {
            auto fam = parse_algebra(algebra);
            auto p = parse_partition(partition_str);
            Model g = build_model(fam);
            QMat e = nilpotent_from_partition(g, p);
            auto sec = sheet_section(g, e, samples, opt.seed);
            json j;
            j["algebra"] = fam.str();
            j["partition"] = p.parts;
            j["dim_section"] = sec.dim_section;
            j["orbit_dim"] = sec.orbit_dim;
            j["constant_orbit_dim"] = sec.constant_orbit_dim;
            json arr = json::array();
            for (const auto& s : sec.samples) {
                json sj;
                sj["dim_z"] = s.dim_z;
                sj["semisimple_in_kv"] = s.semisimple_in_kv;
                arr.push_back(sj);
            }
            j["samples"] = arr;
            if (opt.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                std::cout << fam.str() << " (" << p.str() << ")  dim section="
                          << sec.dim_section << "  orbit dim=" << sec.orbit_dim
                          << "  constant=" << (sec.constant_orbit_dim ? "yes" : "NO") << "\n";
            return sec.constant_orbit_dim ? 0 : 1;
        }
        if (*tables) {
            if (check_flag) {
                auto rep = consistency_report();
                if (opt.format == "json") {
                    json j;
                    j["checks_run"] = rep.checks_run;
                    j["ok"] = rep.ok();
                    json arr = json::array();
                    for (const auto& i : rep.issues)
                        arr.push_back({{"where", i.where}, {"what", i.what}});
                    j["issues"] = arr;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "catalog checks run: " << rep.checks_run << "\n";
                    for (const auto& i : rep.issues)
                        std::cout << "  ISSUE " << i.where << ": " << i.what << "\n";
                    std::cout << (rep.ok() ? "all consistent\n" : "inconsistencies found\n");
                }
                return rep.ok() ? 0 : 1;
            }
            std::cout << (opt.format == "json" ? catalog_as_json() : catalog_as_text()) << "\n";
            return 0;
        }
        if (*duality) {
            int bad = 0;
            long pairs = 0;
            for (int nn = 2; nn <= max_size; ++nn) {
                auto ps = partitions_of(nn);
                for (const auto& p : ps) {
                    if (!(transpose(transpose(p)) == p)) ++bad;
                    for (const auto& q : ps) {
                        if (!dominance_leq(p, q)) continue;
                        ++pairs;
                        if (!dominance_leq(spaltenstein_dual_A(q), spaltenstein_dual_A(p)))
                            ++bad;
                    }
                }
            }
            std::cout << "checked " << pairs << " comparable pairs up to N=" << max_size
                      << ", violations: " << bad << "\n";
            return bad == 0 ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
