#include "nilpair/serialize.hpp"

#include <json.hpp>

namespace nilpair {

using nlohmann::json;

std::string matrix_to_json(const QMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows.dump();
}

QMat matrix_from_json(const std::string& text) {
    json rows = json::parse(text);
    if (!rows.is_array() || rows.empty()) return QMat(0, 0);
    QMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = rat_from_string(rows[i][j].get<std::string>());
    return m;
}

std::string subspace_to_json(const Model& g, const Subspace& s) {
    json out = json::array();
    for (const auto& m : subspace_matrices(g, s)) out.push_back(json::parse(matrix_to_json(m)));
    return out.dump();
}

std::string bigrading_to_json(const BiGrading& bg) {
    json out = json::array();
    for (const auto& [q1, q2, d] : bg.dump()) {
        json t = json::array();
        t.push_back(rat_to_string(q1));
        t.push_back(rat_to_string(q2));
        t.push_back(d);
        out.push_back(t);
    }
    return out.dump();
}

std::string root_system_to_json(const RootSystem& rs) {
    json j;
    j["type"] = rs.type.str();
    j["cartan_matrix"] = rs.cartan;
    j["roots"] = rs.roots;
    return j.dump();
}

}  // namespace nilpair
