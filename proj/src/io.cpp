#include "covlat/io.hpp"

#include <fstream>

namespace covlat {

using nlohmann::json;

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw error("poset json: expected object with integer field 'n'");
    const int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> rel;
    if (j.contains("covers")) {
        if (!j["covers"].is_array()) throw error("poset json: 'covers' must be an array");
        for (const auto& e : j["covers"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw error("poset json: each cover must be a pair of integers");
            rel.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != n)
            throw error("poset json: 'labels' must be an array of length n");
        for (const auto& e : j["labels"]) labels.push_back(e.get<std::string>());
    }
    return Poset::from_relations(n, rel, std::move(labels));
}

json poset_to_json(const Poset& p) {
    json j;
    j["n"] = p.size();
    json covers = json::array();
    for (auto [a, b] : p.cover_pairs()) covers.push_back(json::array({a, b}));
    j["covers"] = std::move(covers);
    if (p.has_labels()) j["labels"] = p.labels();
    return j;
}

MDyckPath path_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("u"))
        throw error("path json: expected object with fields 'm' and 'u'");
    std::vector<int> u;
    for (const auto& e : j["u"]) u.push_back(e.get<int>());
    return make_mdyck(j["m"].get<int>(), std::move(u));
}

json path_to_json(const MDyckPath& p) {
    return json{{"m", p.m}, {"n", p.n}, {"u", p.u}};
}

json fan_to_json(const std::vector<MDyckPath>& fan) {
    json arr = json::array();
    for (const auto& q : fan) arr.push_back(q.u);
    return arr;
}

json completion_report_to_json(const TamariCompletionReport& rep) {
    json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["input_size"] = rep.input_size;
    j["completed_size"] = rep.completed_size;
    j["isomorphic"] = rep.isomorphic;
    json added = json::array();
    for (const auto& fan : rep.added_fans) added.push_back(fan_to_json(fan));
    j["added_cuts"] = std::move(added);
    return j;
}

json conjecture_report_to_json(const ConjectureReport& rep) {
    return json{{"n", rep.n},
                {"m", rep.m},
                {"path_count", rep.path_count},
                {"injective", rep.injective},
                {"order_iso", rep.order_iso},
                {"elapsed_ms", rep.elapsed_ms}};
}

Poset poset_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw error(std::string("json parse failure: ") + e.what());
    }
    return poset_from_json(j);
}

}  // namespace covlat
