#pragma once

#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "easalg/eas.hpp"
#include "easalg/freealg.hpp"
#include "easalg/leas.hpp"
#include "easalg/rewriting.hpp"

namespace easalg {

using Json = nlohmann::json;

// {"elements":["a","b"],"arrow":[["a","a"],["a","b"]],"triangle":[["a","a"],["b","b"]]}
// arrow[i][j] is elements[i] -> elements[j].
inline FiniteEAS eas_from_json(const Json& j) {
    FiniteEAS s;
    s.elements = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        if (index.count(s.elements[i])) throw std::invalid_argument("duplicate element label");
        index[s.elements[i]] = static_cast<int>(i);
    }
    auto table = [&](const char* key) {
        OpTable t;
        for (const auto& row : j.at(key)) {
            std::vector<int> r;
            for (const auto& cell : row) {
                auto it = index.find(cell.get<std::string>());
                if (it == index.end()) throw std::invalid_argument(std::string(key) + ": unknown label");
                r.push_back(it->second);
            }
            t.push_back(std::move(r));
        }
        return t;
    };
    s.arrow = table("arrow");
    s.triangle = table("triangle");
    validate_tables(s);
    return s;
}

inline Json eas_to_json(const FiniteEAS& s) {
    Json j;
    j["elements"] = s.elements;
    auto table = [&](const OpTable& t) {
        Json rows = Json::array();
        for (const auto& row : t) {
            Json r = Json::array();
            for (int v : row) r.push_back(s.elements[v]);
            rows.push_back(r);
        }
        return rows;
    };
    j["arrow"] = table(s.arrow);
    j["triangle"] = table(s.triangle);
    return j;
}

// {"dim":2,"phi":[["1","0","0","0"],...],"name":"..."} with phi rows in the
// shared lex basis order and rational entries as strings.
inline LinearEAS leas_from_json(const Json& j) {
    std::size_t d = j.at("dim").get<std::size_t>();
    const auto& rows = j.at("phi");
    if (rows.size() != d * d) throw std::invalid_argument("phi: bad row count");
    RationalMatrix m(d * d, d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
        if (rows[i].size() != d * d) throw std::invalid_argument("phi: bad col count");
        for (std::size_t c = 0; c < d * d; ++c)
            m(i, c) = parse_rational(rows[i][c].get<std::string>());
    }
    std::string name = j.value("name", std::string());
    return LinearEAS(d, std::move(m), name);
}

inline Json leas_to_json(const LinearEAS& l) {
    Json j;
    j["dim"] = l.dim;
    Json rows = Json::array();
    for (std::size_t i = 0; i < l.dim * l.dim; ++i) {
        Json r = Json::array();
        for (std::size_t c = 0; c < l.dim * l.dim; ++c) r.push_back(to_string(l.phi(i, c)));
        rows.push_back(r);
    }
    j["phi"] = rows;
    if (!l.name.empty()) j["name"] = l.name;
    return j;
}

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j;
    in >> j;
    return j;
}

// Formal sums over typed words serialize as a list of
// {"dec":[...],"let":[...],"coef":"p/q"} entries in key order.
inline Json free_element_to_json(const FreeElement& e) {
    Json out = Json::array();
    for (const auto& [w, c] : e.terms()) {
        Json t;
        t["dec"] = w.dec;
        t["let"] = w.let;
        t["coef"] = to_string(c);
        out.push_back(t);
    }
    return out;
}

inline FreeElement free_element_from_json(const Json& j) {
    FreeElement out;
    for (const auto& t : j) {
        TypedWord w{t.at("dec").get<std::vector<int>>(), t.at("let").get<std::vector<int>>()};
        if (w.let.size() != w.dec.size() + 1) throw std::invalid_argument("typed word shape mismatch");
        out.add(w, parse_rational(t.at("coef").get<std::string>()));
    }
    return out;
}

// Decorated trees serialize as nested ["node", dec, left, right] with leaves
// as the string "leaf".
inline Json tree_to_json(const Tree& t, std::size_t pos = 0) {
    if (t[pos] == -1) return Json("leaf");
    auto p = detail::split(t, pos);
    return Json::array({"node", p.dec, tree_to_json(t, p.left_begin), tree_to_json(t, p.right_begin)});
}

inline Tree tree_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "leaf") return tree_leaf();
    if (!j.is_array() || j.size() != 4 || j[0] != "node")
        throw std::invalid_argument("tree nodes are [\"node\", dec, left, right] or \"leaf\"");
    return tree_node(j[1].get<int>(), tree_from_json(j[2]), tree_from_json(j[3]));
}

inline Json tree_sum_to_json(const TreeSum& s) {
    Json out = Json::array();
    for (const auto& [t, c] : s.terms()) {
        Json e;
        e["tree"] = tree_to_json(t);
        e["coef"] = to_string(c);
        out.push_back(e);
    }
    return out;
}

}  // namespace easalg
