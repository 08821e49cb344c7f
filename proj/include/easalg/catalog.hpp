#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "easalg/catalog_data.hpp"
#include "easalg/json_io.hpp"

namespace easalg {

// Named tables and matrices shipped with the library: the thirteen
// cardinality-two EAS, the diassociative/triassociative tables, the seventeen
// two-dimensional maps, and the dendriform/tridendriform/duplicial/post-Lie
// duals. Parsed once from the embedded JSON.
class Catalog {
public:
    static const Catalog& instance() {
        static Catalog c;
        return c;
    }

    std::optional<FiniteEAS> find_eas(const std::string& name) const {
        auto it = eas_.find(name);
        if (it == eas_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<LinearEAS> find_leas(const std::string& name) const {
        auto it = leas_.find(name);
        if (it == leas_.end()) return std::nullopt;
        return it->second;
    }

    std::vector<std::string> eas_names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : eas_) out.push_back(k);
        return out;
    }

    std::vector<std::string> leas_names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : leas_) out.push_back(k);
        return out;
    }

    std::string note(const std::string& name) const {
        auto it = notes_.find(name);
        return it == notes_.end() ? std::string() : it->second;
    }

    // The thirteen classification entries of cardinality two, in table order.
    static const std::vector<std::string>& size2_names() {
        static const std::vector<std::string> names = {"A1", "A2", "C1", "C3", "C5", "C6", "E1-E2",
                                                       "E3", "F1", "F3", "F4", "H1", "H2"};
        return names;
    }

private:
    Catalog() {
        Json j = Json::parse(kCatalogJson);
        for (auto it = j.at("eas").begin(); it != j.at("eas").end(); ++it)
            eas_.emplace(it.key(), eas_from_json(it.value()));
        for (auto it = j.at("leas").begin(); it != j.at("leas").end(); ++it) {
            LinearEAS l = leas_from_json(it.value());
            l.name = it.key();
            if (it.value().contains("note")) notes_[it.key()] = it.value()["note"].get<std::string>();
            leas_.emplace(it.key(), std::move(l));
        }
    }

    std::map<std::string, FiniteEAS> eas_;
    std::map<std::string, LinearEAS> leas_;
    std::map<std::string, std::string> notes_;
};

// Resolution order used by the CLI: catalog names first, then file paths.
inline FiniteEAS resolve_eas(const std::string& name_or_path) {
    if (auto e = Catalog::instance().find_eas(name_or_path)) return *e;
    return eas_from_json(load_json_file(name_or_path));
}

// lEAS resolution: a matrix catalog name, the linearization of a table
// catalog name, or a file holding either format (detected by its keys).
inline LinearEAS resolve_leas(const std::string& name_or_path) {
    if (auto l = Catalog::instance().find_leas(name_or_path)) return *l;
    if (auto e = Catalog::instance().find_eas(name_or_path)) {
        LinearEAS lin = linearize(*e);
        lin.name = "lin(" + name_or_path + ")";
        return lin;
    }
    Json j = load_json_file(name_or_path);
    if (j.contains("phi")) return leas_from_json(j);
    if (j.contains("arrow")) return linearize(eas_from_json(j));
    throw std::invalid_argument("file is neither an EAS nor an lEAS document: " + name_or_path);
}

}  // namespace easalg
