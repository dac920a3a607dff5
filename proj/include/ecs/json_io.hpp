#pragma once

#include <json.hpp>

#include "ecs/coherent.hpp"
#include "ecs/partition_maya.hpp"

namespace rext {

// Partition <-> [5,5,4,2,2]
inline void to_json(nlohmann::json& j, const Partition& p) { j = p.parts(); }
inline void from_json(const nlohmann::json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

// IndexSet <-> [-1,2,3]
inline void to_json(nlohmann::json& j, const IndexSet& k) { j = k.increasing(); }
inline void from_json(const nlohmann::json& j, IndexSet& k) {
    const auto v = j.get<std::vector<int>>();
    k = IndexSet(std::set<int>(v.begin(), v.end()));
}

// MayaDiagram <-> {"filled_nonneg": [...], "empty_neg": [...], "index": σ}
inline void to_json(nlohmann::json& j, const MayaDiagram& m) {
    j = {{"filled_nonneg", m.filled_nonneg()}, {"empty_neg", m.empty_neg()}, {"index", m.index()}};
}
inline void from_json(const nlohmann::json& j, MayaDiagram& m) {
    m = MayaDiagram(j.at("filled_nonneg").get<std::set<int>>(), j.at("empty_neg").get<std::set<int>>());
    if (j.contains("index") && j.at("index").get<int>() != m.index())
        throw std::invalid_argument("MayaDiagram JSON: index does not match the deviation sets");
}

inline void to_json(nlohmann::json& j, const UncertaintyReport& r) {
    j = {{"alpha", r.alpha},
         {"lambda", r.partition},
         {"t", r.time_grid},
         {"var_x", r.var_x},
         {"var_p", r.var_p},
         {"product", r.product},
         {"quadrature", {{"half_width", r.half_width}, {"tolerance", r.tolerance}, {"panels", r.panels}}}};
}

}  // namespace rext
