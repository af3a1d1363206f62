#pragma once

#include <string>

#include "json.hpp" // vendored nlohmann/json

#include "mcluster/decomposition.hpp"
#include "mcluster/homological.hpp"
#include "mcluster/tquiver.hpp"

namespace mcluster {

using json = nlohmann::ordered_json;

std::string vertex_id(const VertexLabel& v);

json quiver_to_json(const TranslationQuiver& Q);
json gamma_document(const PolygonConfig& cfg, const TranslationQuiver& Q);
json decompose_document(const PolygonConfig& cfg,
                        const std::vector<ComponentReport>& reports);
json triangle_document(const PolygonConfig& cfg, const Diagonal& d1,
                       const Diagonal& d2, const MorphismClass& mc,
                       const ObjectRepr& cone_obj);
json verification_to_json(const VerificationReport& report);

// DOT view carrying the same information as the JSON schema: vertices,
// arrows (solid) and tau (dashed), ranked by i-column
std::string quiver_to_dot(const PolygonConfig& cfg, const TranslationQuiver& Q);

} // namespace mcluster
