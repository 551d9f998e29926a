#pragma once

#include <string>

#include "esc/distributions.hpp"

#include <json.hpp>

namespace esc {

// Wire format: {"kind": "...", "params": {...}} with kinds
// shifted_poisson {lambda}, shifted_nb {r, p}, geometric {p}, zipf {alpha},
// explicit {weights}.
nlohmann::json spec_to_json(const ClusterSizeSpec& spec);
ClusterSizeSpec spec_from_json(const nlohmann::json& j);

// Parses either inline JSON or, if `text` names an existing file, its
// contents.
ClusterSizeSpec spec_from_arg(const std::string& text);

}  // namespace esc
