#pragma once

#include "json.hpp"

#include "wada/autgrp.hpp"
#include "wada/dessin.hpp"
#include "wada/diffset.hpp"
#include "wada/ordering.hpp"
#include "wada/singer.hpp"

// JSON forms of the public value types. All numbers are exact integers.

namespace wada::io {

using Json = nlohmann::ordered_json;

Json to_json(const singer::SpaceParams& v);
Json to_json(const diffset::DifferenceSet& v);
Json to_json(const diffset::OrbitDecomposition& v);
Json to_json(const ordering::OrderedDifferenceSet& v);
Json to_json(const ordering::CompatibilityReport& v);
Json to_json(const dessin::DessinReport& v);
Json to_json(const autgrp::AutReport& v);
Json to_json(const autgrp::FrobeniusGroupReport& v);
Json to_json(const autgrp::PrimeCaseVerdict& v);
Json to_json(const autgrp::SubgroupVerdict& v);

/// Inverse of to_json; throws Error(InvalidArgument) on malformed input.
template <class T>
T from_json(const Json& j);

}  // namespace wada::io
