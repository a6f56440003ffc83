#pragma once

#include <json.hpp>

#include "hbch/cosets.hpp"
#include "hbch/hermitian.hpp"
#include "hbch/quantum.hpp"

namespace hbch {

using json = nlohmann::json;

void to_json(json &j, const Provenance &v);
void from_json(const json &j, Provenance &v);
void to_json(json &j, const QuantumParams &p);
void from_json(const json &j, QuantumParams &p);

void to_json(json &j, const CaseDescriptor &d);
void from_json(const json &j, CaseDescriptor &d);
void to_json(json &j, const Witness &w);
void from_json(const json &j, Witness &w);
void to_json(json &j, const BoundResult &b);
void from_json(const json &j, BoundResult &b);
void to_json(json &j, const CaseBound &c);
void from_json(const json &j, CaseBound &c);
void to_json(json &j, const BoundReport &r);
void from_json(const json &j, BoundReport &r);

/// {"n": N, "q": q, "cosets": [[...], ...]} in representative order.
json cosets_to_json(const CosetSystem &sys);

/// Rebuilds the system from "n" and "q" and checks that the listed cosets match.
CosetSystemPtr cosets_from_json(const json &j);

}  // namespace hbch
