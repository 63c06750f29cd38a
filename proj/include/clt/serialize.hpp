#pragma once

#include "json.hpp"

#include "clt/levinson.hpp"
#include "clt/moment.hpp"
#include "clt/optimizer.hpp"
#include "clt/zeta.hpp"

namespace clt {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

void to_json(json& j, const Polynomial& p);
void from_json(const json& j, Polynomial& p);
void to_json(json& j, const LevinsonParams& p);
void from_json(const json& j, LevinsonParams& p);
void to_json(json& j, const ZeroScanReport& r);
void from_json(const json& j, ZeroScanReport& r);
void to_json(json& j, const ConstantReport& r);
void from_json(const json& j, ConstantReport& r);
void to_json(json& j, const RestartRecord& r);
void from_json(const json& j, RestartRecord& r);
void to_json(json& j, const OptimizationReport& r);
void from_json(const json& j, OptimizationReport& r);
void to_json(json& j, const MomentSample& s);
void from_json(const json& j, MomentSample& s);
void to_json(json& j, const MomentReport& r);
void from_json(const json& j, MomentReport& r);
void to_json(json& j, const RegisteredPolynomial& p);
void to_json(json& j, const PublishedTuple& t);

}  // namespace clt
