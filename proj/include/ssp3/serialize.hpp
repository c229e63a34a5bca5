#ifndef SSP3_SERIALIZE_HPP
#define SSP3_SERIALIZE_HPP

#include "json.hpp"

#include "ssp3/curves.hpp"
#include "ssp3/theta.hpp"

namespace ssp {

using json = nlohmann::json;

// Field elements serialize as [c0, c1] (c0 + c1*t).
json fe_to_json(const Fe& x);
Fe fe_from_json(const Fq& F, const json& j);

// Null points use the compact even-only form: {"g": g, "even": [[c0,c1], ...]}
// with entries listed in increasing even-index order.
json theta_to_json(const ThetaNull& T);
ThetaNull theta_from_json(const Fq& F, const json& j);

json hyperelliptic_to_json(const HyperellipticModel& m);
HyperellipticModel hyperelliptic_from_json(const Fq& F, const json& j);

json quartic_to_json(const QuarticModel& q);
QuarticModel quartic_from_json(const Fq& F, const json& j);

} // namespace ssp

#endif
