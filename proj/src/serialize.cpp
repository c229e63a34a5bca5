#include "ssp3/serialize.hpp"

#include "ssp3/errors.hpp"

namespace ssp {

json fe_to_json(const Fe& x) { return json::array({x.c0, x.c1}); }

Fe fe_from_json(const Fq& F, const json& j) {
    if (!j.is_array() || j.size() != 2) throw MalformedNullPoint("field element must be [c0, c1]");
    return F.make(j[0].get<uint64_t>(), j[1].get<uint64_t>());
}

json theta_to_json(const ThetaNull& T) {
    json even = json::array();
    for (unsigned i : theta_idx::even_indices(T.g)) even.push_back(fe_to_json(T.v[i]));
    return json{{"g", T.g}, {"even", even}};
}

ThetaNull theta_from_json(const Fq& F, const json& j) {
    ThetaNull T;
    T.g = j.at("g").get<int>();
    if (T.g < 1 || T.g > 3) throw MalformedNullPoint("genus out of range");
    auto idx = theta_idx::even_indices(T.g);
    const json& even = j.at("even");
    if (!even.is_array() || even.size() != idx.size())
        throw MalformedNullPoint("wrong number of even entries");
    T.v.assign((size_t)1 << (2 * T.g), F.zero());
    for (size_t k = 0; k < idx.size(); ++k) T.v[idx[k]] = fe_from_json(F, even[k]);
    check_null_point(F, T);
    return T;
}

json hyperelliptic_to_json(const HyperellipticModel& m) {
    json lam = json::array();
    for (const Fe& x : m.lambdas) lam.push_back(fe_to_json(x));
    return json{{"g", m.g}, {"lambdas", lam}};
}

HyperellipticModel hyperelliptic_from_json(const Fq& F, const json& j) {
    HyperellipticModel m;
    m.g = j.at("g").get<int>();
    for (const json& x : j.at("lambdas")) m.lambdas.push_back(fe_from_json(F, x));
    if ((m.g == 2 && m.lambdas.size() != 3) || (m.g == 3 && m.lambdas.size() != 5))
        throw MalformedNullPoint("wrong lambda count for genus");
    return m;
}

json quartic_to_json(const QuarticModel& q) {
    json c = json::array();
    for (const Fe& x : q.coeffs) c.push_back(fe_to_json(x));
    return json{{"coeffs", c}};
}

QuarticModel quartic_from_json(const Fq& F, const json& j) {
    QuarticModel q;
    const json& c = j.at("coeffs");
    if (!c.is_array() || c.size() != q.coeffs.size())
        throw MalformedNullPoint("quartic needs 15 coefficients");
    for (size_t k = 0; k < q.coeffs.size(); ++k) q.coeffs[k] = fe_from_json(F, c[k]);
    return q;
}

} // namespace ssp
