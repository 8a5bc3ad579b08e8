#include "phiirred/certificate_io.hpp"

#include <stdexcept>

#include "phiirred/poly_io.hpp"

namespace phiirred {

using nlohmann::json;

namespace {

std::string dec(std::uint64_t v) { return std::to_string(v); }

std::uint64_t small_uint(const json& j, const char* what) {
    const Integer v = integer_from_json(j);
    if (v < 0 || !v.fits_ulong_p()) throw std::invalid_argument(std::string(what) + " out of range");
    return v.get_ui();
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json prime_flags(const std::vector<std::pair<std::uint32_t, bool>>& v) {
    json arr = json::array();
    for (const auto& [p, ok] : v) arr.push_back({{"p", dec(p)}, {"ok", ok}});
    return arr;
}

std::vector<std::pair<std::uint32_t, bool>> prime_flags_from(const json& arr) {
    std::vector<std::pair<std::uint32_t, bool>> out;
    for (const auto& e : arr)
        out.emplace_back(static_cast<std::uint32_t>(small_uint(field(e, "p"), "p")), field(e, "ok").get<bool>());
    return out;
}

json indices(const std::vector<std::size_t>& v) {
    json arr = json::array();
    for (auto i : v) arr.push_back(dec(i));
    return arr;
}

std::vector<std::size_t> indices_from(const json& arr) {
    std::vector<std::size_t> out;
    for (const auto& e : arr) out.push_back(small_uint(e, "index"));
    return out;
}

json interval(const DegreeInterval& iv) { return {{"from", dec(iv.lo)}, {"to", dec(iv.hi)}}; }

DegreeInterval interval_from(const json& j) {
    return {small_uint(field(j, "from"), "from"), small_uint(field(j, "to"), "to")};
}

json bound_to_json(const PrimeBound& b) { return {{"value", dec(b.value)}, {"inclusive", b.inclusive}}; }

PrimeBound bound_from_json(const json& j) {
    return {small_uint(field(j, "value"), "bound"), field(j, "inclusive").get<bool>()};
}

}  // namespace

json instance_to_json(const ProblemInstance& inst) {
    json a = json::array();
    for (const auto& p : inst.lower) a.push_back(to_json_literal(p));
    json j = {{"schema", kInstanceSchema},
              {"c", dec(inst.c)},
              {"n", dec(inst.n)},
              {"phi", to_json_literal(inst.phi)},
              {"a_n", inst.a_n.get_str()},
              {"a", a}};
    if (inst.bound) j["prime_bound"] = bound_to_json(*inst.bound);
    return j;
}

ProblemInstance instance_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    if (!j.contains("schema")) throw std::invalid_argument("instance is missing the mandatory \"schema\" field");
    if (j.at("schema") != kInstanceSchema)
        throw std::invalid_argument("unsupported instance schema " + j.at("schema").dump());

    ProblemInstance inst;
    inst.c = static_cast<unsigned>(small_uint(field(j, "c"), "c"));
    inst.n = static_cast<unsigned>(small_uint(field(j, "n"), "n"));
    inst.phi = from_json_literal(field(j, "phi"));
    const json& an = field(j, "a_n");
    inst.a_n = an.is_array() ? reject_polynomial_leading_coefficient(from_json_literal(an)) : integer_from_json(an);
    for (const auto& e : field(j, "a")) inst.lower.push_back(from_json_literal(e));
    if (j.contains("prime_bound")) inst.bound = bound_from_json(j.at("prime_bound"));
    inst.validate();
    return inst;
}

json polygon_to_json(const NewtonPolygon& np) {
    json points = json::array();
    for (const auto& pt : np.points) {
        json v = pt.valuation.is_infinite() ? json("inf") : json(pt.valuation.value());
        points.push_back(json::array({pt.index, v}));
    }
    json vertices = json::array();
    for (auto v : np.vertices) vertices.push_back(v);
    json slopes = json::array();
    for (const auto& s : np.slopes()) slopes.push_back(s.to_string());
    return {{"points", points}, {"vertices", vertices}, {"slopes", slopes}};
}

json certificate_to_json(const Certificate& cert) {
    const auto& h = cert.hypotheses;
    json hyp = {{"bound", bound_to_json(h.bound)},
                {"degree_violations", indices(h.degree_violations)},
                {"degree_bounds_ok", h.degree_bounds_ok()},
                {"phi_monic", h.phi_monic},
                {"phi_irreducible", prime_flags(h.phi_irreducible)},
                {"content_an_a0", h.content_an_a0.get_str()},
                {"content_coprime", prime_flags(h.content_coprime)},
                {"structural_ok", h.structural_ok},
                {"structural_note", h.structural_note},
                {"pass", h.pass()}};

    const auto& sd = cert.small_degree;
    json small = {{"p0", sd.p0 ? json(dec(*sd.p0)) : json(nullptr)},
                  {"checks",
                   {{"p0_coprime_to_a_n", sd.p0_coprime_to_a_n},
                    {"divisibility", indices(sd.divisibility)},
                    {"phi_irreducible_mod_p0", sd.phi_irreducible_mod_p0}}},
                  {"pass", sd.pass}};

    json steps = json::array();
    for (const auto& st : cert.steps) {
        json slopes = json::array();
        for (const auto& s : st.polygon_slopes) slopes.push_back(s.to_string());
        json log = json::array();
        for (const auto& t : st.search_log) log.push_back({{"p", dec(t.p)}, {"outcome", t.outcome}});
        steps.push_back({{"k", dec(st.k)},
                         {"ell", dec(st.ell)},
                         {"threshold", dec(st.threshold)},
                         {"p", st.p ? json(dec(*st.p)) : json(nullptr)},
                         {"divisibility", indices(st.divisibility)},
                         {"polygon_slopes", slopes},
                         {"slope", st.rightmost_slope ? json(st.rightmost_slope->to_string()) : json(nullptr)},
                         {"bound", st.bound.to_string()},
                         {"p_coprime_to_a_n", st.p_coprime_to_a_n},
                         {"a0_unit", st.a0_unit},
                         {"phi_irreducible_mod_p", st.phi_irreducible_mod_p},
                         {"slope_below_bound", st.slope_below_bound},
                         {"excluded_degrees", interval(st.excluded)},
                         {"search_log", log},
                         {"pass", st.pass}});
    }

    json coverage = json::array();
    for (const auto& iv : cert.coverage) coverage.push_back(interval(iv));

    return {{"schema", cert.schema},
            {"instance", instance_to_json(cert.instance)},
            {"instance_digest", cert.instance_digest},
            {"hypotheses", hyp},
            {"scaled_polynomial",
             {{"degree", dec(cert.scaled.degree)},
              {"leading", cert.scaled.leading.get_str()},
              {"content", cert.scaled.content.get_str()},
              {"digest", cert.scaled.digest}}},
            {"small_degree", small},
            {"steps", steps},
            {"coverage", coverage},
            {"verdict", to_string(cert.verdict)},
            {"failing_k", cert.failing_k ? json(dec(*cert.failing_k)) : json(nullptr)},
            {"summary", cert.summary}};
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    cert.schema = field(j, "schema").get<std::string>();
    cert.instance = instance_from_json(field(j, "instance"));
    cert.instance_digest = field(j, "instance_digest").get<std::string>();

    const json& h = field(j, "hypotheses");
    cert.hypotheses.bound = bound_from_json(field(h, "bound"));
    cert.hypotheses.degree_violations = indices_from(field(h, "degree_violations"));
    cert.hypotheses.phi_monic = field(h, "phi_monic").get<bool>();
    cert.hypotheses.phi_irreducible = prime_flags_from(field(h, "phi_irreducible"));
    cert.hypotheses.content_an_a0 = integer_from_json(field(h, "content_an_a0"));
    cert.hypotheses.content_coprime = prime_flags_from(field(h, "content_coprime"));
    cert.hypotheses.structural_ok = field(h, "structural_ok").get<bool>();
    cert.hypotheses.structural_note = field(h, "structural_note").get<std::string>();

    const json& s = field(j, "scaled_polynomial");
    cert.scaled = {small_uint(field(s, "degree"), "degree"), integer_from_json(field(s, "leading")),
                   integer_from_json(field(s, "content")), field(s, "digest").get<std::string>()};

    const json& sd = field(j, "small_degree");
    if (!field(sd, "p0").is_null()) cert.small_degree.p0 = small_uint(sd.at("p0"), "p0");
    const json& checks = field(sd, "checks");
    cert.small_degree.p0_coprime_to_a_n = field(checks, "p0_coprime_to_a_n").get<bool>();
    cert.small_degree.divisibility = indices_from(field(checks, "divisibility"));
    cert.small_degree.phi_irreducible_mod_p0 = field(checks, "phi_irreducible_mod_p0").get<bool>();
    cert.small_degree.pass = field(sd, "pass").get<bool>();

    for (const auto& e : field(j, "steps")) {
        KStep st;
        st.k = static_cast<unsigned>(small_uint(field(e, "k"), "k"));
        st.ell = static_cast<unsigned>(small_uint(field(e, "ell"), "ell"));
        st.threshold = small_uint(field(e, "threshold"), "threshold");
        if (!field(e, "p").is_null()) st.p = small_uint(e.at("p"), "p");
        st.divisibility = indices_from(field(e, "divisibility"));
        for (const auto& sl : field(e, "polygon_slopes")) st.polygon_slopes.push_back(Ratio::parse(sl.get<std::string>()));
        if (!field(e, "slope").is_null()) st.rightmost_slope = Ratio::parse(e.at("slope").get<std::string>());
        st.bound = Ratio::parse(field(e, "bound").get<std::string>());
        st.p_coprime_to_a_n = field(e, "p_coprime_to_a_n").get<bool>();
        st.a0_unit = field(e, "a0_unit").get<bool>();
        st.phi_irreducible_mod_p = field(e, "phi_irreducible_mod_p").get<bool>();
        st.slope_below_bound = field(e, "slope_below_bound").get<bool>();
        st.excluded = interval_from(field(e, "excluded_degrees"));
        for (const auto& t : field(e, "search_log"))
            st.search_log.push_back({small_uint(field(t, "p"), "p"), field(t, "outcome").get<std::string>()});
        st.pass = field(e, "pass").get<bool>();
        cert.steps.push_back(std::move(st));
    }
    for (const auto& iv : field(j, "coverage")) cert.coverage.push_back(interval_from(iv));
    cert.verdict = verdict_from_string(field(j, "verdict").get<std::string>());
    if (!field(j, "failing_k").is_null()) cert.failing_k = static_cast<unsigned>(small_uint(j.at("failing_k"), "failing_k"));
    cert.summary = field(j, "summary").get<std::string>();
    return cert;
}

}  // namespace phiirred
