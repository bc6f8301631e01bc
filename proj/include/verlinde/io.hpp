#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "verlinde/alcove_cut.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/polytope.hpp"

namespace verlinde::io {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are emitted as JSON numbers, larger ones as decimal strings.
inline Json integer_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

inline Json weight_json(const Weight& w) { return w.coords; }

inline Json rational_vector_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline RationalVector rational_vector_from_json(const Json& j) {
    RationalVector out;
    for (const auto& x : j) out.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<std::int64_t>()));
    return out;
}

/// coeffs[(i*N + j)*N + l] = N_{labels[i], labels[j]; labels[l]}
inline Json fusion_table_json(const FusionTable& t) {
    Json j;
    j["type"] = t.root_system().label.str();
    j["rank"] = t.root_system().rank();
    j["level"] = t.level();
    Json labels = Json::array();
    for (const auto& l : t.labels()) labels.push_back(weight_json(l.weight()));
    j["labels"] = labels;
    j["index_legend"] = "coeffs[(i*N + j)*N + l] = N_{labels[i], labels[j]; labels[l]}, N = len(labels)";
    j["coeffs"] = t.coefficients();
    return j;
}

/// Text H-representation:
///   # comment
///   dim <n>
///   a_1 a_2 ... a_n <= b        (entries as integers or p/q)
inline std::string hrep_text(const RationalPolytope& p) {
    std::ostringstream os;
    os << "dim " << p.ambient_dim() << '\n';
    for (const auto& h : p.halfspaces()) {
        for (const auto& x : h.a) os << to_string(x) << ' ';
        os << "<= " << to_string(h.b) << '\n';
    }
    return os.str();
}

inline RationalPolytope parse_hrep(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::size_t> dim;
    std::vector<Halfspace> hs;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const std::string where = "line " + std::to_string(lineno);
        if (!dim) {
            if (tok.size() != 2 || tok[0] != "dim")
                throw PreconditionError("polytope", where + ": expected header 'dim <n>'");
            dim = static_cast<std::size_t>(std::stoul(tok[1]));
            continue;
        }
        if (tok.size() != *dim + 2 || tok[*dim] != "<=")
            throw PreconditionError("polytope", where + ": expected " + std::to_string(*dim) + " coefficients, '<=', bound");
        Halfspace h;
        for (std::size_t i = 0; i < *dim; ++i) h.a.push_back(parse_rational(tok[i]));
        h.b = parse_rational(tok[*dim + 1]);
        hs.push_back(std::move(h));
    }
    if (!dim) throw PreconditionError("polytope", "missing 'dim <n>' header");
    return RationalPolytope(*dim, std::move(hs));
}

inline Json polytope_json(const RationalPolytope& p) {
    Json j;
    j["dim"] = p.ambient_dim();
    Json hs = Json::array();
    for (const auto& h : p.halfspaces()) hs.push_back({{"a", rational_vector_json(h.a)}, {"b", to_string(h.b)}});
    j["halfspaces"] = hs;
    return j;
}

inline RationalPolytope polytope_from_json(const Json& j) {
    RationalPolytope p(j.at("dim").get<std::size_t>());
    for (const auto& h : j.at("halfspaces"))
        p.add({rational_vector_from_json(h.at("a")), parse_rational(h.at("b").get<std::string>())});
    return p;
}

inline Json walls_json(const AlcoveFace& f) {
    Json out = Json::array();
    for (std::size_t j = 0; j < f.vanishing_walls.size(); ++j)
        if (f.vanishing_walls[j]) out.push_back(j);
    return out;
}

/// Manifest {epsilon, mu0, codims} plus each cut's H-representation.
inline Json cut_collection_json(const CutCollection& cc) {
    Json j;
    j["group"] = cc.group.str();
    j["epsilon"] = to_string(cc.epsilon);
    j["mu0"] = rational_vector_json(cc.mu0);
    Json codims = Json::array(), cuts = Json::array();
    for (const auto& c : cc.cuts) {
        codims.push_back(c.codim);
        cuts.push_back({{"tau_walls", walls_json(c.tau)},
                        {"sigma_walls", walls_json(c.sigma)},
                        {"codim", c.codim},
                        {"hrep", hrep_text(c.clipped)}});
    }
    j["codims"] = codims;
    j["cuts"] = cuts;
    return j;
}

}  // namespace verlinde::io
