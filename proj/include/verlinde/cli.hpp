#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "verlinde/alcove_cut.hpp"
#include "verlinde/fusion.hpp"
#include "verlinde/goldman.hpp"
#include "verlinde/io.hpp"
#include "verlinde/spectra.hpp"
#include "verlinde/surface.hpp"

namespace verlinde::cli {

enum class Format { json, csv, text };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "text") return Format::text;
    throw PreconditionError("format", "unknown output format '" + s + "'");
}

struct IntRange {
    std::int64_t first = 0, last = 0;
};

/// "3" or "2-5".
inline IntRange parse_range(const std::string& parameter, const std::string& s) {
    try {
        const auto dash = s.find('-', 1);
        if (dash == std::string::npos) {
            const auto v = std::stoll(s);
            return {v, v};
        }
        IntRange r{std::stoll(s.substr(0, dash)), std::stoll(s.substr(dash + 1))};
        if (r.first > r.last) throw PreconditionError(parameter, "empty range '" + s + "'");
        return r;
    } catch (const std::logic_error&) {
        throw PreconditionError(parameter, "malformed integer range '" + s + "'");
    }
}

struct CommandRequest {
    std::string subcommand;
    std::string group = "A1";
    std::string level = "1";  ///< single value or range (csv sweeps)
    std::string genus = "2";  ///< single value or range (csv sweeps)
    std::int64_t boundary = 0;
    std::string markings;  ///< "1,0;0,1": one label per boundary circle
    std::string faces;     ///< "1;-;0,2": vanishing walls per face, "-" for the open alcove
    Format format = Format::json;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> epsilon;
    std::optional<std::string> mu0;
    std::optional<std::string> polytope_file;
    bool naive = false;
    unsigned threads = 1;
};

struct OutputDocument {
    int exit_code = 0;
    std::string body;
};

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (s.empty()) return out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::int64_t single(const std::string& parameter, const std::string& s) {
    const auto r = parse_range(parameter, s);
    if (r.first != r.last) throw PreconditionError(parameter, "expected a single value, got range '" + s + "'");
    return r.first;
}

inline std::vector<LevelWeight> parse_markings(const RootSystem& rs, std::int64_t level, const std::string& s) {
    std::vector<LevelWeight> out;
    for (const auto& label : split(s, ';')) {
        std::vector<std::int64_t> coords;
        try {
            for (const auto& c : split(label, ',')) coords.push_back(std::stoll(c));
        } catch (const std::logic_error&) {
            throw PreconditionError("markings", "malformed marking '" + label + "'");
        }
        try {
            out.emplace_back(rs, level, Weight(coords));
        } catch (const PreconditionError& e) {
            throw PreconditionError("markings", e.what());
        }
    }
    return out;
}

inline std::vector<AlcoveFace> parse_faces(const RootSystem& rs, const std::string& s) {
    std::vector<AlcoveFace> out;
    for (const auto& face : split(s, ';')) {
        std::vector<bool> walls(rs.rank() + 1, false);
        if (face != "-") {
            for (const auto& w : split(face, ',')) {
                std::size_t j = 0;
                try {
                    j = std::stoul(w);
                } catch (const std::logic_error&) {
                    throw PreconditionError("faces", "malformed wall index '" + w + "'");
                }
                if (j > rs.rank()) throw PreconditionError("faces", "wall index " + w + " out of range");
                walls[j] = true;
            }
        }
        try {
            out.push_back(make_alcove_face(rs, walls));
        } catch (const PreconditionError& e) {
            throw PreconditionError("faces", e.what());
        }
    }
    return out;
}

inline std::string dump(const io::Json& j) { return j.dump(2) + "\n"; }

inline io::Json counterexamples_json(const FusionAxiomReport& r) {
    io::Json out = io::Json::array();
    for (const auto& c : r.counterexamples) {
        io::Json labels = io::Json::array();
        for (const auto& w : c.labels) labels.push_back(io::weight_json(w));
        out.push_back({{"axiom", c.axiom}, {"labels", labels}, {"detail", c.detail}});
    }
    return out;
}

inline OutputDocument fusion_table_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto t = build_fusion_table(rs, single("level", req.level), req.threads);
    std::ostringstream os;
    switch (req.format) {
        case Format::json: return {0, dump(io::fusion_table_json(t))};
        case Format::csv:
            os << "mu,nu,alpha,N\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j)
                    for (std::size_t l = 0; l < t.size(); ++l)
                        os << '"' << t.labels()[i].weight().str() << "\",\"" << t.labels()[j].weight().str() << "\",\""
                           << t.labels()[l].weight().str() << "\"," << t(i, j, l) << '\n';
            return {0, os.str()};
        case Format::text:
            os << rs.label.str() << " level " << t.level() << ": " << t.size() << " labels\n";
            for (std::size_t i = 0; i < t.size(); ++i)
                for (std::size_t j = 0; j < t.size(); ++j)
                    for (std::size_t l = 0; l < t.size(); ++l)
                        if (t(i, j, l))
                            os << "N[" << t.labels()[i].weight().str() << ", " << t.labels()[j].weight().str() << "; "
                               << t.labels()[l].weight().str() << "] = " << t(i, j, l) << '\n';
            return {0, os.str()};
    }
    return {0, ""};
}

inline OutputDocument verlinde_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto levels = parse_range("level", req.level);
    const auto genera = parse_range("genus", req.genus);
    if (req.format != Format::csv && (levels.first != levels.last || genera.first != genera.last))
        throw PreconditionError("level", "ranges of levels or genera require --format csv");

    struct Row {
        std::int64_t level, genus;
        std::vector<LevelWeight> markings;
        BigInt value;
        std::string hash;
    };
    std::vector<Row> rows;
    for (auto k = levels.first; k <= levels.last; ++k) {
        const auto t = build_fusion_table(rs, k, req.threads);
        for (auto g = genera.first; g <= genera.last; ++g) {
            MarkedSurface s(g, parse_markings(rs, k, req.markings));
            const auto pg = pants_graph(g, static_cast<std::int64_t>(s.boundary()));
            const auto value = req.naive ? (require_shape(s, pg), evaluate_graph_naive(t, pg, marking_indices(t, s)))
                                         : verlinde_number(s, t, pg);
            rows.push_back({k, g, s.markings, value, pg.hash()});
        }
    }
    auto markings_json = [](const std::vector<LevelWeight>& ms) {
        io::Json out = io::Json::array();
        for (const auto& m : ms) out.push_back(io::weight_json(m.weight()));
        return out;
    };
    std::ostringstream os;
    switch (req.format) {
        case Format::json: {
            const auto& r = rows.front();
            io::Json j;
            j["group"] = rs.label.str();
            j["level"] = r.level;
            j["genus"] = r.genus;
            j["markings"] = markings_json(r.markings);
            j["value"] = io::integer_json(r.value);
            j["decomposition_hash"] = r.hash;
            return {0, dump(j)};
        }
        case Format::csv:
            os << "group,level,genus,markings,value,decomposition_hash\n";
            for (const auto& r : rows) {
                std::string ms;
                for (const auto& m : r.markings) ms += (ms.empty() ? "" : ";") + m.weight().str();
                os << rs.label.str() << ',' << r.level << ',' << r.genus << ",\"" << ms << "\"," << r.value << ','
                   << r.hash << '\n';
            }
            return {0, os.str()};
        case Format::text:
            os << rows.front().value << '\n';
            return {0, os.str()};
    }
    return {0, ""};
}

inline OutputDocument trace_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto k = single("level", req.level);
    const auto g = single("genus", req.genus);
    const auto t = build_fusion_table(rs, k, req.threads);
    const auto c = eigenvalue_crosscheck(g, t);
    if (req.format == Format::text) return {0, c.exact_trace.str() + "\n"};
    io::Json j;
    j["group"] = rs.label.str();
    j["level"] = k;
    j["genus"] = g;
    j["value"] = io::integer_json(c.exact_trace);
    j["numeric_check"] = {{"pass", c.pass},
                          {"numeric_trace", c.numeric_trace},
                          {"deviation", c.deviation},
                          {"tolerance", c.tolerance},
                          {"eigenvalues", c.eigenvalues}};
    return {0, dump(j)};
}

inline OutputDocument goldman_cmd(const CommandRequest& req) {
    const auto g = single("genus", req.genus);
    const auto pg = pants_graph(g, req.boundary);
    RationalPolytope trinion = trinion_polytope_su2();
    if (req.polytope_file) {
        std::ifstream in(*req.polytope_file);
        if (!in) throw PreconditionError("polytope", "cannot read '" + *req.polytope_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        trinion = io::parse_hrep(ss.str());
    }
    const auto p = goldman_polytope(pg, trinion, gluing_involution(pg));
    io::Json coords = io::Json::array();
    for (std::size_t i = 0; i < pg.legs.size(); ++i) coords.push_back("leg" + std::to_string(i));
    for (std::size_t e = 0; e < pg.edges.size(); ++e) coords.push_back("circle" + std::to_string(e));
    if (req.format == Format::text) {
        std::string header = "# goldman polytope g=" + std::to_string(g) + " b=" + std::to_string(req.boundary) +
                             "; coordinates:";
        for (const auto& c : coords) header += " " + c.get<std::string>();
        return {0, header + "\n" + io::hrep_text(p)};
    }
    io::Json j;
    j["genus"] = g;
    j["boundary"] = req.boundary;
    j["coordinates"] = coords;
    j["decomposition_hash"] = pg.hash();
    j["empty"] = p.is_empty();
    j["affine_dimension"] = p.affine_dimension();
    j["polytope"] = io::polytope_json(p);
    return {0, dump(j)};
}

inline OutputDocument euler_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto k = single("level", req.level);
    CutCollection cc;
    io::Json j;
    if (req.epsilon || req.mu0) {
        if (!req.epsilon || !req.mu0) throw PreconditionError("epsilon", "--epsilon and --mu0 must be given together");
        auto rational = [](const std::string& parameter, const std::string& text) {
            try {
                return parse_rational(text);
            } catch (const PreconditionError& e) {
                throw PreconditionError(parameter, e.what());
            }
        };
        RationalVector mu0;
        for (const auto& x : split(*req.mu0, ',')) mu0.push_back(rational("mu0", x));
        cc = build_cut_collection(rs, rational("epsilon", *req.epsilon), mu0, k);
    } else {
        const std::uint64_t seed = req.seed.value_or(1);
        std::mt19937_64 rng(seed);
        cc = random_generic_collection(rs, k, rng);
        j["seed"] = seed;
    }
    const auto check = euler_check(cc, k);
    j["group"] = rs.label.str();
    j["level"] = k;
    j["pass"] = check.pass;
    j["generic"] = check.generic;
    j["coverage"] = covers_alcove(cc);
    j["boundary_face_closure"] = boundary_face_closure(cc).empty();
    io::Json ledger = io::Json::array();
    for (const auto& e : check.ledger)
        ledger.push_back({{"point", io::weight_json(e.point)}, {"containing", e.containing}, {"sum", e.signed_sum}});
    j["ledger"] = ledger;
    j["collection"] = io::cut_collection_json(cc);
    if (req.format == Format::text) {
        std::ostringstream os;
        os << "euler identity " << (check.pass ? "PASS" : "FAIL") << " at " << check.ledger.size() << " points, "
           << cc.cuts.size() << " cuts, epsilon " << to_string(cc.epsilon) << '\n';
        return {check.pass ? 0 : 1, os.str()};
    }
    return {check.pass ? 0 : 1, dump(j)};
}

inline OutputDocument axioms_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto k = single("level", req.level);
    const auto t = build_fusion_table(rs, k, req.threads, false);
    const auto r = verify_fusion_axioms(t);
    io::Json j;
    j["group"] = rs.label.str();
    j["level"] = k;
    j["symmetry"] = r.symmetry;
    j["unit"] = r.unit;
    j["duality"] = r.duality;
    j["associativity"] = r.associativity;
    j["counterexamples"] = counterexamples_json(r);
    bool ok = r.all();
    if (rs.rank() <= 3) {
        const auto c = character_eigenvalues(t);
        j["character_spectra"] = {{"pass", c.pass},
                                  {"matrices_commute", c.matrices_commute},
                                  {"max_deviation", c.max_deviation},
                                  {"tolerance", c.tolerance}};
        ok = ok && c.pass;
    }
    j["all_pass"] = ok;
    if (req.format == Format::text) return {ok ? 0 : 1, std::string(ok ? "PASS" : "FAIL") + "\n"};
    return {ok ? 0 : 1, dump(j)};
}

inline OutputDocument dims_cmd(const CommandRequest& req) {
    const auto rs = build_root_system(req.group);
    const auto g = single("genus", req.genus);
    const auto faces = parse_faces(rs, req.faces);
    const auto d = dimension_report(rs, g, faces.size(), faces);
    io::Json j;
    j["group"] = rs.label.str();
    j["genus"] = g;
    j["boundary"] = faces.size();
    io::Json fj = io::Json::array();
    for (const auto& f : faces) fj.push_back({{"walls", io::walls_json(f)}, {"centralizer_dim", face_centralizer_dim(rs, f)}});
    j["faces"] = fj;
    j["moduli_dim"] = d.moduli_dim;
    j["cross_section_dim_v1"] = d.cross_section_dim_v1;
    j["cross_section_dim_v2"] = d.cross_section_dim_v2;
    return {0, dump(j)};
}

}  // namespace detail

inline OutputDocument error_document(const std::string& parameter, const std::string& message) {
    io::Json j;
    j["error"] = {{"parameter", parameter}, {"message", message}};
    return {2, detail::dump(j)};
}

/// Dispatches one request. Precondition failures produce exit code 2 and a
/// JSON error naming the parameter; internal invariant failures exit with 3.
inline OutputDocument run(const CommandRequest& req) {
    try {
        if (req.subcommand == "fusion-table") return detail::fusion_table_cmd(req);
        if (req.subcommand == "verlinde") return detail::verlinde_cmd(req);
        if (req.subcommand == "trace") return detail::trace_cmd(req);
        if (req.subcommand == "goldman") return detail::goldman_cmd(req);
        if (req.subcommand == "euler-check") return detail::euler_cmd(req);
        if (req.subcommand == "axioms") return detail::axioms_cmd(req);
        if (req.subcommand == "dims") return detail::dims_cmd(req);
        return error_document("subcommand", "unknown subcommand '" + req.subcommand + "'");
    } catch (const PreconditionError& e) {
        return error_document(e.parameter(), e.what());
    } catch (const InvariantError& e) {
        auto doc = error_document("internal", e.what());
        doc.exit_code = 3;
        return doc;
    }
}

}  // namespace verlinde::cli
