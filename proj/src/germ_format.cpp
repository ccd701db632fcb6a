#include <qgdef/germ_format.hpp>

#include <algorithm>
#include <sstream>

namespace qgdef {

namespace {

std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        else if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
            cur += ch;
            continue;
        }
        if (!quoted && (ch == ' ' || ch == '\t')) {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

long parse_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw GermParseError(line, "expected an integer, got '" + s + "'");
    }
}

ExtNat parse_extnat(const std::string& s, int line) {
    if (s == "inf") return ExtNat::infinity();
    return ExtNat::finite(parse_int(s, line));
}

// key=value tokens into a map, erroring on unknown or duplicate keys.
std::map<std::string, std::string> parse_kv(const std::vector<std::string>& tokens, std::size_t from,
                                            const std::vector<std::string>& allowed,
                                            std::vector<std::string>& flags,
                                            const std::vector<std::string>& allowed_flags, int line) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = from; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string::npos) {
            if (std::find(allowed_flags.begin(), allowed_flags.end(), tokens[i]) == allowed_flags.end())
                throw GermParseError(line, "unknown key '" + tokens[i] + "'");
            flags.push_back(tokens[i]);
            continue;
        }
        std::string key = tokens[i].substr(0, eq), value = tokens[i].substr(eq + 1);
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw GermParseError(line, "unknown key '" + key + "'");
        if (kv.count(key)) throw GermParseError(line, "duplicate key '" + key + "'");
        if (value.empty()) throw GermParseError(line, "empty value for '" + key + "'");
        kv[key] = value;
    }
    return kv;
}

SingularityType parse_type(const std::map<std::string, std::string>& kv, int line) {
    auto it = kv.find("type");
    if (it == kv.end()) throw GermParseError(line, "point needs type=...");
    const std::string& t = it->second;
    auto need = [&](const char* key) -> std::string {
        auto f = kv.find(key);
        if (f == kv.end()) throw GermParseError(line, "type " + t + " needs " + key + "=...");
        return f->second;
    };
    try {
        if (t == "nc") return SingularityType::normal_crossing();
        if (t == "pinch") return SingularityType::pinch();
        if (t == "slt")
            return SingularityType::slt(mpz_class(need("n")), mpz_class(need("a")));
        if (t == "cusp1") return SingularityType::cusp1();
        if (t == "cusp2") return SingularityType::cusp2(parse_extnat(need("n"), line));
        if (t == "cusp3")
            return SingularityType::cusp3(parse_extnat(need("p"), line), parse_extnat(need("q"), line));
        if (t == "cusp4")
            return SingularityType::cusp4(parse_extnat(need("p"), line), parse_extnat(need("q"), line),
                                          parse_extnat(need("r"), line));
    } catch (const GermParseError&) {
        throw;
    } catch (const Error& e) {
        throw GermParseError(line, e.what());
    }
    throw GermParseError(line, "unknown point type '" + t + "'");
}

} // namespace

GermDescription parse_germ_file(const std::string& text) {
    GermDescription g;
    bool saw_name = false;
    std::istringstream in(text);
    std::string raw;
    int line = 0;

    std::string current_graph;
    DualGraph graph;

    auto finish_graph = [&](int at) {
        if (current_graph.empty()) return;
        (void)at;
        g.graphs[current_graph] = graph;
        current_graph.clear();
        graph = DualGraph();
    };

    while (std::getline(in, raw)) {
        ++line;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto tokens = tokenize(strip_comment(raw));
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];

        if (!current_graph.empty()) {
            try {
                if (head == "}") {
                    if (tokens.size() != 1) throw GermParseError(line, "junk after '}'");
                    finish_graph(line);
                    continue;
                }
                if (head == "curve") {
                    if (tokens.size() < 2) throw GermParseError(line, "curve needs an id");
                    std::vector<std::string> flags;
                    auto kv = parse_kv(tokens, 2, {"self", "genus"}, flags, {"retained"}, line);
                    if (!kv.count("self")) throw GermParseError(line, "curve needs self=...");
                    long self = parse_int(kv.at("self"), line);
                    long genus = kv.count("genus") ? parse_int(kv.at("genus"), line) : 0;
                    bool retained = !flags.empty();
                    graph.add_curve(tokens[1], self, retained, genus);
                    continue;
                }
                if (head == "edge") {
                    if (tokens.size() < 3 || tokens.size() > 4)
                        throw GermParseError(line, "edge needs two curve ids");
                    int mult = 1;
                    if (tokens.size() == 4) {
                        if (tokens[3].size() < 2 || tokens[3][0] != 'x')
                            throw GermParseError(line, "edge multiplicity looks like x<k>");
                        mult = static_cast<int>(parse_int(tokens[3].substr(1), line));
                    }
                    graph.add_edge(tokens[1], tokens[2], mult);
                    continue;
                }
            } catch (const GermParseError&) {
                throw;
            } catch (const Error& e) {
                throw GermParseError(line, e.what());
            }
            throw GermParseError(line, "unknown directive '" + head + "' inside graph block");
        }

        if (head == "germ") {
            if (saw_name) throw GermParseError(line, "duplicate germ header");
            if (tokens.size() != 2 || tokens[1].size() < 2 || tokens[1].front() != '"' ||
                tokens[1].back() != '"')
                throw GermParseError(line, "expected: germ \"<name>\"");
            g.name = tokens[1].substr(1, tokens[1].size() - 2);
            saw_name = true;
            continue;
        }
        if (head == "assume") {
            if (tokens.size() != 4 || tokens[2] != "=")
                throw GermParseError(line, "expected: assume <key> = true|false");
            bool value;
            if (tokens[3] == "true") value = true;
            else if (tokens[3] == "false") value = false;
            else throw GermParseError(line, "expected true or false, got '" + tokens[3] + "'");
            if (tokens[1] == "h2_tangent_vanishes") g.assumptions.h2_tangent_vanishes = value;
            else if (tokens[1] == "modification") g.assumptions.modification_of_isolated_singularity = value;
            else throw GermParseError(line, "unknown assumption '" + tokens[1] + "'");
            continue;
        }
        if (head == "component") {
            if (tokens.size() < 2) throw GermParseError(line, "component needs an id");
            std::vector<std::string> flags;
            auto kv = parse_kv(tokens, 2, {"genus", "selfint", "graph"}, flags, {}, line);
            GermComponent c;
            c.id = tokens[1];
            if (!kv.count("genus")) throw GermParseError(line, "component needs genus=...");
            c.genus = parse_int(kv.at("genus"), line);
            if (kv.count("selfint") == kv.count("graph"))
                throw GermParseError(line, "component needs exactly one of selfint=... or graph=...");
            if (kv.count("selfint")) {
                c.normalization.kind = NormalizationData::Kind::Asserted;
                try {
                    c.normalization.asserted = Rational::parse(kv.at("selfint"));
                } catch (const Error& e) {
                    throw GermParseError(line, e.what());
                }
            } else {
                c.normalization.kind = NormalizationData::Kind::FromGraph;
                const std::string& spec = kv.at("graph");
                auto colon = spec.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 >= spec.size())
                    throw GermParseError(line, "graph reference looks like <gid>:<id>+<id>");
                c.normalization.graph_id = spec.substr(0, colon);
                std::string rest = spec.substr(colon + 1);
                std::string cur;
                for (char ch : rest) {
                    if (ch == '+') {
                        if (cur.empty()) throw GermParseError(line, "empty divisor entry");
                        c.normalization.divisor.push_back(cur);
                        cur.clear();
                    } else {
                        cur += ch;
                    }
                }
                if (cur.empty()) throw GermParseError(line, "empty divisor entry");
                c.normalization.divisor.push_back(cur);
                std::sort(c.normalization.divisor.begin(), c.normalization.divisor.end());
            }
            g.components.push_back(std::move(c));
            continue;
        }
        if (head == "graph") {
            if (tokens.size() != 3 || tokens[2] != "{")
                throw GermParseError(line, "expected: graph <gid> {");
            if (g.graphs.count(tokens[1]))
                throw GermParseError(line, "duplicate graph '" + tokens[1] + "'");
            current_graph = tokens[1];
            continue;
        }
        if (head == "point") {
            if (tokens.size() < 2) throw GermParseError(line, "point needs an id");
            std::vector<std::string> flags;
            auto kv = parse_kv(tokens, 2, {"type", "n", "a", "p", "q", "r", "on", "branches"}, flags,
                               {}, line);
            GermPoint pt;
            pt.id = tokens[1];
            pt.type = parse_type(kv, line);
            if (!kv.count("on")) throw GermParseError(line, "point needs on=...");
            std::string on = kv.at("on");
            std::string cur;
            auto push_incidence = [&](const std::string& item) {
                if (item.empty()) throw GermParseError(line, "empty incidence");
                PointIncidence inc;
                auto colon = item.find(':');
                if (colon == std::string::npos) {
                    inc.component = item;
                } else {
                    inc.component = item.substr(0, colon);
                    std::string role = item.substr(colon + 1);
                    if (role == "main") inc.role = ComponentRole::Main;
                    else if (role == "other") inc.role = ComponentRole::Other;
                    else throw GermParseError(line, "unknown role '" + role + "'");
                }
                pt.incidences.push_back(std::move(inc));
            };
            for (char ch : on) {
                if (ch == ',') {
                    push_incidence(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            push_incidence(cur);
            if (kv.count("branches")) {
                pt.branch_count = static_cast<int>(parse_int(kv.at("branches"), line));
                if (pt.branch_count != 2)
                    throw GermParseError(line, "branches can only be set to 2");
            }
            g.points.push_back(std::move(pt));
            continue;
        }
        throw GermParseError(line, "unknown directive '" + head + "'");
    }
    if (!current_graph.empty()) throw GermParseError(line, "unterminated graph block");
    if (!saw_name) throw GermParseError(line ? line : 1, "missing germ \"<name>\" header");

    std::sort(g.components.begin(), g.components.end(),
              [](const GermComponent& a, const GermComponent& b) { return a.id < b.id; });
    std::sort(g.points.begin(), g.points.end(),
              [](const GermPoint& a, const GermPoint& b) { return a.id < b.id; });
    return g;
}

namespace {

std::string type_clause(const SingularityType& t) {
    using K = SingularityType::Kind;
    switch (t.kind) {
        case K::NormalCrossing: return "type=nc";
        case K::Pinch: return "type=pinch";
        case K::Slt: return "type=slt n=" + t.slt_n.get_str() + " a=" + t.slt_a.get_str();
        case K::DegCusp1: return "type=cusp1";
        case K::DegCusp2: return "type=cusp2 n=" + t.n.str();
        case K::DegCusp3: return "type=cusp3 p=" + t.p.str() + " q=" + t.q.str();
        case K::DegCusp4:
            return "type=cusp4 p=" + t.p.str() + " q=" + t.q.str() + " r=" + t.r.str();
    }
    return "";
}

} // namespace

std::string emit_germ_file(const GermDescription& g) {
    std::ostringstream os;
    os << "germ \"" << g.name << "\"\n";
    os << "assume h2_tangent_vanishes = " << (g.assumptions.h2_tangent_vanishes ? "true" : "false")
       << "\n";
    os << "assume modification = "
       << (g.assumptions.modification_of_isolated_singularity ? "true" : "false") << "\n";

    std::vector<GermComponent> components = g.components;
    std::sort(components.begin(), components.end(),
              [](const GermComponent& a, const GermComponent& b) { return a.id < b.id; });
    for (const auto& c : components) {
        os << "component " << c.id << " genus=" << c.genus;
        if (c.normalization.kind == NormalizationData::Kind::Asserted) {
            os << " selfint=" << c.normalization.asserted.str();
        } else {
            os << " graph=" << c.normalization.graph_id << ":";
            std::vector<std::string> divisor = c.normalization.divisor;
            std::sort(divisor.begin(), divisor.end());
            for (std::size_t i = 0; i < divisor.size(); ++i) os << (i ? "+" : "") << divisor[i];
        }
        os << "\n";
    }

    for (const auto& [gid, graph] : g.graphs) {
        os << "graph " << gid << " {\n";
        for (const std::string& id : graph.vertex_ids()) {
            const auto& v = graph.vertex(id);
            os << "  curve " << id << " self=" << v.self_intersection;
            if (v.genus != 0) os << " genus=" << v.genus;
            if (v.retained) os << " retained";
            os << "\n";
        }
        for (const auto& [e, mult] : graph.edges()) {
            os << "  edge " << e.first << " " << e.second;
            if (mult > 1) os << " x" << mult;
            os << "\n";
        }
        os << "}\n";
    }

    std::vector<GermPoint> points = g.points;
    std::sort(points.begin(), points.end(),
              [](const GermPoint& a, const GermPoint& b) { return a.id < b.id; });
    for (const auto& p : points) {
        os << "point " << p.id << " " << type_clause(p.type) << " on=";
        for (std::size_t i = 0; i < p.incidences.size(); ++i) {
            if (i) os << ",";
            os << p.incidences[i].component;
            if (p.incidences[i].role)
                os << (*p.incidences[i].role == ComponentRole::Main ? ":main" : ":other");
        }
        if (p.branch_count == 2) os << " branches=2";
        os << "\n";
    }
    return os.str();
}

const std::map<std::string, std::string>& bundled_corpus() {
    static const std::map<std::string, std::string> corpus = {
        {"example1.germ",
         R"(# Nonnormal germ glued from a chain resolution; locally smoothable but
# every global first-order deformation is locally trivial.
germ "example1"
assume h2_tangent_vanishes = true
assume modification = true
component C genus=0 graph=res:F+G
graph res {
  curve G self=-6 retained
  curve F self=-1 retained
  curve a self=-2
  curve b self=-2
  curve c self=-2
  curve d self=-2
  curve e self=-3
  edge a G
  edge G d
  edge c d
  edge G F
  edge F b
  edge F e
}
point A type=slt n=3 a=1 on=C
point B type=slt n=2 a=1 on=C
point N type=cusp2 n=2 on=C branches=2
)"},
        {"example2.germ",
         R"(# Chain germ with one slt point and one multiplicity-3 cusp; smoothing
# gives an extremal neighborhood.
germ "example2"
assume h2_tangent_vanishes = true
assume modification = true
component C genus=0 graph=res:C1+C2
graph res {
  curve C1 self=-1 retained
  curve C2 self=-2 retained
  curve u1 self=-2
  curve u2 self=-2
  curve u3 self=-2
  curve u4 self=-3
  curve m self=-3
  curve w1 self=-2
  curve w2 self=-5
  edge u1 u2
  edge u2 u3
  edge u3 u4
  edge u4 C2
  edge C2 m
  edge m C1
  edge C1 w1
  edge w1 w2
}
point P type=slt n=9 a=5 on=C branches=2
point Q type=cusp3 p=1 q=1 on=C branches=2
)"},
        {"t4-333.germ",
         R"(# Synthetic germ with one multiplicity-4 cusp on a rational component.
germ "t4-333"
assume h2_tangent_vanishes = true
assume modification = false
component C genus=0 selfint=0
point Q type=cusp4 p=3 q=3 r=3 on=C
)"},
        {"t3-infinity.germ",
         R"(# Degenerate multiplicity-3 cusp with both exponents infinite.
germ "t3-infinity"
assume h2_tangent_vanishes = true
assume modification = false
component C genus=0 selfint=-1
point P type=cusp3 p=inf q=inf on=C branches=2
)"},
    };
    return corpus;
}

} // namespace qgdef
