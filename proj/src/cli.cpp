#include <qgdef/cli.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include <qgdef/cusp_catalog.hpp>
#include <qgdef/germ.hpp>
#include <qgdef/germ_format.hpp>

namespace qgdef {

namespace {

struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ExtNat parse_cli_extnat(const std::string& s) {
    if (s == "inf") return ExtNat::infinity();
    try {
        std::size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return ExtNat::finite(v);
    } catch (const std::exception&) {
        throw UsageError("expected an integer or 'inf', got '" + s + "'");
    }
}

long parse_cli_long(const std::string& s) {
    ExtNat v = parse_cli_extnat(s);
    if (v.inf) throw UsageError("expected a finite integer, got 'inf'");
    return v.value;
}

SingularityType parse_cli_type(const std::vector<std::string>& args, std::size_t& i) {
    if (i >= args.size()) throw UsageError("missing singularity type");
    std::string t = args[i++];
    auto next = [&]() -> std::string {
        if (i >= args.size()) throw UsageError("missing parameter for type " + t);
        return args[i++];
    };
    if (t == "nc") return SingularityType::normal_crossing();
    if (t == "pinch") return SingularityType::pinch();
    if (t == "slt") {
        long n = parse_cli_long(next());
        long a = parse_cli_long(next());
        return SingularityType::slt(n, a);
    }
    if (t == "cusp1") return SingularityType::cusp1();
    if (t == "cusp2") return SingularityType::cusp2(parse_cli_extnat(next()));
    if (t == "cusp3") {
        ExtNat p = parse_cli_extnat(next());
        return SingularityType::cusp3(p, parse_cli_extnat(next()));
    }
    if (t == "cusp4") {
        ExtNat p = parse_cli_extnat(next());
        ExtNat q = parse_cli_extnat(next());
        return SingularityType::cusp4(p, q, parse_cli_extnat(next()));
    }
    throw UsageError("unknown singularity type '" + t + "'");
}

DegreeConvention parse_convention(const std::string& flag) {
    auto eq = flag.find('=');
    std::string v = (eq == std::string::npos) ? "" : flag.substr(eq + 1);
    if (v == "theorem") return DegreeConvention::Theorem;
    if (v == "example") return DegreeConvention::Example;
    throw UsageError("expected --convention=theorem or --convention=example");
}

void machine_header(std::ostream& out) { out << "\n[machine]\n"; }

// ---- subcommands ----

int cmd_check(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 1) throw UsageError("usage: check <file>");
    GermDescription g = parse_germ_file(read_file(args[0]));
    auto diagnostics = validate(g);
    long errors = 0, warnings = 0;
    out << "germ '" << g.name << "': structural checks\n";
    for (const auto& d : diagnostics) {
        bool is_error = d.severity == Diagnostic::Severity::Error;
        (is_error ? errors : warnings) += 1;
        out << (is_error ? "error " : "warning ") << d.code << ": " << d.message << "\n";
    }
    machine_header(out);
    out << "germ = " << g.name << "\n";
    out << "errors = " << errors << "\n";
    out << "warnings = " << warnings << "\n";
    return errors == 0 ? kExitOk : kExitDomainError;
}

int cmd_degree(const std::vector<std::string>& args, std::ostream& out) {
    std::string file;
    DegreeConvention convention = DegreeConvention::Theorem;
    for (const std::string& a : args) {
        if (a.rfind("--convention", 0) == 0) convention = parse_convention(a);
        else if (file.empty()) file = a;
        else throw UsageError("usage: degree <file> [--convention=theorem|example]");
    }
    if (file.empty()) throw UsageError("usage: degree <file> [--convention=theorem|example]");

    GermDescription g = parse_germ_file(read_file(file));
    out << "germ '" << g.name << "': degree of the locally free part\n";
    std::ostringstream mb;
    mb << "germ = " << g.name << "\n";
    mb << "convention = " << (convention == DegreeConvention::Theorem ? "theorem" : "example") << "\n";
    for (const auto& c : g.components) {
        DegreeReport rep = degree_L(g, c.id);
        Rational selected = convention == DegreeConvention::Theorem ? rep.degree_theorem
                                                                    : rep.degree_example_convention;
        out << "  component " << c.id << ": C~^2 = " << rep.ctilde_sq.str() << ", degree = "
            << selected.str() << "\n";
        if (rep.census.c3 > 0)
            out << "  component " << c.id << ": theorem and example conventions differ by "
                << rep.census.c3 << " (one per multiplicity-3 cusp)\n";
        mb << "component = " << c.id << "\n";
        mb << "ctilde_sq = " << rep.ctilde_sq.str() << "\n";
        mb << "census.pinch = " << rep.census.pinch << "\n";
        mb << "census.c1 = " << rep.census.c1 << "\n";
        mb << "census.c2 = " << rep.census.c2 << "\n";
        mb << "census.c3 = " << rep.census.c3 << "\n";
        mb << "census.c4 = " << rep.census.c4 << "\n";
        mb << "census.m = " << rep.census.m << "\n";
        mb << "alpha_sum = " << rep.alpha_sum.str() << "\n";
        mb << "degree_theorem = " << rep.degree_theorem.str() << "\n";
        mb << "degree_example_convention = " << rep.degree_example_convention.str() << "\n";
        if (rep.degree_proof_path) mb << "degree_proof_path = " << rep.degree_proof_path->str() << "\n";
        mb << "degree = " << selected.str() << "\n";
        mb << "torsion =";
        for (std::size_t i = 0; i < rep.torsion_summands.size(); ++i)
            mb << (i ? "," : " ") << rep.torsion_summands[i];
        mb << "\n";
    }
    machine_header(out);
    out << mb.str();
    return kExitOk;
}

int cmd_verdict(const std::vector<std::string>& args, std::ostream& out) {
    std::string file;
    DegreeConvention convention = DegreeConvention::Theorem;
    for (const std::string& a : args) {
        if (a.rfind("--convention", 0) == 0) convention = parse_convention(a);
        else if (file.empty()) file = a;
        else throw UsageError("usage: verdict <file> [--convention=theorem|example]");
    }
    if (file.empty()) throw UsageError("usage: verdict <file> [--convention=theorem|example]");

    GermDescription g = parse_germ_file(read_file(file));
    Verdict v = verdict(g, convention);
    out << "germ '" << g.name << "': " << v.kind_name() << "\n";
    machine_header(out);
    out << "germ = " << g.name << "\n";
    out << "convention = " << (convention == DegreeConvention::Theorem ? "theorem" : "example") << "\n";
    out << "verdict = " << v.kind_name() << "\n";
    for (const auto& [id, d] : v.degrees) out << "degree." << id << " = " << d.str() << "\n";
    switch (v.kind) {
        case Verdict::Kind::Inconclusive:
            out << "missing =";
            for (std::size_t i = 0; i < v.missing_assumptions.size(); ++i)
                out << (i ? "," : " ") << v.missing_assumptions[i];
            out << "\n";
            break;
        case Verdict::Kind::NotSmoothable:
            out << "witness = " << v.witness_component << "\n";
            out << "witness_degree = " << v.witness_degree.str() << "\n";
            break;
        case Verdict::Kind::ExtremalNeighborhood:
            for (const auto& [id, k] : v.k_dot_c) out << "k_dot_c." << id << " = " << k.str() << "\n";
            [[fallthrough]];
        case Verdict::Kind::GloballySmoothable:
            for (const auto& [id, target] : v.targets)
                out << "target." << id << " = " << target.str() << "\n";
            break;
    }
    return kExitOk;
}

int cmd_hj(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() != 2) throw UsageError("usage: hj <n> <a>");
    long n = parse_cli_long(args[0]);
    long a = parse_cli_long(args[1]);
    CyclicQuotient q = CyclicQuotient::make(n, a);
    HJChain chain = hj_expand(q);
    auto disc = discrepancy_vector(q);
    auto facts = slt_blowup_facts(q.n, q.a);
    out << "cyclic quotient " << q.str() << "\n";
    machine_header(out);
    out << "type = " << q.str() << "\n";
    out << "chain = " << chain.str() << "\n";
    out << "discrepancies = (";
    for (std::size_t i = 0; i < disc.size(); ++i) out << (i ? "," : "") << disc[i].str();
    out << ")\n";
    out << "conjugate = " << conjugate_type(q).str() << "\n";
    out << "diff = " << diff_closed_form(n).str() << "\n";
    out << "ky_dot_f = " << facts.ky_dot_f.str() << "\n";
    out << "e_singularity_1 = " << facts.e_label_1() << "\n";
    out << "e_singularity_2 = " << facts.e_label_2() << "\n";
    return kExitOk;
}

int cmd_cusp_graph(const std::vector<std::string>& args, std::ostream& out) {
    bool dot = false;
    std::optional<ComponentRole> role;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--dot") dot = true;
        else if (args[i] == "--role") {
            if (i + 1 >= args.size()) throw UsageError("--role needs main or other");
            ++i;
            if (args[i] == "main") role = ComponentRole::Main;
            else if (args[i] == "other") role = ComponentRole::Other;
            else throw UsageError("--role needs main or other");
        } else rest.push_back(args[i]);
    }
    std::size_t i = 0;
    SingularityType t = parse_cli_type(rest, i);
    if (i != rest.size()) throw UsageError("unexpected arguments after the type parameters");

    CuspResolution res = resolution_graph(t, role);
    if (dot) {
        if (!res.has_graph) throw Error("no dual graph is catalogued for " + t.label());
        out << res.resolution.to_dot();
        return kExitOk;
    }
    out << "resolution data for " << t.label() << "\n";
    machine_header(out);
    out << "type = " << t.label() << "\n";
    out << "has_graph = " << (res.has_graph ? "true" : "false") << "\n";
    if (res.has_graph) {
        for (const std::string& id : res.resolution.vertex_ids()) {
            const auto& v = res.resolution.vertex(id);
            out << "curve." << id << " = " << v.self_intersection
                << (v.retained ? " retained" : "") << "\n";
        }
        for (const auto& [e, mult] : res.resolution.edges())
            out << "edge = " << e.first << " " << e.second << (mult > 1 ? " x" + std::to_string(mult) : "")
                << "\n";
        if (!(res.partial == res.resolution)) {
            for (const std::string& id : res.partial.vertex_ids()) {
                const auto& v = res.partial.vertex(id);
                out << "partial_curve." << id << " = " << v.self_intersection
                    << (v.retained ? " retained" : "") << "\n";
            }
            for (const auto& [e, mult] : res.partial.edges())
                out << "partial_edge = " << e.first << " " << e.second
                    << (mult > 1 ? " x" + std::to_string(mult) : "") << "\n";
        }
        out << "kept =";
        for (std::size_t k = 0; k < res.kept.size(); ++k) out << (k ? "," : " ") << res.kept[k];
        out << "\n";
    }
    for (const auto& [name, value] : res.stated) out << "stated." << name << " = " << value.str() << "\n";
    for (const std::string& note : res.notes) out << "note = " << note << "\n";
    return kExitOk;
}

int cmd_graph(const std::vector<std::string>& args, std::ostream& out) {
    std::string file, gid;
    std::vector<std::string> divisor_specs;
    bool dot = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--dot") dot = true;
        else if (args[i] == "--divisor") {
            if (i + 1 >= args.size()) throw UsageError("--divisor needs id+id+...");
            divisor_specs.push_back(args[++i]);
        } else if (file.empty()) file = args[i];
        else if (gid.empty()) gid = args[i];
        else throw UsageError("usage: graph <file> <gid> [--divisor id+id+...] [--dot]");
    }
    if (file.empty() || gid.empty())
        throw UsageError("usage: graph <file> <gid> [--divisor id+id+...] [--dot]");

    GermDescription g = parse_germ_file(read_file(file));
    const DualGraph* graph = g.find_graph(gid);
    if (!graph) throw Error("germ '" + g.name + "' has no graph '" + gid + "'");
    if (dot) {
        out << graph->to_dot();
        return kExitOk;
    }

    // Default pullback requests: the divisor of every component that uses
    // this graph.
    if (divisor_specs.empty()) {
        for (const auto& c : g.components) {
            if (c.normalization.kind != NormalizationData::Kind::FromGraph ||
                c.normalization.graph_id != gid)
                continue;
            std::string spec;
            for (std::size_t i = 0; i < c.normalization.divisor.size(); ++i)
                spec += (i ? "+" : "") + c.normalization.divisor[i];
            divisor_specs.push_back(spec);
        }
    }

    out << "graph '" << gid << "' of germ '" << g.name << "'\n";
    machine_header(out);
    out << "germ = " << g.name << "\n";
    out << "graph = " << gid << "\n";
    auto clusters = graph->exceptional_clusters();
    out << "clusters = " << clusters.size() << "\n";
    for (std::size_t k = 0; k < clusters.size(); ++k) {
        const Cluster& cluster = clusters[k];
        std::string tag = std::to_string(k + 1);
        out << "cluster." << tag << " =";
        for (std::size_t i = 0; i < cluster.size(); ++i) out << (i ? "," : " ") << cluster[i];
        out << "\n";
        RationalMatrix m = intersection_matrix(*graph, cluster);
        out << "matrix." << tag << " = [";
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i) out << "; ";
            for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m.at(i, j).str();
        }
        out << "]\n";
        bool negdef = is_negative_definite(*graph, cluster);
        out << "negative_definite." << tag << " = " << (negdef ? "true" : "false") << "\n";
        if (!negdef) continue;
        for (const std::string& spec : divisor_specs) {
            Divisor d;
            std::string cur, label = spec;
            for (char ch : spec + "+") {
                if (ch == '+') {
                    if (cur.empty()) throw UsageError("empty divisor entry in '" + spec + "'");
                    d[cur] = Rational(1);
                    cur.clear();
                } else cur += ch;
            }
            auto gamma = pullback(*graph, d, cluster);
            out << "pullback." << tag << "." << label << " =";
            bool first = true;
            for (const auto& [id, coeff] : gamma) {
                out << (first ? " " : ",") << id << "=" << coeff.str();
                first = false;
            }
            out << "\n";
        }
    }
    return kExitOk;
}

int cmd_t1(const std::vector<std::string>& args, std::ostream& out) {
    std::size_t i = 0;
    SingularityType t = parse_cli_type(args, i);
    if (i != args.size()) throw UsageError("unexpected arguments after the type parameters");
    T1Presentation pres = t1_presentation(t);
    TorsionProfile prof = torsion_profile(t);
    out << "first-order deformation module of " << t.label() << "\n";
    machine_header(out);
    out << "type = " << t.label() << "\n";
    if (pres.kind == T1Presentation::Kind::QuotientRing) {
        out << "presentation = quotient_ring\n";
        out << "ideal = (";
        for (std::size_t k = 0; k < pres.generators.size(); ++k)
            out << (k ? ", " : "") << pres.generators[k];
        out << ")\n";
    } else {
        out << "presentation = cokernel\n";
        for (std::size_t k = 0; k < pres.relations.size(); ++k)
            out << "relation." << (k + 1) << " = (" << pres.relations[k].first << ", "
                << pres.relations[k].second << ")\n";
    }
    out << "embedded_point = " << (prof.embedded_point ? "true" : "false") << "\n";
    out << "restriction_torsion = " << (prof.restriction_torsion ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& args, std::ostream& out) {
    SweepOptions options;
    for (std::size_t i = 0; i < args.size(); ++i) {
        auto need_value = [&]() -> std::string {
            if (i + 1 >= args.size()) throw UsageError(args[i] + " needs a value");
            return args[++i];
        };
        if (args[i] == "--pmax") options.pmax = parse_cli_long(need_value());
        else if (args[i] == "--qmax") options.qmax = parse_cli_long(need_value());
        else if (args[i] == "--rmax") options.rmax = parse_cli_long(need_value());
        else if (args[i] == "--jobs") options.jobs = static_cast<int>(parse_cli_long(need_value()));
        else throw UsageError("unknown option '" + args[i] + "'");
    }
    SweepResult result = run_verification_sweep(options);
    out << "oracle sweep over the cusp catalog\n";
    for (const std::string& line : result.disagreement_table) out << line << "\n";
    machine_header(out);
    out << "cases = " << result.cases << "\n";
    out << "checks = " << result.checks << "\n";
    out << "disagreements = " << result.disagreements << "\n";
    out << "known_typo_confirmed = " << (result.known_typo_confirmed ? "true" : "false") << "\n";
    return (result.disagreements == 0 && result.known_typo_confirmed) ? kExitOk : kExitDisagreement;
}

int cmd_examples(const std::vector<std::string>& args, std::ostream& out) {
    if (args.size() > 1) throw UsageError("usage: examples [<dir>]");
    std::filesystem::path dir = args.empty() ? "." : args[0];
    std::filesystem::create_directories(dir);
    out << "writing the bundled germ corpus to '" << dir.string() << "'\n";
    machine_header(out);
    long files = 0;
    for (const auto& [name, text] : bundled_corpus()) {
        std::filesystem::path path = dir / name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot write '" + path.string() + "'");
        file << text;
        out << "wrote = " << path.string() << "\n";
        ++files;
    }
    out << "files = " << files << "\n";
    return kExitOk;
}

const char* kUsage =
    "usage: qgdef <command> [args]\n"
    "  check <file>                          validate a germ file\n"
    "  degree <file> [--convention=C]        per-component degree report (C: theorem|example)\n"
    "  verdict <file> [--convention=C]       smoothability / extremal-neighborhood verdict\n"
    "  hj <n> <a>                            Hirzebruch-Jung data of 1/n(1,a)\n"
    "  cusp-graph <type> <params...> [--role main|other] [--dot]\n"
    "                                        catalogued resolution graph of a singularity\n"
    "  graph <file> <gid> [--divisor id+id+...] [--dot]\n"
    "                                        intersection matrices, definiteness, pullbacks\n"
    "  t1 <type> <params...>                 first-order deformation module presentation\n"
    "  verify [--pmax P --qmax Q --rmax R --jobs N]\n"
    "                                        oracle sweep; exit 2 on any disagreement\n"
    "  examples [<dir>]                      write the bundled germ corpus\n"
    "types: nc | pinch | slt <n> <a> | cusp1 | cusp2 <n> | cusp3 <p> <q> | cusp4 <p> <q> <r>\n"
    "       (exponents accept 'inf')\n";

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << kUsage;
        return kExitUsage;
    }
    std::vector<std::string> rest(args.begin() + 1, args.end());
    try {
        const std::string& cmd = args[0];
        if (cmd == "check") return cmd_check(rest, out);
        if (cmd == "degree") return cmd_degree(rest, out);
        if (cmd == "verdict") return cmd_verdict(rest, out);
        if (cmd == "hj") return cmd_hj(rest, out);
        if (cmd == "cusp-graph") return cmd_cusp_graph(rest, out);
        if (cmd == "graph") return cmd_graph(rest, out);
        if (cmd == "t1") return cmd_t1(rest, out);
        if (cmd == "verify") return cmd_verify(rest, out);
        if (cmd == "examples") return cmd_examples(rest, out);
        err << "unknown command '" << cmd << "'\n" << kUsage;
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

// ---- verification sweep ----

namespace {

struct SweepCase {
    SingularityType type;
    std::optional<ComponentRole> role;
};

std::vector<SweepCase> sweep_cases(const SweepOptions& options) {
    std::vector<SweepCase> cases;
    for (long p = 1; p <= options.pmax; ++p)
        for (long q = p; q <= options.qmax; ++q)
            cases.push_back({SingularityType::cusp3(ExtNat::finite(p), ExtNat::finite(q)), {}});
    for (long p = 2; p <= options.pmax; ++p)
        for (long q = p; q <= options.qmax; ++q)
            for (long r = 2; r <= options.rmax; ++r)
                cases.push_back({SingularityType::cusp4(ExtNat::finite(p), ExtNat::finite(q),
                                                        ExtNat::finite(r)),
                                 {}});

    // Infinity degenerations with printed graphs or catalogued values.
    const long pcap = std::min<long>(options.pmax, 6);
    const long rcap = std::min<long>(options.rmax, 6);
    const ExtNat inf = ExtNat::infinity();
    for (long p = 1; p <= pcap; ++p)
        cases.push_back({SingularityType::cusp3(ExtNat::finite(p), inf), {}});
    cases.push_back({SingularityType::cusp3(inf, inf), {}});
    for (long p = 2; p <= pcap; ++p)
        for (long q = p; q <= pcap; ++q)
            cases.push_back({SingularityType::cusp4(ExtNat::finite(p), ExtNat::finite(q), inf), {}});
    for (long p = 2; p <= pcap; ++p)
        for (long r = 2; r <= rcap; ++r) {
            cases.push_back({SingularityType::cusp4(ExtNat::finite(p), inf, ExtNat::finite(r)),
                             ComponentRole::Main});
            cases.push_back({SingularityType::cusp4(ExtNat::finite(p), inf, ExtNat::finite(r)),
                             ComponentRole::Other});
        }
    for (long p = 2; p <= pcap; ++p) {
        cases.push_back({SingularityType::cusp4(ExtNat::finite(p), inf, inf), ComponentRole::Main});
        cases.push_back({SingularityType::cusp4(ExtNat::finite(p), inf, inf), ComponentRole::Other});
        cases.push_back({SingularityType::cusp4(inf, inf, ExtNat::finite(p)), ComponentRole::Main});
        cases.push_back({SingularityType::cusp4(inf, inf, ExtNat::finite(p)), ComponentRole::Other});
    }
    cases.push_back({SingularityType::cusp4(inf, inf, inf), {}});
    return cases;
}

} // namespace

SweepResult run_verification_sweep(const SweepOptions& options) {
    std::vector<SweepCase> cases = sweep_cases(options);
    std::vector<VerificationReport> reports(cases.size());

    int jobs = std::max(1, std::min(options.jobs, 64));
    auto worker = [&](int w) {
        for (std::size_t i = static_cast<std::size_t>(w); i < cases.size(); i += jobs)
            reports[i] = verify_point_invariants(cases[i].type, cases[i].role);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }

    SweepResult result;
    result.cases = static_cast<long>(cases.size());
    for (const auto& rep : reports) {
        for (const auto& check : rep.checks) {
            ++result.checks;
            if (!check.agree) {
                ++result.disagreements;
                result.disagreement_table.push_back("disagree " + rep.label + " " + check.name +
                                                    " expected=" + check.expected.str() +
                                                    " computed=" + check.computed.str());
            }
        }
    }

    // The published gamma-system coefficient is a typo: the system it gives
    // must disagree with the closed form that the rederived system matches.
    Rational closed = eval_ext(expr_delta4(), ExtNat::finite(3), ExtNat::finite(3), ExtNat::finite(3));
    result.known_typo_confirmed = gamma_system_t4_printed(3, 3, 3).delta4 != closed &&
                                  gamma_system_t4(3, 3, 3).delta4 == closed;
    return result;
}

} // namespace qgdef
