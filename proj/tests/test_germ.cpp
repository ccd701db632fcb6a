#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qgdef/germ.hpp>
#include <qgdef/germ_format.hpp>

#include "support.hpp"

using namespace qgdef;
using testing::Rng;

namespace {

GermDescription fixture(const std::string& name) {
    return parse_germ_file(bundled_corpus().at(name));
}

bool has_error(const std::vector<Diagnostic>& diagnostics, const std::string& code) {
    for (const auto& d : diagnostics)
        if (d.severity == Diagnostic::Severity::Error && d.code == code) return true;
    return false;
}

GermDescription synthetic(Rng& rng, Rational ctilde) {
    GermDescription g;
    g.name = "synthetic";
    g.assumptions.h2_tangent_vanishes = true;
    GermComponent c;
    c.id = "C";
    c.genus = 0;
    c.normalization.kind = NormalizationData::Kind::Asserted;
    c.normalization.asserted = ctilde;
    g.components.push_back(c);

    long points = rng.range(0, 5);
    for (long i = 0; i < points; ++i) {
        GermPoint p;
        p.id = "P" + std::to_string(i);
        switch (rng.range(0, 5)) {
            case 0: p.type = SingularityType::pinch(); break;
            case 1: p.type = SingularityType::cusp1(); break;
            case 2: p.type = SingularityType::cusp2(ExtNat::finite(rng.range(2, 8))); break;
            case 3:
                p.type = SingularityType::cusp3(ExtNat::finite(rng.range(1, 8)),
                                                ExtNat::finite(rng.range(1, 8)));
                break;
            case 4:
                p.type = SingularityType::cusp4(ExtNat::finite(rng.range(2, 8)),
                                                ExtNat::finite(rng.range(2, 8)),
                                                ExtNat::finite(rng.range(2, 8)));
                break;
            default: p.type = SingularityType::slt(7, 2); break;
        }
        p.incidences.push_back({"C", std::nullopt});
        g.points.push_back(p);
    }
    return g;
}

} // namespace

TEST_CASE("bundled fixtures validate cleanly") {
    for (const auto& [name, text] : bundled_corpus()) {
        GermDescription g = parse_germ_file(text);
        for (const auto& d : validate(g)) CHECK(d.severity != Diagnostic::Severity::Error);
    }
}

TEST_CASE("first worked example") {
    GermDescription g = fixture("example1.germ");
    CHECK(ctilde_sq(g, "C") == Rational(-3));
    DegreeReport rep = degree_L(g, "C");
    CHECK(rep.census.c2 == 1);
    CHECK(rep.census.pinch == 0);
    CHECK(rep.degree_theorem == Rational(-1));
    CHECK(rep.degree_example_convention == Rational(-1));
    REQUIRE(rep.degree_proof_path.has_value());
    CHECK(*rep.degree_proof_path == Rational(-1));
    CHECK(rep.torsion_summands.empty());
    CHECK(k_dot_c(g, "C") == Rational(1, 6));

    Verdict v = verdict(g);
    CHECK(v.kind == Verdict::Kind::NotSmoothable);
    CHECK(v.witness_component == "C");
    CHECK(v.witness_degree == Rational(-1));

    GenusBookkeeping gb = genus_bookkeeping(g, "C");
    CHECK(gb.nodes == 1);
    CHECK(gb.ram_smooth == 0);
    CHECK(gb.pa_cprime == Rational(0));
    CHECK(gb.integral);
}

TEST_CASE("second worked example") {
    GermDescription g = fixture("example2.germ");
    CHECK(ctilde_sq(g, "C") == Rational(-2, 3));
    DegreeReport rep = degree_L(g, "C");
    CHECK(rep.degree_example_convention == Rational(0));
    CHECK(rep.degree_theorem == Rational(1));
    CHECK(rep.degree_theorem - rep.degree_example_convention == Rational(rep.census.c3));
    REQUIRE(rep.degree_proof_path.has_value());
    CHECK(*rep.degree_proof_path == Rational(1));
    CHECK(k_dot_c(g, "C") == Rational(-1, 9));

    Verdict v = verdict(g, DegreeConvention::Example);
    CHECK(v.kind == Verdict::Kind::ExtremalNeighborhood);
    REQUIRE(v.k_dot_c.size() == 1);
    CHECK(v.k_dot_c[0].second == Rational(-1, 9));
    REQUIRE(!v.degrees.empty());
    CHECK(v.degrees[0].second == Rational(0));
}

TEST_CASE("synthetic multiplicity-4 germ") {
    GermDescription g = fixture("t4-333.germ");
    DegreeReport rep = degree_L(g, "C");
    CHECK(rep.degree_theorem == Rational(2, 3));
    CHECK(*rep.degree_proof_path == Rational(2, 3));
    CHECK(rep.torsion_summands == std::vector<std::string>{"Q"});
    CHECK(torsion_report(g, "C") == std::vector<std::string>{"Q"});
    Verdict v = verdict(g);
    CHECK(v.kind == Verdict::Kind::GloballySmoothable);
    bool odp = false;
    for (const auto& [id, target] : v.targets)
        if (target.kind == SmoothingTarget::Kind::OrdinaryDoublePoint) odp = true;
    CHECK(odp);
    CHECK_THROWS_AS(k_dot_c(g, "C"), RequiresGraphError);
}

TEST_CASE("degenerate cusp with infinite exponents") {
    GermDescription g = fixture("t3-infinity.germ");
    DegreeReport rep = degree_L(g, "C");
    CHECK(rep.degree_theorem == Rational(0)); // -1 + alpha3(inf, inf)
    CHECK(verdict(g).kind == Verdict::Kind::GloballySmoothable);
    CHECK(torsion_report(g, "C").empty());
}

TEST_CASE("asserted self-intersections pass through") {
    GermDescription g = fixture("t4-333.germ");
    g.components[0].normalization.asserted = Rational(-5);
    CHECK(ctilde_sq(g, "C") == Rational(-5));
}

TEST_CASE("normal crossing points contribute nothing") {
    GermDescription g = fixture("t4-333.germ");
    g.components[0].normalization.asserted = Rational(-5);
    g.points.clear();
    GermPoint p;
    p.id = "N";
    p.type = SingularityType::normal_crossing();
    p.incidences.push_back({"C", std::nullopt});
    p.branch_count = 2;
    g.points.push_back(p);
    DegreeReport rep = degree_L(g, "C");
    CHECK(rep.degree_theorem == Rational(-5));
    CHECK(*rep.degree_proof_path == Rational(-5));
}

TEST_CASE("validate rejects illegal data") {
    GermDescription g = fixture("t4-333.germ");
    GermComponent d;
    d.id = "D";
    d.genus = 0;
    d.normalization.kind = NormalizationData::Kind::Asserted;
    d.normalization.asserted = Rational(0);
    g.components.push_back(d);

    GermPoint slt;
    slt.id = "S";
    slt.type = SingularityType::slt(9, 5);
    slt.incidences.push_back({"C", std::nullopt});
    slt.incidences.push_back({"D", std::nullopt});
    slt.branch_count = 2;
    g.points.push_back(slt);
    CHECK(has_error(validate(g), "IllegalIncidence"));

    GermDescription dangling = fixture("t4-333.germ");
    dangling.components[0].normalization.kind = NormalizationData::Kind::FromGraph;
    dangling.components[0].normalization.graph_id = "nope";
    dangling.components[0].normalization.divisor = {"X"};
    CHECK(has_error(validate(dangling), "DanglingReference"));

    GermDescription missing_role = fixture("t4-333.germ");
    missing_role.points[0].type =
        SingularityType::cusp4(ExtNat::finite(3), ExtNat::infinity(), ExtNat::finite(2));
    CHECK(has_error(validate(missing_role), "RoleRequired"));
}

TEST_CASE("slt census is cross-checked against graph clusters") {
    GermDescription g = fixture("example2.germ");
    auto has_warning = [](const std::vector<Diagnostic>& diagnostics, const std::string& code) {
        for (const auto& d : diagnostics)
            if (d.severity == Diagnostic::Severity::Warning && d.code == code) return true;
        return false;
    };
    // The fixture's slt(9,5) matches the recognized clusters 1/9(1,5), 1/9(1,4).
    CHECK_FALSE(has_warning(validate(g), "SltClusterMismatch"));

    g.points[0].type = SingularityType::slt(7, 2);
    CHECK(has_warning(validate(g), "SltClusterMismatch"));
}

TEST_CASE("lone pinch points fail the parity check") {
    GermDescription g = fixture("t4-333.germ");
    g.points.clear();
    GermPoint p;
    p.id = "P";
    p.type = SingularityType::pinch();
    p.incidences.push_back({"C", std::nullopt});
    g.points.push_back(p);
    GenusBookkeeping gb = genus_bookkeeping(g, "C");
    CHECK_FALSE(gb.integral); // 2 p_a - 2 = -3

    GermPoint p2 = p;
    p2.id = "P2";
    g.points.push_back(p2);
    GermPoint c1;
    c1.id = "N";
    c1.type = SingularityType::cusp1();
    c1.incidences.push_back({"C", std::nullopt});
    c1.branch_count = 2;
    g.points.push_back(c1);
    gb = genus_bookkeeping(g, "C");
    CHECK(gb.integral);
    CHECK(gb.pa_cprime == Rational(1)); // -4 + 2 + 2 = 0
}

TEST_CASE("missing hypotheses give inconclusive verdicts") {
    GermDescription g = fixture("t4-333.germ");
    g.assumptions.h2_tangent_vanishes = false;
    Verdict v = verdict(g);
    CHECK(v.kind == Verdict::Kind::Inconclusive);
    REQUIRE(!v.missing_assumptions.empty());
    CHECK(v.missing_assumptions[0] == "h2_tangent_vanishes");

    GermDescription h = fixture("t4-333.germ");
    h.components[0].genus = 1;
    CHECK(verdict(h).kind == Verdict::Kind::Inconclusive);
}

TEST_CASE("proof path equals the theorem value on random censuses") {
    Rng rng(20240808);
    for (int trial = 0; trial < 100; ++trial) {
        GermDescription g = synthetic(rng, rng.rational(8, 3));
        DegreeReport rep = degree_L(g, "C");
        REQUIRE(rep.degree_proof_path.has_value());
        CHECK(rep.degree_theorem == *rep.degree_proof_path);
        CHECK(rep.degree_theorem - rep.degree_example_convention == Rational(rep.census.c3));
        CHECK(static_cast<long>(rep.torsion_summands.size()) == rep.census.c4);
    }
}

TEST_CASE("raising the self-intersection never flips smoothable to not smoothable") {
    Rng rng(555);
    for (int trial = 0; trial < 60; ++trial) {
        GermDescription g = synthetic(rng, rng.rational(6, 2));
        Verdict before = verdict(g);
        g.components[0].normalization.asserted += Rational(1);
        Verdict after = verdict(g);
        if (before.kind == Verdict::Kind::GloballySmoothable)
            CHECK(after.kind != Verdict::Kind::NotSmoothable);
    }
}

TEST_CASE("per-point roles feed the per-component census") {
    GermDescription g;
    g.name = "two-slots";
    g.assumptions.h2_tangent_vanishes = true;
    for (const char* id : {"A", "B"}) {
        GermComponent c;
        c.id = id;
        c.genus = 0;
        c.normalization.kind = NormalizationData::Kind::Asserted;
        c.normalization.asserted = Rational(0);
        g.components.push_back(c);
    }
    GermPoint p;
    p.id = "Q";
    p.type = SingularityType::cusp4(ExtNat::finite(3), ExtNat::infinity(), ExtNat::finite(2));
    p.incidences.push_back({"A", ComponentRole::Main});
    p.incidences.push_back({"B", ComponentRole::Other});
    g.points.push_back(p);

    CHECK(degree_L(g, "A").degree_theorem == alpha4(ExtNat::finite(3), ExtNat::infinity(),
                                                    ExtNat::finite(2)));
    CHECK(degree_L(g, "B").degree_theorem == alpha4(ExtNat::finite(2), ExtNat::infinity(),
                                                    ExtNat::finite(3)));
}
