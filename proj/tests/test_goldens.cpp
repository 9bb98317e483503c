#include <doctest.h>

#include <map>
#include <random>

#include "edgeshadow/goldens.hpp"

using namespace edgeshadow;

namespace {

ExtScalar rat(long n, long d = 1) { return ExtScalar(Rational(n, d)); }

GoldenEntry random_entry(std::mt19937& rng) {
    std::uniform_int_distribution<int> geom(0, 1), kind(0, 1), small(0, 5), jdist(1, 9);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    std::uniform_int_distribution<int> nterms(0, 5), freq(0, 12);
    GoldenEntry e;
    e.geometry = geom(rng) ? GeometryName::Crack : GeometryName::VNotch90;
    e.kind = kind(rng) ? Kind::Primal : Kind::Dual;
    e.j = jdist(rng);
    e.h = 2 * small(rng);
    e.f = small(rng);
    int q = e.geometry == GeometryName::Crack ? 2 : 3;
    TrigPoly p(q);
    for (int i = nterms(rng); i > 0; --i) {
        std::int64_t k = freq(rng);
        ExtScalar s = k == 0 ? ExtScalar(0) : ExtScalar(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        ExtScalar c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        p.add_term(k, s, c);
    }
    e.poly = p;
    return e;
}

}  // namespace

TEST_CASE("parse_entry anchors") {
    GoldenEntry a = parse_entry("[crack primal j=1 h=0 f=1]\n 1/4 sin 1/2");
    CHECK(a.geometry == GeometryName::Crack);
    CHECK(a.kind == Kind::Primal);
    CHECK(a.key() == ShadowKey{Kind::Primal, 0, 1, 1});
    CHECK(a.poly == TrigPoly::sin(2, 1, rat(1, 4)));

    GoldenEntry b = parse_entry("[vnotch90 primal j=1 h=0 f=0]\n 1 sin 2/3 ; 0+1/3r3 cos 2/3");
    TrigPoly expect(3);
    expect.add_term(2, rat(1), ExtScalar(Rational(0), Rational(1, 3)));
    CHECK(b.poly == expect);

    GoldenEntry c = parse_entry("[crack dual j=1 h=0 f=4]\n 35/2048 sin 9/2");
    CHECK(c.kind == Kind::Dual);
    CHECK(c.poly == TrigPoly::sin(2, 9, rat(35, 2048)));

    GoldenEntry d = parse_entry("[crack primal j=2 h=0 f=0] 0");
    CHECK(d.poly.empty());
}

TEST_CASE("parse errors carry position and expectation") {
    CHECK_THROWS_AS(parse_entry("crack primal j=1 h=0 f=0] 0"), ParseError);
    CHECK_THROWS_AS(parse_entry("[wedge primal j=1 h=0 f=0] 0"), ParseError);
    CHECK_THROWS_AS(parse_entry("[crack primal j=1 h=1 f=0] 0"), ParseError);
    CHECK_THROWS_AS(parse_entry("[crack primal j=1 h=0 f=0]\n 1/4 tan 1/2"), ParseError);
    CHECK_THROWS_AS(parse_entry("[crack primal j=1 h=0 f=0]\n 1/4 sin 1/3"), ParseError);  // wrong lattice
    try {
        parse_entry("[crack primal j=1\nh=0 x=0] 0");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.expected.find("f=") != std::string::npos);
    }
}

TEST_CASE("whitespace and comments are insignificant") {
    GoldenEntry a = parse_entry("# leading note\n[ crack  primal\n j=1 h=0 f=1 ]\n1/4\nsin\n1/2 # trailing");
    CHECK(a.poly == TrigPoly::sin(2, 1, rat(1, 4)));
}

TEST_CASE("emit formats") {
    GoldenEntry e = parse_entry("[crack primal j=1 h=0 f=1]\n 1/4 sin 1/2");
    CHECK(emit_entry(e, EmitFormat::Dsl) == "[crack primal j=1 h=0 f=1]\n1/4 sin 1/2\n");
    CHECK(emit_entry(e, EmitFormat::Latex) == "\\phi_{0,1,1} = \\frac{1}{4} \\sin \\frac{\\varphi}{2}");
    CHECK(emit_entry(e, EmitFormat::Json) ==
          R"({"geometry":"crack","kind":"primal","j":1,"h":0,"f":1,"freq_den":2,"terms":[{"num":1,"sin":["1/4","0"],"cos":["0","0"]}]})");

    GoldenEntry unit = parse_entry("[crack primal j=3 h=0 f=0]\n 1 sin 3/2");
    CHECK(emit_entry(unit, EmitFormat::Latex) == "\\phi_{0,3,0} = \\sin \\frac{3 \\varphi}{2}");

    GoldenEntry zero = parse_entry("[crack primal j=2 h=0 f=0] 0");
    CHECK(emit_entry(zero, EmitFormat::Dsl) == "[crack primal j=2 h=0 f=0]\n0\n");
    CHECK(emit_entry(zero, EmitFormat::Latex) == "\\phi_{0,2,0} = 0");

    GoldenEntry mixed = parse_entry("[vnotch90 dual j=2 h=0 f=0]\n 1 sin 4/3 ; 0-1/3r3 cos 4/3");
    CHECK(emit_entry(mixed, EmitFormat::Dsl) == "[vnotch90 dual j=2 h=0 f=0]\n1 sin 4/3 ; 0-1/3r3 cos 4/3\n");
    CHECK(emit_entry(mixed, EmitFormat::Json) ==
          R"({"geometry":"vnotch90","kind":"dual","j":2,"h":0,"f":0,"freq_den":3,"terms":[{"num":4,"sin":["1","0"],"cos":["0","-1/3"]}]})");
}

TEST_CASE("emit-parse round trip on randomized canonical entries") {
    std::mt19937 rng(17);
    for (int i = 0; i < 1000; ++i) {
        GoldenEntry e = random_entry(rng);
        std::string once = emit_entry(e, EmitFormat::Dsl);
        GoldenEntry back = parse_entry(once);
        CHECK(back.poly == e.poly);
        CHECK(back.key() == e.key());
        CHECK(emit_entry(back, EmitFormat::Dsl) == once);
    }
}

TEST_CASE("mutated input never escapes with anything but ParseError") {
    std::mt19937 rng(29);
    const std::string base = "[vnotch90 primal j=1 h=0 f=1]\n1/4 sin 1/3 ; 0-1/12r3 cos 1/3 ; 1/20 sin 5/3\n";
    std::uniform_int_distribution<std::size_t> pick(0, base.size() - 1);
    std::uniform_int_distribution<int> byte(32, 126), nmut(1, 4);
    for (int i = 0; i < 3000; ++i) {
        std::string text = base;
        for (int m = nmut(rng); m > 0; --m) text[pick(rng)] = static_cast<char>(byte(rng));
        try {
            (void)parse_entry(text);
        } catch (const ParseError&) {
            // expected for most mutations
        }
        // anything else (bad_alloc, out_of_range, other Error kinds) fails the test
    }
    CHECK(true);
    CHECK_THROWS_AS(parse_entry("[crack primal j=1 h=0 f=0]\n1/0 sin 1/2"), ParseError);
    CHECK_THROWS_AS(parse_entry("[crack primal j=99999999999999999999 h=0 f=0] 0"), ParseError);
}

TEST_CASE("parsing messy but valid text canonicalizes") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < 200; ++i) {
        GoldenEntry e = random_entry(rng);
        std::string canonical = emit_entry(e, EmitFormat::Dsl);
        // roughen the text: extra whitespace, comments, a harmless zero term
        std::string messy;
        for (char c : canonical) {
            messy += c;
            if (c == ' ' && coin(rng)) messy += "  ";
            if (c == '\n' && coin(rng)) messy += "# noise\n\n";
        }
        if (e.poly.empty()) {
            messy = canonical;  // "0" body cannot take extra terms
        } else if (coin(rng)) {
            messy.pop_back();  // drop trailing newline
            messy += " ; 0 cos " + std::to_string(e.poly.freq_den()) + "/" +
                     std::to_string(e.poly.freq_den()) + "\n";
        }
        GoldenEntry back = parse_entry(messy);
        CHECK(back.poly == e.poly);
        CHECK(emit_entry(back, EmitFormat::Dsl) == canonical);
    }
}

TEST_CASE("embedded corpus parses and has the documented extents") {
    const auto& corpus = embedded_corpus();
    CHECK(corpus.size() == 422);
    std::map<std::pair<GeometryName, Kind>, std::size_t> counts;
    for (const auto& e : corpus) ++counts[{e.geometry, e.kind}];
    CHECK(counts[{GeometryName::Crack, Kind::Primal}] == 161);
    CHECK(counts[{GeometryName::Crack, Kind::Dual}] == 45);
    CHECK(counts[{GeometryName::VNotch90, Kind::Primal}] == 191);
    CHECK(counts[{GeometryName::VNotch90, Kind::Dual}] == 25);

    std::size_t crack_primal_j1 = 0, crack_dual_j1 = 0;
    for (const auto& e : corpus) {
        if (e.geometry == GeometryName::Crack && e.kind == Kind::Primal && e.j == 1) ++crack_primal_j1;
        if (e.geometry == GeometryName::Crack && e.kind == Kind::Dual && e.j == 1) ++crack_dual_j1;
    }
    CHECK(crack_primal_j1 == 36);
    CHECK(crack_dual_j1 == 15);
}

TEST_CASE("corpus entries satisfy the Neumann face conditions, except the flagged errata") {
    std::size_t violations = 0;
    for (const auto& e : embedded_corpus()) {
        Geometry g = Geometry::of(e.geometry);
        TrigPoly dy = derivative(e.poly);
        bool ok = eval_exact(dy, g.phi1()).is_zero() && eval_exact(dy, g.phi2()).is_zero();
        INFO(e.source << " j=" << e.j << " h=" << e.h << " f=" << e.f);
        if (!ok) {
            ++violations;
            // every violation must be a documented erratum (missing closure pair)
            CHECK(is_corpus_erratum(e.geometry, e.key()));
        }
    }
    // the 8 root omissions in the vnotch90 j=2 and j=4 blocks
    CHECK(violations == 8);
}

TEST_CASE("errata registry is consistent with the corpus") {
    CHECK(corpus_errata().size() == 22);
    // every flagged key exists in the corpus
    for (const auto& t : corpus_errata()) {
        bool found = false;
        for (const auto& e : embedded_corpus())
            if (e.geometry == t.geometry && e.key() == t.key) found = true;
        CHECK(found);
        CHECK(!t.note.empty());
    }
}

TEST_CASE("verify reports exact matches and pinpoints corruption") {
    Geometry c = Geometry::crack();
    std::array<int, 1> j1{1};
    ShadowTable table = build_table(c, Kind::Primal, j1, 2, 2);
    std::vector<GoldenEntry> corpus;
    for (const auto& e : embedded_corpus())
        if (e.geometry == GeometryName::Crack && e.kind == Kind::Primal && e.j == 1 && e.h <= 2 && e.f <= 2)
            corpus.push_back(e);
    REQUIRE(corpus.size() == 6);

    VerifyReport ok = verify(table, corpus);
    CHECK(ok.total == 6);
    CHECK(ok.matched == 6);
    CHECK(ok.ok());

    // fault injection: corrupt one coefficient
    corpus[1].poly = corpus[1].poly + TrigPoly::sin(2, 1, rat(1, 1000));
    VerifyReport bad = verify(table, corpus);
    CHECK(bad.total == 6);
    CHECK(bad.mismatched() == 1);
    CHECK(bad.total == bad.matched + bad.mismatched());
    CHECK(bad.mismatches[0].first_diff.find("frequency 1/2") != std::string::npos);

    // missing key reported as mismatch, not a crash
    corpus[1] = embedded_corpus()[0];  // restore
    GoldenEntry far = corpus[0];
    far.h = 10;
    far.f = 10;
    corpus.push_back(far);
    VerifyReport missing = verify(table, corpus);
    CHECK(missing.mismatched() == 1);
    CHECK(missing.mismatches[0].first_diff == "entry missing from table");

    // empty corpus
    VerifyReport empty = verify(table, {});
    CHECK(empty.total == 0);
    CHECK(empty.ok());
}
