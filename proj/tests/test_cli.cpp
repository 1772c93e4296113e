#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "transvec/commands.hpp"
#include "transvec/fixtures.hpp"
#include "transvec/formdoc.hpp"
#include "transvec/moves.hpp"

using namespace transvec;

namespace {

// Runs one command exactly like the binary would and hands back everything.
struct RunResult {
    int rc;
    std::string out, err;
    nlohmann::ordered_json json;  // parsed only when --json was requested
};

RunResult run(const std::string& name, CommandOptions opts) {
    std::ostringstream out, err;
    int rc = run_command(name, opts, out, err);
    RunResult r{rc, out.str(), err.str(), {}};
    if (opts.json && rc != 2) r.json = nlohmann::ordered_json::parse(r.out);
    return r;
}

CommandOptions with_input(const std::string& input) {
    CommandOptions o;
    o.input = input;
    return o;
}

}  // namespace

TEST_CASE("stored figure documents round-trip through the renderer") {
    for (const char* name : {"fig-ex", "fig-exx"}) {
        CAPTURE(name);
        FormDocument doc = parse_document(fixture_document(name));
        FormDocument again = parse_document(render_document(doc));
        CHECK(doc == again);
    }
    FormDocument ex = parse_document(fixture_document("fig-ex"));
    CHECK(ex.dim == 10);
    CHECK(ex.labels.size() == 10);
    CHECK(ex.gens.size() == 6);
    CHECK(ex.entries.size() == 15);
    for (const DocEntry& e : ex.entries) CHECK(e.symmetric);

    FormDocument exx = parse_document(fixture_document("fig-exx"));
    CHECK(exx.dim == 9);
    CHECK(exx.entries.size() == 14);
    int arcs = 0;
    for (const DocEntry& e : exx.entries) arcs += e.symmetric ? 0 : 1;
    CHECK(arcs == 4);
    REQUIRE(exx.blocks.size() == 2);
    CHECK(exx.blocks[0] == std::vector<std::string>{"b3", "b6"});
    CHECK(exx.blocks[1] == std::vector<std::string>{"b1", "b2", "b4", "b5"});
}

TEST_CASE("exx document reproduces the handwritten form") {
    FormDocument doc = parse_document(fixture_document("fig-exx"));
    BilinearForm f = document_form(doc);
    BilinearForm want = th::exx_form();
    REQUIRE(f.n == want.n);
    for (uint32_t i = 0; i < f.n; ++i)
        for (uint32_t j = 0; j < f.n; ++j) {
            CAPTURE(i);
            CAPTURE(j);
            CHECK(f.entry(i, j) == want.entry(i, j));
        }
    GeneratingSet b = document_gens(doc);
    CHECK(b.labels == doc.labels);
    CHECK(b.size() == 6);
    CHECK(document_blocks(doc) == std::vector<std::vector<uint32_t>>{{2, 5}, {0, 1, 3, 4}});
}

TEST_CASE("parser rejects malformed documents") {
    auto bad = [](const std::string& text, const std::string& needle) {
        try {
            parse_document(text);
            FAIL_CHECK("expected a parse error for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    bad("dim 2\nlabels a b\ngens a b\nedge a a\n", "line 4");
    bad("dim 2\nlabels a b\ngens a b\nfrob a b\n", "unknown keyword");
    bad("dim 2\nlabels a a\ngens a\n", "unique");
    bad("dim 0\nlabels\ngens\n", "between 1 and 32");
    bad("dim 33\nlabels a\ngens a\n", "between 1 and 32");
    bad("labels a b\ngens a b\n", "missing dim");
    bad("dim 2\ngens a b\n", "missing labels");
    bad("dim 3\nlabels a b\ngens a\n", "dim is 3");
    bad("dim 2\nlabels a b\n", "missing gens");
    bad("dim 2\nlabels a b\ngens a c\n", "unknown label");
    bad("dim 2\nlabels a b\ngens a a\n", "repeat");
    bad("dim 2\nlabels a b\ngens a b\nedge a b\narc a b\n", "pair");
    bad("dim 2\nlabels a b\ngens a b\narc a b\narc b a\n", "pair");
    bad("dim 2\nlabels a b\ngens a\nblocks (b)\n", "non-generator");
    bad("dim 2\nlabels a b\ngens a b\nblocks (a\n", "unclosed");
    bad("dim 2\nlabels a b\ngens a b\nblocks ()\n", "empty block group");
    bad("dim 2\nlabels a b\ngens a b\nvector w q\n", "line 4");
    bad("dim 2\nlabels a b\ngens a b\nvector w w\n", "cannot read");
    bad("dim 2\nlabels a b\ngens a b\nvector w s\nvector s a\n", "cannot read");

    // identical repeated declarations are tolerated, conflicting ones are not
    CHECK_NOTHROW(parse_document("dim 2\nlabels a b\ngens a b\nedge a b\nedge b a\n"));
    CHECK_NOTHROW(parse_document("dim 2\nlabels a b\ngens a b\narc a b\narc a b\n"));
}

TEST_CASE("vector syntax covers names, label sums, and bitstrings") {
    FormDocument doc = parse_document(
        "dim 3\nlabels a b c\ngens a b\nedge a b\n"
        "vector w a+c\nvector s w\n");
    CHECK(parse_vector(doc, "a+c") == th::vec(3, {0, 2}));
    CHECK(parse_vector(doc, "w") == th::vec(3, {0, 2}));
    CHECK(parse_vector(doc, "s") == th::vec(3, {0, 2}));
    CHECK(parse_vector(doc, "101") == th::vec(3, {0, 2}));
    CHECK(parse_vector(doc, "b") == F2Vec::unit(3, 1));
    CHECK(parse_vector(doc, "000") == F2Vec::zero(3));
    CHECK_THROWS_AS(parse_vector(doc, "a+a"), ParseError);
    CHECK_THROWS_AS(parse_vector(doc, "nope"), ParseError);
    CHECK_THROWS_AS(parse_vector(doc, "a+"), ParseError);
    CHECK_THROWS_AS(parse_vector(doc, "0101"), ParseError);
    CHECK_THROWS_AS(parse_vector(doc, ""), ParseError);
}

TEST_CASE("fixture families generate and classify as named") {
    auto label_of = [](const std::string& name) {
        FormDocument doc = parse_document(fixture_document(name));
        return recognize(document_gens(doc)).to_string();
    };
    CHECK(label_of("cycle:5") == "D(3,2)");
    CHECK(label_of("cycle:4") == "D(2,2)");
    CHECK(label_of("cycle:3") == "D(2,1)");
    CHECK(label_of("dmk:3,2") == "D(3,2)");
    CHECK(label_of("dmk:2,4") == "D(2,4)");
    CHECK(label_of("e6") == "A(3,0)");
    CHECK(label_of("janssen-a:3,0") == "A(3,0)");
    CHECK(label_of("janssen-a:4,1") == "A(4,1)");
    CHECK(label_of("janssen-b:4,0") == "B(4,0)");
    CHECK(label_of("janssen-c:3,1") == "C(3,1)");

    for (const char* name : {"dmk:1,1", "dmk:2", "dmk:2,1,3", "cycle:2", "janssen-a:2,0",
                             "janssen-b:3,0", "janssen-c:3,0", "nosuch", "dmk:a,b"}) {
        CAPTURE(name);
        CHECK_THROWS_AS(fixture_document(name), ParseError);
    }

    CHECK(is_fixture_name("fig-ex"));
    CHECK(is_fixture_name("dmk:9,9"));
    CHECK(is_fixture_name("e6"));
    CHECK_FALSE(is_fixture_name("nosuch"));
    CHECK_FALSE(is_fixture_name("figex"));
    CHECK(fixture_names().size() == 8);
}

TEST_CASE("orbits command reports the stored figure counts") {
    CommandOptions o = with_input("fig-ex");
    o.domain = "all";
    o.json = true;
    RunResult r = run("orbits", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["total"] == 52);

    o.input = "fig-exx";
    r = run("orbits", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["total"] == 30);

    // a coset domain partitions 2^6 vectors
    o.input = "fig-ex";
    o.domain = "coset:v2";
    r = run("orbits", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["total"] == 2);
    CHECK(r.json["checks"][0]["pass"] == true);
}

TEST_CASE("classify, recognize, and d commands") {
    CommandOptions o = with_input("fig-exx");
    o.vector = "b3+b6";
    o.json = true;
    RunResult r = run("classify", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["label"] == "moving(d=1)");
    CHECK(r.json["result"]["q"] == 1);

    RunResult rec = run("recognize", with_input("cycle:5"));
    CHECK(rec.rc == 0);
    CHECK(rec.out.find("D(3,2)") != std::string::npos);

    CommandOptions od = with_input("dmk:4,2");
    od.vector = "a1+a3";
    od.oracle = true;
    od.json = true;
    RunResult rd = run("d", od);
    CHECK(rd.rc == 0);
    CHECK(rd.json["result"]["formula"] == 2);
    CHECK(rd.json["result"]["oracle"] == 2);
    CHECK(rd.json["checks"][0]["pass"] == true);
}

TEST_CASE("v000 command exposes the dimension-3 boundary") {
    CommandOptions o = with_input("dmk:2,1");
    o.method = "subgraphs";
    RunResult r = run("v000", o);
    CHECK(r.rc == 1);
    CHECK(r.out.find("[FAIL]") != std::string::npos);

    o.method = "brute";
    r = run("v000", o);
    CHECK(r.rc == 0);
    CHECK(r.out.find("a1+c1") != std::string::npos);

    o.input = "dmk:2,3";
    o.method = "subgraphs";
    o.json = true;
    r = run("v000", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["dim"] == 3);
}

TEST_CASE("coset and blocks commands check themselves against brute force") {
    CommandOptions o = with_input("fig-ex");
    o.vector = "v2";
    o.json = true;
    RunResult r = run("coset", o);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["branch"] == "two-orbits");
    CHECK(r.json["result"]["partition"]["total"] == 2);
    CHECK(r.json["checks"][0]["name"] == "matches-brute-partition");
    CHECK(r.json["checks"][0]["pass"] == true);

    CommandOptions ob = with_input("fig-exx");
    ob.vector = "v3";
    ob.json = true;
    RunResult rb = run("blocks", ob);
    CHECK(rb.rc == 0);
    CHECK(rb.json["result"]["firstActiveBlock"] == 1);
    CHECK(rb.json["result"]["orbitSize"] == 48);

    // a vector fixed by every block
    ob.vector = "v3+v1+b6+b4";
    rb = run("blocks", ob);
    CHECK(rb.rc == 0);
    CHECK(rb.json["result"]["firstActiveBlock"].is_null());
    CHECK(rb.json["result"]["orbitSize"] == 1);
}

TEST_CASE("verify command selects the applicable suites") {
    RunResult r = run("verify", with_input("dmk:3,2"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("d-formula-equals-oracle") != std::string::npos);
    CHECK(r.out.find("block-predictions") == std::string::npos);

    r = run("verify", with_input("fig-exx"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("alternating: false") != std::string::npos);
    CHECK(r.out.find("block-predictions") != std::string::npos);
    CHECK(r.out.find("recognize") == std::string::npos);

    r = run("verify", with_input("dmk:2,1"));
    CHECK(r.rc == 0);
    CHECK(r.out.find("v000-dim3-boundary") != std::string::npos);

    CommandOptions of = with_input("e6");
    of.level = "full";
    r = run("verify", of);
    CHECK(r.rc == 0);
    CHECK(r.out.find("recognize - A(3,0)") != std::string::npos);
}

TEST_CASE("fixtures command prints documents verbatim") {
    RunResult r = run("fixtures", CommandOptions{});
    CHECK(r.rc == 0);
    CHECK(r.out.find("dmk:M,K") != std::string::npos);

    r = run("fixtures", with_input("fig-ex"));
    CHECK(r.rc == 0);
    CHECK(r.out == fixture_document("fig-ex"));

    r = run("fixtures", with_input("nosuch"));
    CHECK(r.rc == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("usage errors exit with status 2") {
    RunResult r = run("frobnicate", with_input("e6"));
    CHECK(r.rc == 2);
    CHECK(r.err.find("unknown command") != std::string::npos);

    r = run("orbits", CommandOptions{});
    CHECK(r.rc == 2);

    CommandOptions o = with_input("fig-ex");
    o.domain = "everything";
    r = run("orbits", o);
    CHECK(r.rc == 2);

    r = run("classify", with_input("fig-ex"));  // no --vector
    CHECK(r.rc == 2);

    o = with_input("fig-ex");
    o.vector = "v1+v1";
    r = run("classify", o);
    CHECK(r.rc == 2);

    r = run("blocks", with_input("fig-ex"));  // document declares no blocks
    CHECK(r.rc == 2);

    o = with_input("fig-ex");
    o.vector = "b1";  // inside the span, so not a coset problem
    r = run("coset", o);
    CHECK(r.rc == 2);

    CommandOptions ov = with_input("dmk:3,2");
    ov.level = "thorough";
    r = run("verify", ov);
    CHECK(r.rc == 2);

    CommandOptions om = with_input("dmk:3,2");
    om.method = "magic";
    r = run("v000", om);
    CHECK(r.rc == 2);
}

TEST_CASE("input may be a document file instead of a fixture name") {
    const char* path = "cli_probe_input.doc";
    {
        std::ofstream f(path);
        f << "dim 3\nlabels a b c\ngens a b c\nedge a b\nedge b c\n";
    }
    CommandOptions o = with_input(path);
    o.json = true;
    RunResult r = run("orbits", o);
    std::remove(path);
    CHECK(r.rc == 0);
    CHECK(r.json["result"]["total"] == 3);
}

TEST_CASE("reports are deterministic across runs") {
    for (const char* cmd : {"orbits", "verify"}) {
        CAPTURE(cmd);
        CommandOptions o = with_input("dmk:4,2");
        o.json = true;
        RunResult a = run(cmd, o);
        RunResult b = run(cmd, o);
        CHECK(a.rc == b.rc);
        CHECK(a.out == b.out);
    }
}
