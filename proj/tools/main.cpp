#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "transvec/commands.hpp"

using transvec::CommandOptions;

namespace {

struct Sub {
    CLI::App* app = nullptr;
    CommandOptions opts;
};

void add_input(CLI::App* app, CommandOptions& opts, bool required = true) {
    auto* o = app->add_option("--input,-i", opts.input,
                              "fixture name or path to a form document");
    if (required) o->required();
}

void add_vector(CLI::App* app, CommandOptions& opts) {
    app->add_option("--vector,-v", opts.vector,
                    "vector as L1+L2+..., a bitstring, or a name from the document")
        ->required();
}

void add_json(CLI::App* app, CommandOptions& opts) {
    app->add_flag("--json", opts.json, "emit the report as JSON");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"transvection orbit calculator for bilinear forms over F2"};
    app.require_subcommand(1);

    Sub orbits, classify, recognize, dcmd, v000, coset, blocks, verify, fixtures;

    orbits.app = app.add_subcommand("orbits", "partition a domain into orbit classes");
    add_input(orbits.app, orbits.opts);
    orbits.app->add_option("--domain", orbits.opts.domain,
                           "span (default), all, or coset:VEC");
    add_json(orbits.app, orbits.opts);

    classify.app = app.add_subcommand("classify", "orbit label of one vector");
    add_input(classify.app, classify.opts);
    add_vector(classify.app, classify.opts);
    add_json(classify.app, classify.opts);

    recognize.app = app.add_subcommand("recognize", "equivalence class of the generating set");
    add_input(recognize.app, recognize.opts);
    add_json(recognize.app, recognize.opts);

    dcmd.app = app.add_subcommand("d", "decomposition count of a vector");
    add_input(dcmd.app, dcmd.opts);
    add_vector(dcmd.app, dcmd.opts);
    dcmd.app->add_flag("--oracle", dcmd.opts.oracle,
                       "also run the search oracle and cross-check");
    add_json(dcmd.app, dcmd.opts);

    v000.app = app.add_subcommand("v000", "radical subspace reached from the basis orbit");
    add_input(v000.app, v000.opts);
    v000.app->add_option("--method", v000.opts.method, "brute (default) or subgraphs");
    add_json(v000.app, v000.opts);

    coset.app = app.add_subcommand("coset", "classify the action on v + span(B)");
    add_input(coset.app, coset.opts);
    add_vector(coset.app, coset.opts);
    add_json(coset.app, coset.opts);

    blocks.app = app.add_subcommand("blocks", "orbit predicted by the declared block chain");
    add_input(blocks.app, blocks.opts);
    add_vector(blocks.app, blocks.opts);
    add_json(blocks.app, blocks.opts);

    verify.app = app.add_subcommand("verify", "run the property suites that apply to the input");
    add_input(verify.app, verify.opts);
    verify.app->add_option("--level", verify.opts.level, "quick (default) or full");
    add_json(verify.app, verify.opts);

    fixtures.app = app.add_subcommand("fixtures", "list built-in documents or print one");
    fixtures.app->add_option("name", fixtures.opts.input, "fixture name to print");
    add_json(fixtures.app, fixtures.opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    for (Sub* sub : {&orbits, &classify, &recognize, &dcmd, &v000, &coset, &blocks, &verify,
                     &fixtures})
        if (sub->app->parsed())
            return transvec::run_command(sub->app->get_name(), sub->opts, std::cout, std::cerr);
    return 2;
}
