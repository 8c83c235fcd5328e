// Command-line front end: exact Casselman-Shalika values, Satake transfer
// through the theta correspondence, degree-5 standard L-factors, the
// unramified zeta-integral identity checks, the numeric period-integral
// oracle, and the acceptance selftest.

#include <CLI11.hpp>

#include "cassel/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact spherical Shalika / L-factor calculator"};
    app.require_subcommand(1);

    cassel::RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool wants_case, bool wants_mode) {
        if (wants_case)
            sub->add_option("--case", cfg.cs_case, "inert or split")
                ->check(CLI::IsMember({"inert", "split"}));
        if (wants_mode)
            sub->add_option("--mode", cfg.mode, "symbolic or numeric")
                ->check(CLI::IsMember({"symbolic", "numeric"}));
        sub->add_option("--order", cfg.order,
                        "truncation order (default 8 symbolic / 16 numeric; "
                        "CASSEL_ORDER overrides the default)");
        sub->add_option("--input", cfg.input, "character JSON (path or inline)");
        sub->add_option("--output", cfg.output, "write the report here instead of stdout");
        sub->add_option("--format", cfg.format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--seed", cfg.seed, "seed for randomized batches");
    };

    auto* verify = app.add_subcommand("verify-identity",
                                      "compare the zeta series with the L-factor series");
    add_common(verify, true, true);

    auto* csv = app.add_subcommand("cs-values", "spherical Shalika values at torus depths");
    add_common(csv, true, true);
    csv->add_option("--n", cfg.n_range, "depth or range, e.g. 3 or 0..5");

    auto* lf = app.add_subcommand("lfactor", "degree-5 standard L-factor and its expansion");
    add_common(lf, true, true);

    auto* tt = app.add_subcommand("theta-transfer", "character transfer to the unitary side");
    add_common(tt, false, false);

    auto* sr = app.add_subcommand("shalika-report",
                                  "existence/uniqueness verdict with boundary flags");
    add_common(sr, false, false);

    auto* po = app.add_subcommand("padic-oracle", "numeric period-integral comparison");
    add_common(po, false, false);
    po->add_option("--which", cfg.which, "1 or 2")->check(CLI::IsMember({1, 2}));

    auto* st = app.add_subcommand("selftest", "run the acceptance criteria");
    add_common(st, false, false);

    CLI11_PARSE(app, argc, argv);

    for (auto* sub : {verify, csv, lf, tt, sr, po, st})
        if (sub->parsed()) cfg.command = sub->get_name();
    return cassel::run(cfg);
}
