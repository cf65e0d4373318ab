#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qh/report.hpp"

int main(int argc, char** argv) {
    CLI::App app{"verify the blow-up / substitution / limit derivations"};
    qh::RunConfig cfg;
    std::string mode = "specialized", format = "json", out;
    bool list = false;
    app.add_option("--cases", cfg.cases, "glob over case ids")
        ->default_str("*");
    app.add_option("--mode", mode, "specialized|symbolic")
        ->check(CLI::IsMember({"specialized", "symbolic"}));
    app.add_option("--seeds", cfg.seeds, "random bindings per case")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "deterministic RNG seed");
    app.add_option("--truncation", cfg.truncation,
                   "series window for the limit checks");
    app.add_option("--format", format, "json|md")
        ->check(CLI::IsMember({"json", "md"}));
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_flag("--list", list, "print the registry and exit");
    CLI11_PARSE(app, argc, argv);

    if (list) {
        std::cout << qh::registry_listing();
        return 0;
    }
    cfg.symbolic = mode == "symbolic";
    qh::SuiteReport suite = qh::run_suite(cfg);
    std::string doc =
        format == "json" ? qh::emit_json(suite) : qh::emit_markdown(suite);
    if (out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream f(out);
        if (!f || !(f << doc)) {
            std::cerr << "error: cannot write " << out << "\n";
            return 2;
        }
    }
    return suite.failed == 0 ? 0 : 1;
}
