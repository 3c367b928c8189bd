#include "qweyl/driver.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace qweyl;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg)
{
    static const std::map<std::string, OutputFormat> formats = {
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"latex", OutputFormat::Latex}};
    static const std::map<std::string, SideSelection> sides = {
        {"plus", SideSelection::Plus}, {"minus", SideSelection::Minus}, {"both", SideSelection::Both}};
    static const std::map<std::string, FactorOrder> orders = {{"ascending", FactorOrder::Ascending},
                                                              {"descending", FactorOrder::Descending}};
    cmd->add_option("--format", cfg.format, "Output format: text, json or latex")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    cmd->add_option("--side", cfg.side, "plus, minus or both")
        ->transform(CLI::CheckedTransformer(sides, CLI::ignore_case));
    cmd->add_option("--order", cfg.order, "Prefactor product order: ascending or descending")
        ->transform(CLI::CheckedTransformer(orders, CLI::ignore_case));
    cmd->add_option("--shift", cfg.shifts, "B (plus) or D (minus): integers or 'symbolic'")->delimiter(',');
    cmd->add_option("--poly", cfg.poly, "R(a) (plus) or Q(b) (minus), e.g. \"2a^2 - a + 1\"");
    cmd->add_option("--gammas", cfg.gammas, "Five comma-separated Gaussian rationals, e.g. \"1,0,1/2-i,0,3\"");
    cmd->add_option("--jobs", cfg.jobs, "Worker threads (default from QWEYL_JOBS, else 1)")
        ->check(CLI::PositiveNumber);
}

void add_verify_options(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--s-max", cfg.s_max, "Largest s checked");
    cmd->add_option("--seed", cfg.seed, "Seed for random parameter draws");
    cmd->add_option("--draws", cfg.draws, "Random parameter draws per s")->check(CLI::NonNegativeNumber);
    cmd->add_option("--cone", cfg.cone, "Reduce modulo the momentum cone: on or off")
        ->transform(CLI::CheckedTransformer(std::map<std::string, bool>{{"on", true}, {"off", false}},
                                            CLI::ignore_case));
    cmd->add_flag("--timing", cfg.timing, "Record wall-clock times in the report");
    cmd->add_flag("--mutate", cfg.mutate, "Double the middle coefficient of the fourth-order operators");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of q-deformed conformal Weyl gravity solutions"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.jobs = default_jobs();
    std::string word;

    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite")->require_subcommand(1);
    CLI::App* v_dal = verify->add_subcommand("dalembert", "q-d'Alembert annihilation of the plane-wave components");
    CLI::App* v_weyl = verify->add_subcommand("weyl", "q-Weyl equations on the solution components");
    CLI::App* v_cls = verify->add_subcommand("classical", "q = 1 regression suite");
    for (CLI::App* c : {v_dal, v_weyl, v_cls}) {
        add_common(c, cfg);
        add_verify_options(c, cfg);
    }
    v_cls->add_option("--degree", cfg.coord_degree, "Coordinate degree bound of the monomial set");
    v_cls->add_option("--z-degree", cfg.z_degree, "z and zb degree bound of the monomial set");

    CLI::App* expand = app.add_subcommand("expand", "Print an expanded expression")->require_subcommand(1);
    CLI::App* e_pw = expand->add_subcommand("planewave", "Plane-wave component of degree s");
    CLI::App* e_chat = expand->add_subcommand("chat", "Weyl solution component of degree s");
    CLI::App* e_word = expand->add_subcommand("word", "Normal form of a word such as \"x+ * x-\"");
    for (CLI::App* c : {e_pw, e_chat, e_word})
        add_common(c, cfg);
    for (CLI::App* c : {e_pw, e_chat})
        c->add_option("--s", cfg.s, "Degree s")->check(CLI::NonNegativeNumber);
    e_word->add_option("word", word, "Word in v, x-, x+, vb or kv, k-, k+, kvb")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (v_dal->parsed())
            return cmd_verify_dalembert(cfg, std::cout);
        if (v_weyl->parsed())
            return cmd_verify_weyl(cfg, std::cout);
        if (v_cls->parsed())
            return cmd_verify_classical(cfg, std::cout);
        if (e_pw->parsed())
            return cmd_expand_planewave(cfg, std::cout);
        if (e_chat->parsed())
            return cmd_expand_chat(cfg, std::cout);
        if (e_word->parsed())
            return cmd_expand_word(cfg, word, std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
