#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssbid/bridge.hpp"
#include "ssbid/demand.hpp"
#include "ssbid/gadgets.hpp"
#include "ssbid/io.hpp"
#include "ssbid/learn_general.hpp"
#include "ssbid/learn_positive.hpp"
#include "ssbid/validity.hpp"

namespace {

using namespace ssbid;

std::string instance_header(const Instance &inst) {
    return "n=" + std::to_string(inst.bidlist.n) +
           " B=" + std::to_string(inst.bidlist.bids.size()) +
           " M=" + std::to_string(inst.magnitude) + " W=" + std::to_string(inst.max_weight);
}

std::vector<std::pair<std::string, std::string>> ledger_rows(const QueryLedger &ledger) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("queries_total", std::to_string(ledger.total));
    for (QueryCategory c : {QueryCategory::Delta, QueryCategory::Existence, QueryCategory::Super,
                            QueryCategory::Search, QueryCategory::Other})
        rows.emplace_back("queries_" + category_name(c), std::to_string(ledger.category(c)));
    return rows;
}

void emit_report(const std::string &path, const std::string &header,
                 const std::vector<std::pair<std::string, std::string>> &rows) {
    std::ostringstream out;
    out << header << "\n";
    for (const auto &[k, v] : rows) out << k << "=" << v << "\n";
    if (path.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream file(path);
        file << out.str();
    }
}

int run_learner(const std::string &bids_path, const std::string &report_path, bool positive,
                std::size_t max_vertices) {
    Instance inst = Instance::from(read_bidlist(bids_path));
    DemandOracle oracle(inst);
    BidList learnt;
    if (positive) {
        learnt = learn_positive_bids(oracle);
    } else {
        LearnLimits limits;
        limits.max_vertices = max_vertices;
        learnt = learn_general_bids(oracle, limits);
    }
    bool recovered = bidlists_equal(learnt, inst.bidlist);
    auto rows = ledger_rows(oracle.ledger());
    rows.emplace_back("recovered", recovered ? "true" : "false");
    emit_report(report_path, instance_header(inst), rows);
    std::cout << bidlist_to_json(learnt);
    return recovered ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Strong-substitutes bid lists: demand evaluation, query learning, validation"};
    app.require_subcommand(1);

    std::string bids_path, price_text, report_path, out_path, cell_text;
    std::size_t max_vertices = 1000000;
    int opt_n = 2, opt_k = 2;
    std::uint64_t seed = 0;
    std::string algo = "general";

    auto *cmd_demand = app.add_subcommand("demand", "Evaluate demand at a price");
    cmd_demand->add_option("--bids", bids_path, "Bid-list file")->required();
    cmd_demand->add_option("--price", price_text, "Comma-separated exact rationals")->required();

    auto *cmd_lp = app.add_subcommand("learn-positive", "Learn an all-positive bid list");
    cmd_lp->add_option("--bids", bids_path, "Bid-list file")->required();
    cmd_lp->add_option("--report", report_path, "Write a query-count report");

    auto *cmd_lg = app.add_subcommand("learn-general", "Learn a mixed-sign bid list");
    cmd_lg->add_option("--bids", bids_path, "Bid-list file")->required();
    cmd_lg->add_option("--max-vertices", max_vertices, "Abort past this many vertices");
    cmd_lg->add_option("--report", report_path, "Write a query-count report");

    auto *cmd_validate = app.add_subcommand("validate", "Check bid-list validity");
    cmd_validate->add_option("--bids", bids_path, "Bid-list file")->required();

    auto *cmd_gadget = app.add_subcommand("gadget", "Emit an adversarial instance file");
    cmd_gadget->add_option("--n", opt_n, "Number of goods")->required();
    cmd_gadget->add_option("--k", opt_k, "Lattice parameter; magnitude is 4k")->required();
    cmd_gadget->add_option("--cell", cell_text, "Gadget cell, e.g. \"4,0\" (default origin)");
    cmd_gadget->add_option("--out", out_path, "Output file (default stdout)");

    auto *cmd_bench = app.add_subcommand("bench", "Run a learner and report ledger counts");
    cmd_bench->add_option("--bids", bids_path, "Bid-list file")->required();
    cmd_bench->add_option("--algo", algo, "positive or general")
        ->check(CLI::IsMember({"positive", "general"}));
    cmd_bench->add_option("--max-vertices", max_vertices, "Abort past this many vertices");
    cmd_bench->add_option("--report", report_path, "Write the report to a file");

    auto *cmd_lb = app.add_subcommand("bench-lower-bound", "Adversarial gadget experiment");
    cmd_lb->add_option("--n", opt_n, "Number of goods")->required();
    cmd_lb->add_option("--k", opt_k, "Lattice parameter")->required();
    cmd_lb->add_option("--seed", seed, "Random seed for the gadget cell");
    cmd_lb->add_option("--report", report_path, "Write the report to a file");

    auto *cmd_bridge = app.add_subcommand("bridge-demo", "Demand via a valuation oracle");
    cmd_bridge->add_option("--bids", bids_path, "Positive bid-list file")->required();
    cmd_bridge->add_option("--price", price_text, "Comma-separated exact rationals")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*cmd_demand) {
            Instance inst = Instance::from(read_bidlist(bids_path));
            DemandOracle oracle(inst);
            RationalPoint p = parse_price(price_text, inst.bidlist.n);
            std::cout << bundle_to_string(oracle.query(p, QueryCategory::Other)) << "\n";
            return 0;
        }
        if (*cmd_lp) return run_learner(bids_path, report_path, true, max_vertices);
        if (*cmd_lg) return run_learner(bids_path, report_path, false, max_vertices);
        if (*cmd_validate) {
            BidList bids = read_bidlist(bids_path);
            auto witness = is_valid(bids);
            if (!witness) {
                std::cout << "valid\n";
                return 0;
            }
            std::cout << "violation p=" << point_to_string(witness->p) << " i=" << witness->i
                      << " j=" << witness->j << " sum=" << witness->sum << "\n";
            return 1;
        }
        if (*cmd_gadget) {
            std::vector<Coord> cell(opt_n, 0);
            if (!cell_text.empty()) {
                RationalPoint parsed = parse_price(cell_text, opt_n);
                for (int i = 0; i < opt_n; ++i) {
                    if (!is_integral(parsed[i])) throw ParseError("cell must be integral");
                    cell[i] = rat_floor(parsed[i]).convert_to<Coord>();
                }
            }
            BidList inst = adversarial_instance(opt_n, opt_k, cell);
            if (out_path.empty())
                std::cout << bidlist_to_json(inst);
            else
                write_bidlist(out_path, inst);
            return 0;
        }
        if (*cmd_bench)
            return run_learner(bids_path, report_path, algo == "positive", max_vertices);
        if (*cmd_lb) {
            LowerBoundReport r = lower_bound_experiment(opt_n, opt_k, seed);
            std::vector<std::pair<std::string, std::string>> rows;
            rows.emplace_back("queries_used", std::to_string(r.queries_used));
            rows.emplace_back("k_power_n", std::to_string(r.k_power_n));
            rows.emplace_back("located_cell", [&] {
                std::string s;
                for (size_t i = 0; i < r.located_cell.size(); ++i)
                    s += (i ? "," : "") + std::to_string(r.located_cell[i]);
                return s;
            }());
            rows.emplace_back("recovered", r.recovered ? "true" : "false");
            rows.emplace_back("bid_count", std::to_string(r.bid_count));
            rows.emplace_back("merged_bid_count", std::to_string(r.merged_bid_count));
            emit_report(report_path,
                        "n=" + std::to_string(r.n) + " k=" + std::to_string(r.k) +
                            " M=" + std::to_string(4 * r.k),
                        rows);
            return r.recovered ? 0 : 1;
        }
        if (*cmd_bridge) {
            BidList bids = read_bidlist(bids_path);
            ValuationOracle vo = ValuationOracle::from_positive_bids(bids);
            RationalPoint p = parse_price(price_text, bids.n);
            Bundle x = demand_from_valuation(vo, p);
            std::cout << bundle_to_string(x) << "\n";
            std::cout << "valuation_queries=" << vo.queries() << "\n";
            return 0;
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
