// Command-line surface for the anonymity-metrics library.
//
// Exit codes: 0 success, 2 usage or parse error, 3 budget exceeded,
// 4 I/O failure.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mixmetrics/mixmetrics.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct GlobalOptions {
    std::uint64_t budget = mixmetrics::kDefaultTableBudget;
    std::string log_base = "e";
    int precision = 3;
};

double log_base_factor(const std::string& base) {
    if (base == "2") return std::numbers::ln2;
    if (base == "10") return std::numbers::ln10;
    return 1.0;  // natural log
}

// Writes to the path when given, else to stdout.
void emit(const std::optional<std::string>& path, const std::string& content) {
    if (!path) {
        std::cout << content;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw mixmetrics::IoError("cannot open '" + *path + "' for writing");
    out << content;
    if (!out) throw mixmetrics::IoError("write to '" + *path + "' failed");
}

std::string render_report(const mixmetrics::AnonymityReport& r, const GlobalOptions& g) {
    std::ostringstream os;
    os << "n=" << r.n << " count=" << r.count.str()
       << " deg=" << mixmetrics::format_degree(r.deg_a, g.precision);
    os << " edman=";
    if (r.edman_deg)
        os << mixmetrics::format_degree(*r.edman_deg, g.precision);
    else
        os << "n/a";
    os << " gierlichs=";
    if (r.gierlichs_deg)
        os << mixmetrics::format_degree(*r.gierlichs_deg, g.precision);
    else
        os << "n/a";
    os << " entropy=";
    if (r.sd_entropy)
        os << mixmetrics::format_degree(*r.sd_entropy, g.precision);
    else
        os << "n/a";
    os << " diaz=";
    if (r.diaz_deg)
        os << mixmetrics::format_degree(*r.diaz_deg, g.precision);
    else
        os << "n/a";
    return os.str();
}

std::string csv_to_string(const std::vector<std::string>& header,
                          const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    mixmetrics::write_csv(os, header, rows);
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"Exact anonymity metrics for threshold-mix rounds"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may appear after the subcommand

    GlobalOptions g;
    app.add_option("--budget", g.budget, "Size budget for enumerations (tables, terms, pairs)");
    app.add_option("--log-base", g.log_base, "Base for auxiliary log displays")
        ->check(CLI::IsMember({"e", "2", "10"}));
    app.add_option("--precision", g.precision, "Decimals for printed degrees")
        ->check(CLI::Range(0, 15));

    std::string count_spec;
    auto* cmd_count = app.add_subcommand("count", "Count assignments for a profile spec");
    cmd_count->add_option("spec", count_spec, "Profile spec, e.g. \"3,3,2;5,3\"")->required();

    int table_n = 0;
    std::optional<std::string> table_out;
    auto* cmd_table = app.add_subcommand("table", "Exhaustive profile table for a given n");
    cmd_table->add_option("n", table_n, "Total messages per round")->required();
    cmd_table->add_option("--output", table_out, "Write CSV here instead of stdout");

    std::string classes_spec;
    auto* cmd_classes = app.add_subcommand("classes", "List equivalence classes of a profile");
    cmd_classes->add_option("spec", classes_spec, "Profile spec")->required();

    std::string compare_spec;
    auto* cmd_compare = app.add_subcommand("compare", "Full metric report for a profile");
    cmd_compare->add_option("spec", compare_spec, "Profile spec")->required();

    std::string experiment_name;
    std::optional<std::string> experiment_out;
    auto* cmd_experiment = app.add_subcommand("experiment", "Emit a built-in series as CSV");
    cmd_experiment
        ->add_option("name", experiment_name, "fig1|fig2|fig5|fig6|saturation|ranking")
        ->required();
    cmd_experiment->add_option("--output", experiment_out, "Write CSV here instead of stdout");

    std::string ingest_path;
    std::optional<std::string> ingest_round;
    auto* cmd_ingest = app.add_subcommand("ingest", "Report metrics for logged rounds");
    cmd_ingest->add_option("log", ingest_path, "Round log CSV (round,role,user,count)")
        ->required();
    cmd_ingest->add_option("--round", ingest_round, "Only report this round id");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_count->parsed()) {
        const mixmetrics::TrafficProfile profile = mixmetrics::parse_profile_spec(count_spec);
        const mixmetrics::BigCount count = mixmetrics::count_assignments(profile);
        const double deg = mixmetrics::deg_anonymity(count, profile.n());
        const double factor = log_base_factor(g.log_base);
        std::cout << "count=" << count.str()
                  << " deg=" << mixmetrics::format_degree(deg, g.precision);
        if (g.log_base != "e")
            std::cout << " log_count=" << mixmetrics::format_degree(
                             mixmetrics::log_of(count) / factor, g.precision);
        std::cout << "\n";
        return 0;
    }

    if (cmd_table->parsed()) {
        if (table_n < 1) throw mixmetrics::ParseError("table size must be >= 1");
        std::vector<std::vector<std::string>> rows;
        for (const mixmetrics::TableRow& row : mixmetrics::anonymity_table(table_n, g.budget))
            rows.push_back({mixmetrics::render_partition(row.senders),
                            mixmetrics::render_partition(row.receivers), row.count.str(),
                            mixmetrics::format_degree(row.deg, g.precision)});
        emit(table_out, csv_to_string({"senders", "receivers", "count", "deg"}, rows));
        return 0;
    }

    if (cmd_classes->parsed()) {
        const mixmetrics::TrafficProfile profile = mixmetrics::parse_profile_spec(classes_spec);
        const auto tables = mixmetrics::enumerate_tables(profile, g.budget);
        const mixmetrics::BigCount nfact = mixmetrics::factorial(profile.n());
        std::ostringstream os;
        mixmetrics::BigCount total = 0;
        for (std::size_t p = 0; p < tables.size(); ++p) {
            const mixmetrics::BigCount card = mixmetrics::class_cardinality(tables[p]);
            total += card;
            os << "class " << p + 1 << ": ";
            const auto& cells = tables[p].entries();
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (j > 0) os << " | ";
                for (std::size_t i = 0; i < cells[j].size(); ++i) {
                    if (i > 0) os << ',';
                    os << cells[j][i];
                }
            }
            const double prob =
                std::exp(mixmetrics::log_of(card) - mixmetrics::log_of(nfact));
            os << " cardinality=" << card.str() << " p="
               << mixmetrics::format_degree(prob, g.precision) << "\n";
        }
        os << "classes=" << tables.size() << " total=" << total.str() << " dstar="
           << mixmetrics::format_degree(mixmetrics::gierlichs_degree(profile, g.budget),
                                        g.precision)
           << "\n";
        std::cout << os.str();
        return 0;
    }

    if (cmd_compare->parsed()) {
        const mixmetrics::TrafficProfile profile = mixmetrics::parse_profile_spec(compare_spec);
        mixmetrics::ReportOptions opts;
        opts.max_tables = g.budget;
        const mixmetrics::AnonymityReport report = mixmetrics::full_report(profile, opts);
        std::cout << render_report(report, g);
        const double factor = log_base_factor(g.log_base);
        std::cout << " log_count="
                  << mixmetrics::format_degree(mixmetrics::log_of(report.count) / factor,
                                               g.precision)
                  << " log_max="
                  << mixmetrics::format_degree(
                         mixmetrics::log_of(mixmetrics::factorial(report.n)) / factor,
                         g.precision)
                  << "\n";
        return 0;
    }

    if (cmd_experiment->parsed()) {
        const mixmetrics::ExperimentTable t =
            mixmetrics::run_experiment(experiment_name, g.precision);
        emit(experiment_out, csv_to_string(t.header, t.rows));
        return 0;
    }

    if (cmd_ingest->parsed()) {
        std::ifstream in(ingest_path, std::ios::binary);
        if (!in) throw mixmetrics::IoError("cannot open '" + ingest_path + "'");
        const std::vector<mixmetrics::RoundObservation> rounds = mixmetrics::parse_round_log(in);
        bool any_rejected = false;
        bool found = false;
        mixmetrics::ReportOptions opts;
        opts.max_tables = g.budget;
        for (const mixmetrics::RoundObservation& obs : rounds) {
            if (ingest_round && obs.round_id != *ingest_round) continue;
            found = true;
            try {
                const mixmetrics::TrafficProfile profile =
                    mixmetrics::profile_from_observation(obs);
                std::cout << "round " << obs.round_id << ": "
                          << render_report(mixmetrics::full_report(profile, opts), g) << "\n";
            } catch (const mixmetrics::UnbalancedRound& e) {
                std::cerr << "round " << obs.round_id << " rejected: " << e.what() << "\n";
                any_rejected = true;
            } catch (const mixmetrics::NonPositiveEntry& e) {
                std::cerr << "round " << obs.round_id << " rejected: " << e.what() << "\n";
                any_rejected = true;
            }
        }
        if (ingest_round && !found) {
            std::cerr << "round " << *ingest_round << " not present in log\n";
            return kExitUsage;
        }
        return any_rejected ? kExitUsage : 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mixmetrics::SizeBudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const mixmetrics::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const mixmetrics::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
