// conjdist: construct, verify, and exhaustively cross-check witness pairs
// (x, y) realizing a target Hamming distance between the conjugates xy and
// yx. Subcommands: construct, check, feasible, table, lexmin.
//
// Exit codes: 0 success, 1 infeasible, 2 argument error, 3 budget exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "conjdist/constructor.hpp"
#include "conjdist/core.hpp"
#include "conjdist/feasibility.hpp"
#include "conjdist/oracle.hpp"

namespace {

using conjdist::AchievabilityRecord;
using conjdist::OracleBudget;
using conjdist::ProblemInstance;
using conjdist::Str;
using conjdist::Verdict;
using conjdist::Witness;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitSuccess = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitArgError = 2;
constexpr int kExitBudget = 3;

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* text = std::getenv("CONJDIST_BUDGET")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text, &end, 10);
        if (end == text || *end != '\0' || value == 0) {
            throw std::invalid_argument("CONJDIST_BUDGET must be a positive integer, got '" +
                                        std::string(text) + "'");
        }
        budget.max_pairs = value;
    }
    return budget;
}

// Normalizes and explains what changed, so stdout stays machine-readable.
ProblemInstance make_instance_with_notices(std::int64_t m, std::int64_t n, std::int64_t k,
                                           int sigma) {
    if (m > n) {
        std::cerr << "notice: swapped m and n (the distance is symmetric)\n";
    }
    if (sigma > conjdist::kMaxAlphabet) {
        std::cerr << "warning: alphabet size " << sigma
                  << " treated as 3; three symbols always suffice\n";
    }
    return conjdist::make_instance(m, n, k, sigma);
}

// Stable schema shared by construct, feasible, table and lexmin output.
ordered_json witness_json(const ProblemInstance& inst, const Verdict& verdict,
                          const std::optional<Witness>& witness) {
    ordered_json out;
    out["m"] = inst.m;
    out["n"] = inst.n;
    out["k"] = inst.k;
    out["alphabet"] = inst.sigma;
    out["feasible"] = verdict.feasible;
    out["reason"] = std::string(conjdist::reason_name(verdict.reason));
    if (witness) {
        out["x"] = witness->x.text();
        out["y"] = witness->y.text();
        out["verified"] = conjdist::conjugate_mismatch(witness->x, witness->y) ==
                          static_cast<std::size_t>(witness->k);
    } else {
        out["x"] = nullptr;
        out["y"] = nullptr;
        out["verified"] = false;
    }
    return out;
}

void print_witness_text(const ProblemInstance& inst, const Verdict& verdict,
                        const std::optional<Witness>& witness) {
    std::cout << "m " << inst.m << "\n"
              << "n " << inst.n << "\n"
              << "k " << inst.k << "\n"
              << "alphabet " << inst.sigma << "\n"
              << "feasible " << (verdict.feasible ? "true" : "false") << "\n"
              << "reason " << conjdist::reason_name(verdict.reason) << "\n";
    if (witness) {
        std::cout << "x " << witness->x.text() << "\n"
                  << "y " << witness->y.text() << "\n"
                  << "verified true\n";
    }
}

int run_construct(std::int64_t m, std::int64_t n, std::int64_t k, int sigma, bool as_json) {
    const ProblemInstance inst = make_instance_with_notices(m, n, k, sigma);
    const Verdict verdict = conjdist::feasible(inst);
    std::optional<Witness> witness;
    if (verdict.feasible) witness = conjdist::construct(inst);

    if (as_json) {
        std::cout << witness_json(inst, verdict, witness).dump() << "\n";
    } else {
        print_witness_text(inst, verdict, witness);
    }
    return verdict.feasible ? kExitSuccess : kExitInfeasible;
}

int run_check(const std::string& x_text, const std::string& y_text, bool as_json) {
    if (x_text.empty() || y_text.empty()) {
        throw std::invalid_argument("check: both strings must be nonempty");
    }
    const Str x = Str::parse(x_text);
    const Str y = Str::parse(y_text);
    const std::size_t f = conjdist::conjugate_mismatch(x, y);
    const auto decomposition = conjdist::cycle_decomposition(x.size(), y.size());
    const auto cycles = conjdist::cycle_disagreements(conjdist::concat(x, y), decomposition);
    const bool common_power = conjdist::have_common_power(x, y);

    if (as_json) {
        ordered_json out;
        out["x"] = x.text();
        out["y"] = y.text();
        out["m"] = x.size();
        out["n"] = y.size();
        out["f"] = f;
        out["cycles"] = cycles;
        out["common_power"] = common_power;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "x " << x.text() << "\n"
                  << "y " << y.text() << "\n"
                  << "m " << x.size() << "\n"
                  << "n " << y.size() << "\n"
                  << "f " << f << "\n";
        std::cout << "cycles";
        for (std::size_t count : cycles) std::cout << " " << count;
        std::cout << "\n"
                  << "common_power " << (common_power ? "true" : "false") << "\n";
    }
    return kExitSuccess;
}

int run_feasible(std::int64_t m, std::int64_t n, std::int64_t k, int sigma, bool as_json) {
    const ProblemInstance inst = make_instance_with_notices(m, n, k, sigma);
    const Verdict verdict = conjdist::feasible(inst);
    if (as_json) {
        std::cout << witness_json(inst, verdict, std::nullopt).dump() << "\n";
    } else {
        print_witness_text(inst, verdict, std::nullopt);
        std::cout << "capacity " << verdict.capacity << "\n";
    }
    return verdict.feasible ? kExitSuccess : kExitInfeasible;
}

int run_table(std::int64_t max_total, int sigma, bool as_json) {
    if (sigma > conjdist::kMaxAlphabet) {
        std::cerr << "warning: alphabet size " << sigma
                  << " treated as 3; three symbols always suffice\n";
        sigma = conjdist::kMaxAlphabet;
    }
    const OracleBudget budget = budget_from_env();
    for (std::int64_t m = 1; 2 * m <= max_total; ++m) {
        for (std::int64_t n = m; m + n <= max_total; ++n) {
            const AchievabilityRecord record = conjdist::achievable_set(m, n, sigma, budget);
            for (const std::int64_t k : record.achievable) {
                const Witness& witness = record.witness_per_k.at(k);
                if (as_json) {
                    const ProblemInstance inst{m, n, k, sigma};
                    const Verdict verdict = conjdist::feasible(inst);
                    std::cout << witness_json(inst, verdict, witness).dump() << "\n";
                } else {
                    std::cout << m << "\t" << n << "\t" << k << "\t" << witness.x.text()
                              << "\t" << witness.y.text() << "\n";
                }
            }
        }
    }
    return kExitSuccess;
}

int run_lexmin(std::int64_t m, std::int64_t n, std::int64_t k, int sigma, bool as_json) {
    const ProblemInstance inst = make_instance_with_notices(m, n, k, sigma);
    const OracleBudget budget = budget_from_env();
    const std::optional<Witness> witness =
        conjdist::lexmin_witness(inst.m, inst.n, inst.k, inst.sigma, budget);
    const Verdict verdict = conjdist::feasible(inst);

    if (as_json) {
        std::cout << witness_json(inst, verdict, witness).dump() << "\n";
    } else {
        print_witness_text(inst, verdict, witness);
    }
    return witness ? kExitSuccess : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"witness construction and verification for the Hamming distance "
                 "between the conjugates xy and yx"};
    app.require_subcommand(1);

    std::int64_t m = 0, n = 0, k = 0;
    std::int64_t max_total = 0;
    int sigma = 2;
    std::string x_text, y_text;
    bool as_json = false;

    auto add_instance_options = [&](CLI::App* cmd) {
        cmd->add_option("-m", m, "length of x")->required()->check(CLI::PositiveNumber);
        cmd->add_option("-n", n, "length of y")->required()->check(CLI::PositiveNumber);
        cmd->add_option("-k", k, "target distance")->required();
        cmd->add_option("-a,--alphabet", sigma, "alphabet size (2 or 3)")
            ->required()
            ->check(CLI::Range(2, 1000));
    };

    CLI::App* construct_cmd =
        app.add_subcommand("construct", "build a witness pair for (m, n, k)");
    add_instance_options(construct_cmd);
    construct_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    CLI::App* check_cmd = app.add_subcommand("check", "verify a candidate pair");
    check_cmd->add_option("x", x_text, "first string, over {0,1,2}")->required();
    check_cmd->add_option("y", y_text, "second string, over {0,1,2}")->required();
    check_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    CLI::App* feasible_cmd =
        app.add_subcommand("feasible", "decide whether (m, n, k) admits a witness");
    add_instance_options(feasible_cmd);
    feasible_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    CLI::App* table_cmd =
        app.add_subcommand("table", "enumerate achievable distances with lexmin witnesses");
    table_cmd->add_option("--max-total", max_total, "largest m+n to include")
        ->required()
        ->check(CLI::PositiveNumber);
    table_cmd->add_option("-a,--alphabet", sigma, "alphabet size (2 or 3)")
        ->required()
        ->check(CLI::Range(2, 1000));
    table_cmd->add_flag("--json", as_json, "emit JSON lines instead of TSV");

    CLI::App* lexmin_cmd =
        app.add_subcommand("lexmin", "smallest witness pair in x.y lexicographic order");
    add_instance_options(lexmin_cmd);
    lexmin_cmd->add_flag("--json", as_json, "emit JSON instead of text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgError;
    }

    try {
        if (construct_cmd->parsed()) return run_construct(m, n, k, sigma, as_json);
        if (check_cmd->parsed()) return run_check(x_text, y_text, as_json);
        if (feasible_cmd->parsed()) return run_feasible(m, n, k, sigma, as_json);
        if (table_cmd->parsed()) return run_table(max_total, sigma, as_json);
        if (lexmin_cmd->parsed()) return run_lexmin(m, n, k, sigma, as_json);
    } catch (const conjdist::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgError;
    }
    return kExitArgError;
}
