#include "fdl/cli.hpp"

#include "fdl/construction.hpp"
#include "fdl/errors.hpp"
#include "fdl/lemmas.hpp"
#include "fdl/oracle.hpp"
#include "fdl/tables.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <array>
#include <ostream>

namespace fdl::cli {

namespace {

using Json = nlohmann::ordered_json;

Json profile_json(const Profile& p) { return Json(p.parts()); }

Json delays_json(const std::vector<BigInt>& delays) {
    Json out = Json::array();
    for (const auto& d : delays) out.push_back(to_decimal(d));
    return out;
}

std::string join_delays(const std::vector<BigInt>& delays) {
    std::string out;
    for (std::size_t i = 0; i < delays.size(); ++i) {
        if (i) out += ',';
        out += to_decimal(delays[i]);
    }
    return out;
}

std::string quoted(const std::string& s) { return '"' + s + '"'; }

std::string join_profiles(const std::vector<Profile>& profiles) {
    std::string out;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (i) out += " | ";
        out += profiles[i].to_string();
    }
    return out;
}

constexpr const char* at_most_two_caveat =
    "note: for gcd >= 3 only \"at most two optimal profiles\" is established; "
    "use `verify` to check which candidates are optimal for this instance";

void print_level_chain(std::ostream& out, const char* label, const std::vector<Profile>& levels) {
    out << label;
    for (int h = static_cast<int>(levels.size()); h >= 1; --h) {
        out << " h=" << h << ":(" << levels[static_cast<std::size_t>(h - 1)].to_string() << ')';
    }
    out << '\n';
}

Profile profile_for_instance(const CliConfig& cfg) {
    if (!cfg.profile) {
        throw DomainError("--profile is required");
    }
    auto parts = Profile::parse_parts(*cfg.profile);
    require_valid_instance(cfg.m, cfg.k);
    if (static_cast<int>(parts.size()) != cfg.k) {
        throw DomainError("profile has " + std::to_string(parts.size()) + " parts but k=" + std::to_string(cfg.k));
    }
    Profile p = Profile::top_level(std::move(parts));
    if (p.total() != cfg.m) {
        throw DomainError("profile sums to " + std::to_string(p.total()) + " but M=" + std::to_string(cfg.m));
    }
    return p;
}

}  // namespace

Json design_json(const DesignResult& result) {
    Json doc;
    doc["m"] = result.trace.m();
    doc["k"] = result.trace.k();
    doc["gcd"] = result.trace.gcd();
    doc["depth"] = result.trace.depth();
    doc["classification"] = std::string(to_string(result.classification));
    Json candidates = Json::array();
    for (const Profile& p : result.candidates()) {
        const Construction c = build_construction(p);
        Json entry;
        entry["profile"] = profile_json(p);
        entry["delays"] = delays_json(c.delays);
        entry["B"] = to_decimal(c.max_representable());
        candidates.push_back(std::move(entry));
    }
    doc["candidates"] = std::move(candidates);
    return doc;
}

int run_design(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const DesignResult result = design(cfg.m, cfg.k);
    const bool caveat = result.classification == OptimumCount::AtMostTwo;
    switch (cfg.format) {
        case Format::Json:
            out << design_json(result).dump(2) << '\n';
            if (caveat) err << at_most_two_caveat << '\n';
            return exit_ok;
        case Format::Csv:
            out << "profile,B\n";
            for (const Profile& p : result.candidates()) {
                out << quoted(p.to_string()) << ',' << to_decimal(max_representable(p)) << '\n';
            }
            if (caveat) err << at_most_two_caveat << '\n';
            return exit_ok;
        case Format::Human:
            break;
    }
    const auto& t = result.trace;
    out << "instance: M=" << t.m() << " k=" << t.k() << '\n';
    out << "euclid: remainders " << join_parts(t.remainders()) << "; quotients " << join_parts(t.quotients())
        << "; depth " << t.depth() << " (" << (t.odd_depth() ? "odd" : "even") << "); gcd " << t.gcd() << '\n';
    print_level_chain(out, "levels n:", result.levels_n);
    if (!result.levels_m.empty()) print_level_chain(out, "levels m:", result.levels_m);
    out << "classification: " << to_string(result.classification) << '\n';
    const auto candidates = result.candidates();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Construction c = build_construction(candidates[i]);
        out << "candidate " << (i == 0 ? 'n' : 'm') << ": profile " << candidates[i].to_string() << '\n'
            << "  delays " << join_delays(c.delays) << '\n'
            << "  B " << to_decimal(c.max_representable()) << '\n';
    }
    if (caveat) out << at_most_two_caveat << '\n';
    return exit_ok;
}

int run_value(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const Profile p = profile_for_instance(cfg);
    const Construction c = build_construction(p);
    switch (cfg.format) {
        case Format::Json: {
            Json doc;
            doc["m"] = cfg.m;
            doc["k"] = cfg.k;
            doc["profile"] = profile_json(p);
            doc["delays"] = delays_json(c.delays);
            doc["B"] = to_decimal(c.max_representable());
            out << doc.dump(2) << '\n';
            break;
        }
        case Format::Csv:
            out << "profile,B\n" << quoted(p.to_string()) << ',' << to_decimal(c.max_representable()) << '\n';
            break;
        case Format::Human:
            out << "profile " << p.to_string() << '\n'
                << "delays " << join_delays(c.delays) << '\n'
                << "B = " << to_decimal(c.max_representable()) << '\n';
            break;
    }
    return exit_ok;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const DesignResult result = design(cfg.m, cfg.k);
    const OptimalSet optimum = brute_force_optimal(cfg.m, cfg.k, cfg.brute_cap, cfg.workers);
    const auto candidates = result.candidates();
    const auto verdict = judge_agreement(optimum, candidates, result.trace.gcd());
    const int status = verdict.agree ? exit_ok : exit_disagree;

    if (cfg.format == Format::Json) {
        Json doc;
        doc["m"] = cfg.m;
        doc["k"] = cfg.k;
        doc["gcd"] = result.trace.gcd();
        doc["classification"] = std::string(to_string(result.classification));
        doc["space_size"] = optimum.space_size;
        doc["best_B"] = to_decimal(optimum.best_B);
        Json argmax = Json::array();
        for (const auto& p : optimum.argmax) argmax.push_back(profile_json(p));
        doc["argmax"] = std::move(argmax);
        Json proposed = Json::array();
        for (const auto& p : candidates) proposed.push_back(profile_json(p));
        doc["candidates"] = std::move(proposed);
        doc["agree"] = verdict.agree;
        doc["all_candidates_optimal"] = verdict.all_candidates_optimal;
        out << doc.dump(2) << '\n';
        return status;
    }
    out << "instance: M=" << cfg.m << " k=" << cfg.k << " gcd=" << result.trace.gcd() << " ("
        << to_string(result.classification) << ")\n"
        << "profiles searched: " << optimum.space_size << '\n'
        << "best B: " << to_decimal(optimum.best_B) << '\n'
        << "optimal profiles (" << optimum.argmax.size() << "): " << join_profiles(optimum.argmax) << '\n'
        << "designed candidates (" << candidates.size() << "): " << join_profiles(candidates) << '\n';
    if (result.classification == OptimumCount::AtMostTwo) {
        out << "all candidates optimal: " << (verdict.all_candidates_optimal ? "yes" : "no") << '\n';
    }
    out << (verdict.agree ? "AGREE" : "DISAGREE") << '\n';
    return status;
}

int run_tables(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const auto& tables = reference_tables();
    if (cfg.format == Format::Json) {
        Json doc = Json::array();
        for (const auto& table : tables) {
            Json rows = Json::array();
            for (const auto& row : table.rows) {
                Json entry;
                entry["level"] = row.level;
                entry["sequence"] = row.sequence;
                entry["profile"] = row.lifted;
                entry["B"] = to_decimal(max_representable(Profile::top_level(row.lifted)));
                rows.push_back(std::move(entry));
            }
            Json t;
            t["table"] = table.number;
            t["m"] = table.m;
            t["k"] = table.k;
            t["rows"] = std::move(rows);
            doc.push_back(std::move(t));
        }
        out << doc.dump(2) << '\n';
        return exit_ok;
    }
    bool first = true;
    for (const auto& table : tables) {
        if (!first) out << '\n';
        first = false;
        out << "# table " << table.number << ": " << table.title << " (M=" << table.m << ", k=" << table.k << ")\n";
        out << "profile,B\n";
        const EuclidTrace trace(table.m, table.k);
        for (const auto& row : table.rows) {
            const Profile seq(row.sequence, trace.remainder(row.level - 2), row.level == 1 ? 2 : 1);
            const Profile top = lift_to_top(trace, row.level, seq);
            std::string label = top.to_string();
            if (row.level != 1) {
                label = "(" + seq.to_string() + ")→(" + top.to_string() + ")";
            }
            out << quoted(label) << ',' << to_decimal(max_representable(top)) << '\n';
        }
    }
    return exit_ok;
}

int run_lemmas(const CliConfig& cfg, std::ostream& out, std::ostream&) {
    const bool human = cfg.format != Format::Json;
    const CaseSink sink = [&](const RuleCheck& check) {
        if (human) out << check.report_line() << '\n';
    };
    constexpr std::array odd_levels{1, 3};
    constexpr std::array even_levels{2, 4};

    std::vector<SweepSummary> summaries;
    summaries.push_back(sweep_comparison_rule_A(cfg.max_m, odd_levels, sink));
    summaries.push_back(sweep_comparison_rule_B(cfg.max_m_even, even_levels, sink));
    summaries.push_back(sample_adjacent_gap(false, std::max(cfg.max_m, 20), cfg.samples, cfg.seed, sink));
    summaries.push_back(sample_adjacent_gap(true, cfg.max_m_even, cfg.samples, cfg.seed, sink));
    summaries.push_back(sweep_growth(cfg.max_m));
    summaries.push_back(sweep_transform_inversions(std::max(cfg.max_m, 20)));
    summaries.push_back(sweep_optimum_structure(cfg.max_m));
    summaries.push_back(sample_stagewise(std::max(cfg.max_m, 20), cfg.samples, cfg.seed));

    const bool all_ok = std::all_of(summaries.begin(), summaries.end(), [](const auto& s) { return s.ok(); });
    if (!human) {
        Json doc;
        doc["seed"] = cfg.seed;
        Json sweeps = Json::array();
        for (const auto& s : summaries) {
            Json entry;
            entry["name"] = s.name;
            entry["checked"] = s.checked;
            entry["violations"] = s.violations;
            entry["failures"] = s.failures;
            sweeps.push_back(std::move(entry));
        }
        doc["sweeps"] = std::move(sweeps);
        doc["ok"] = all_ok;
        out << doc.dump(2) << '\n';
    } else {
        out << "seed " << cfg.seed << '\n';
        for (const auto& s : summaries) {
            out << "sweep " << s.name << ": checked " << s.checked << ", violations " << s.violations << ' '
                << (s.ok() ? "OK" : "FAIL") << '\n';
            for (const auto& f : s.failures) out << "  " << f << '\n';
        }
    }
    return all_ok ? exit_ok : exit_disagree;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Optimal fiber-delay-line constructions for optical queues with bounded recirculation"};
    app.require_subcommand(1);
    CliConfig cfg;

    const std::map<std::string, Format> formats{
        {"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("-M,--fibers", cfg.m, "number of fibers M")->required();
        sub->add_option("-k,--recirc", cfg.k, "maximum number of recirculations k")->required();
    };
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };

    auto* design_cmd = app.add_subcommand("design", "optimal profile(s) for (M, k)");
    add_instance(design_cmd);
    add_format(design_cmd);

    auto* value_cmd = app.add_subcommand("value", "delays and representable bound of a profile");
    add_instance(value_cmd);
    add_format(value_cmd);
    value_cmd->add_option("--profile", cfg.profile, "comma-separated profile, e.g. 3,3,2,3,3,2")->required();

    auto* verify_cmd = app.add_subcommand("verify", "compare the design against exhaustive search");
    add_instance(verify_cmd);
    add_format(verify_cmd);
    verify_cmd->add_option("--brute-cap", cfg.brute_cap, "largest M searched exhaustively")->capture_default_str();
    verify_cmd->add_option("--workers", cfg.workers, "search threads")->check(CLI::Range(1, 256));

    auto* tables_cmd = app.add_subcommand("tables", "reproduce the reference tables as CSV");
    add_format(tables_cmd);

    auto* lemmas_cmd = app.add_subcommand("lemmas", "run the pairwise-comparison property sweeps");
    add_format(lemmas_cmd);
    lemmas_cmd->add_option("--max-m", cfg.max_m, "largest M for odd-level and exhaustive sweeps")
        ->check(CLI::Range(2, 22))->capture_default_str();
    lemmas_cmd->add_option("--max-m-even", cfg.max_m_even, "largest M for the even-level sweep")
        ->check(CLI::Range(2, 40))->capture_default_str();
    lemmas_cmd->add_option("--samples", cfg.samples, "random swaps per adjacent-gap sweep")
        ->check(CLI::Range(1, 1000000))->capture_default_str();
    lemmas_cmd->add_option("--seed", cfg.seed, "random seed")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (design_cmd->parsed()) {
            cfg.command = Command::Design;
            return run_design(cfg, out, err);
        }
        if (value_cmd->parsed()) {
            cfg.command = Command::Value;
            return run_value(cfg, out, err);
        }
        if (verify_cmd->parsed()) {
            cfg.command = Command::Verify;
            return run_verify(cfg, out, err);
        }
        if (tables_cmd->parsed()) {
            cfg.command = Command::Tables;
            return run_tables(cfg, out, err);
        }
        if (lemmas_cmd->parsed()) {
            cfg.command = Command::Lemmas;
            return run_lemmas(cfg, out, err);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace fdl::cli
