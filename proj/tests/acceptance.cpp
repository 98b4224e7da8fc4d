// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include "fdl/cli.hpp"
#include "fdl/construction.hpp"
#include "fdl/lemmas.hpp"
#include "fdl/optimizer.hpp"
#include "fdl/tables.hpp"

#include "worked_examples.hpp"

#include <array>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using Clock = std::chrono::steady_clock;
using fdl::SweepSummary;

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
    void require(const SweepSummary& s);
};

void Outcome::require(const SweepSummary& s) {
    std::ostringstream line;
    line << s.name << " checked " << s.checked << " violations " << s.violations;
    if (!s.ok()) {
        fail(line.str() + (s.failures.empty() ? "" : ": " + s.failures.front()));
    } else if (ok) {
        detail += (detail.empty() ? "" : "; ") + line.str();
    }
}

std::vector<std::vector<int>> top_down(const std::vector<fdl::Profile>& levels) {
    std::vector<std::vector<int>> out;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) out.push_back(it->parts());
    return out;
}

Outcome worked_examples() {
    Outcome o;
    int chains = 0;
    for (const auto& w : fdl::testing::worked_designs()) {
        const auto d = fdl::design(w.m, w.k);
        const std::string tag = "(" + std::to_string(w.m) + "," + std::to_string(w.k) + ")";
        if (d.trace.remainders() != w.remainders || d.trace.quotients() != w.quotients) o.fail(tag + " euclid trace");
        if (top_down(d.levels_n) != w.chain_n) o.fail(tag + " n chain");
        ++chains;
        if (w.chain_m.empty() != d.levels_m.empty()) o.fail(tag + " m chain presence");
        if (!w.chain_m.empty()) {
            if (top_down(d.levels_m) != w.chain_m) o.fail(tag + " m chain");
            ++chains;
        }
    }
    if (o.ok) o.detail = std::to_string(chains) + " chains over 6 examples";
    return o;
}

Outcome tables() {
    Outcome o;
    int rows = 0;
    for (const auto& table : fdl::reference_tables()) {
        const fdl::EuclidTrace trace(table.m, table.k);
        for (const auto& row : table.rows) {
            ++rows;
            const fdl::Profile seq(row.sequence, trace.remainder(row.level - 2), row.level == 1 ? 2 : 1);
            const fdl::Profile top = fdl::lift_to_top(trace, row.level, seq);
            const std::string got = fdl::to_decimal(fdl::max_representable(top));
            if (top.parts() != row.lifted) o.fail("table " + std::to_string(table.number) + " lift of " + seq.to_string());
            if (got != row.reported_B) {
                o.fail("table " + std::to_string(table.number) + " " + top.to_string() + ": " + got + " vs " +
                       row.reported_B);
            }
        }
    }
    if (o.ok) o.detail = std::to_string(rows) + " rows bit-exact";
    return o;
}

Outcome optimality() {
    Outcome o;
    o.require(fdl::sweep_optimality(14));
    return o;
}

Outcome oracle_pinning() {
    Outcome o;
    o.require(fdl::sweep_oracle_agreement(12, 4));
    return o;
}

Outcome lemma_suites() {
    Outcome o;
    const std::array<int, 1> level_one{1};
    const std::array<int, 1> level_two{2};
    o.require(fdl::sweep_comparison_rule_A(14, level_one));
    o.require(fdl::sweep_comparison_rule_B(30, level_two));
    o.require(fdl::sample_adjacent_gap(false, 20, 1000, fdl::default_seed));
    o.require(fdl::sample_adjacent_gap(true, 30, 1000, fdl::default_seed));
    o.require(fdl::sweep_growth(14));
    o.require(fdl::sweep_transform_inversions(20));
    o.require(fdl::sweep_optimum_structure(14));
    return o;
}

Outcome gcd_two() {
    Outcome o;
    o.require(fdl::sweep_gcd_two_equality(40));
    return o;
}

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = fdl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Outcome cli_contract() {
    Outcome o;
    const auto v16 = cli({"verify", "--fibers", "16", "--recirc", "6"});
    if (v16.code != 0 || v16.out.find("AGREE") == std::string::npos ||
        v16.out.find("optimal profiles (2)") == std::string::npos) {
        o.fail("verify 16 6");
    }
    const auto v11 = cli({"verify", "--fibers", "11", "--recirc", "3"});
    if (v11.code != 0 || v11.out.find("AGREE") == std::string::npos ||
        v11.out.find("optimal profiles (1)") == std::string::npos) {
        o.fail("verify 11 3");
    }
    // M=24 exceeds the default cap of 22, so the stock invocation is a usage error;
    // raising the cap runs the search and reports both candidates.
    const auto v24 = cli({"verify", "--fibers", "24", "--recirc", "9"});
    if (v24.code != 2) o.fail("verify 24 9 under the default cap exited " + std::to_string(v24.code));
    const auto v24raised = cli({"verify", "--fibers", "24", "--recirc", "9", "--brute-cap", "24"});
    if (v24raised.code != 0 || v24raised.out.find("all candidates optimal: yes") == std::string::npos) {
        o.fail("verify 24 9 --brute-cap 24");
    }

    const auto json = cli({"design", "--fibers", "26", "--recirc", "10", "--format", "json"});
    try {
        const auto doc = nlohmann::ordered_json::parse(json.out);
        for (const auto& c : doc.at("candidates")) {
            if (!c.at("B").is_string() || c.at("B") != "1141023") o.fail("json B field");
            for (const auto& d : c.at("delays")) {
                if (!d.is_string()) o.fail("json delay field");
            }
        }
        if (doc.dump(2) + "\n" != json.out) o.fail("json round trip");
    } catch (const std::exception& e) {
        o.fail(std::string("json parse: ") + e.what());
    }

    for (const std::string bad : {"3,3,2,5,1", "3,3,x,5,1,2", "1,4,2,5,2,2", "3,3,2,5,1,3", "", "-3,3,2,5,1,8",
                                  "99999999999999999999,1,1,1,1,1"}) {
        const auto r = cli({"value", "--fibers", "16", "--recirc", "6", "--profile", bad});
        if (r.code != 2) o.fail("malformed profile '" + bad + "' exited " + std::to_string(r.code));
    }
    if (o.ok) o.detail = "verify 16/6=0, 11/3=0, 24/9=2 (cap 24: 0, both optimal); json decimal strings; malformed=2";
    return o;
}

struct Criterion {
    int number;
    std::string name;
    double limit_s;  // 0 means no limit
    std::function<Outcome()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "worked-example reproduction", 1.0, worked_examples},
        {2, "table reproduction", 1.0, tables},
        {3, "exhaustive optimality M<=14", 30.0, optimality},
        {4, "oracle definition pinning M<=12 k<=4", 60.0, oracle_pinning},
        {5, "lemma property suites", 120.0, lemma_suites},
        {6, "gcd=2 equality M<=40", 10.0, gcd_two},
        {7, "cli contract", 0.0, cli_contract},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            std::ostringstream why;
            why << "runtime " << std::fixed << std::setprecision(2) << secs << " s over limit " << c.limit_s << " s";
            o.fail(why.str());
        }
        all = all && o.ok;
        std::cout << "criterion " << c.number << ": " << (o.ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
                  << std::fixed << std::setprecision(2) << secs << " s]  " << o.detail << '\n';
    }
    return all ? 0 : 1;
}
