/*
   Copyright 2026 The qfsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// qfsplit: command line front end.
//
//   qfsplit check --p 3 --kind doublecover "x^3 + y^4"
//   qfsplit batch catalog.jsonl --output reports.jsonl --jobs 4
//   qfsplit witt add --p 2 "[1]" "[1]"
//
// Exit codes: 0 analysed, 1 internal failure (or a failed identity check),
// 2 input error.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qfsplit/batch.hpp"
#include "qfsplit/config.hpp"
#include "qfsplit/poly_parse.hpp"
#include "qfsplit/report.hpp"
#include "qfsplit/witt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> truncation_degree;
    std::optional<std::uint64_t> candidate_slack;
    std::optional<std::size_t> witt_length_cap;
};

qfs::Config resolve_config(const Overrides& o) {
    qfs::Config cfg;
    if (!o.config_path.empty()) cfg = qfs::load_config_file(o.config_path);
    else if (auto env = qfs::config_path_from_env()) cfg = qfs::load_config_file(*env);
    if (o.truncation_degree) cfg.truncation_degree = *o.truncation_degree;
    if (o.candidate_slack) cfg.candidate_slack = *o.candidate_slack;
    if (o.witt_length_cap) {
        if (*o.witt_length_cap == 0 || *o.witt_length_cap > qfs::kMaxWittLength)
            throw qfs::InvalidArgument("witt length cap must be between 1 and " + std::to_string(qfs::kMaxWittLength));
        cfg.witt_length_cap = *o.witt_length_cap;
    }
    return cfg;
}

std::vector<std::string> split_vars(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto a = item.find_first_not_of(' ');
        const auto b = item.find_last_not_of(' ');
        if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
    unsigned p = 0;
    std::string kind = "hypersurface";
    std::string vars;
    std::string poly;
    bool json = false;
    bool explain = false;
    bool timing = false;
    bool cross_check = false;
    int max_height = 2;
};

int run_check(const CheckArgs& a, const Overrides& o) {
    qfs::CatalogEntry e;
    e.name = "check";
    e.p = a.p;
    e.kind = qfs::kind_from_string(a.kind);
    e.poly = a.poly;
    e.variables = split_vars(a.vars);
    qfs::AnalysisOptions opt;
    opt.explain = a.explain;
    opt.timing = a.timing;
    opt.cross_check = a.cross_check;
    opt.max_height = a.max_height;
    opt.config = resolve_config(o);
    if (!qfs::is_prime(a.p) || a.p >= qfs::kMaxPrime) throw qfs::InvalidArgument("--p must be a prime below 65536");

    const qfs::Report r = qfs::analyze_or_throw(e, opt);
    if (a.json) {
        std::cout << qfs::to_json(r).dump(2) << '\n';
        return kExitOk;
    }
    std::cout << r.summary << '\n';
    if (!r.flags.empty()) {
        std::cout << "flags:";
        for (const auto& f : r.flags) std::cout << ' ' << f;
        std::cout << '\n';
    }
    if (r.intermediates) std::cout << "intermediates: " << r.intermediates->dump(2) << '\n';
    if (r.cross_check) std::cout << "cross-check: " << r.cross_check->dump(2) << '\n';
    if (r.timing_ms) std::cout << "time: " << *r.timing_ms << " ms\n";
    return kExitOk;
}

// --- batch -----------------------------------------------------------------

struct BatchArgs {
    std::string catalog;
    std::string output;
    unsigned jobs = 1;
    bool explain = false;
    bool timing = false;
    bool cross_check = false;
};

int run_batch_command(const BatchArgs& a, const Overrides& o) {
    std::ifstream in(a.catalog);
    if (!in) throw qfs::InvalidArgument("cannot read catalog " + a.catalog);
    const auto entries = qfs::read_catalog(in);
    qfs::AnalysisOptions opt;
    opt.explain = a.explain;
    opt.timing = a.timing;
    opt.cross_check = a.cross_check;
    opt.config = resolve_config(o);
    const auto reports = qfs::run_batch(entries, opt, a.jobs);
    std::ofstream out(a.output, std::ios::binary | std::ios::trunc);
    if (!out) throw qfs::InvalidArgument("cannot write " + a.output);
    qfs::write_reports(out, reports);
    std::cout << qfs::to_string(qfs::summarize(reports)) << '\n';
    return kExitOk;
}

// --- witt ------------------------------------------------------------------

struct WittArgs {
    std::string op;
    unsigned p = 0;
    std::size_t n = 0;
    std::string vars;
    std::vector<std::string> operands;
};

bool explicit_vector(const std::string& t) {
    return t.size() >= 2 && t.front() == '(' && t.back() == ')' && t.find(';') != std::string::npos;
}

std::string operand_text(const std::string& raw) {
    std::string t = trim(raw);
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') return t.substr(1, t.size() - 2);
    if (explicit_vector(t)) {
        std::string inner = t.substr(1, t.size() - 2);
        for (auto& c : inner)
            if (c == ';') c = ' ';
        return inner;
    }
    return t;
}

qfs::WittVector parse_operand(const std::string& raw, const qfs::RingPtr& ring, std::size_t n) {
    const std::string t = trim(raw);
    if (explicit_vector(t)) {
        std::vector<qfs::Poly> comps;
        std::stringstream ss(t.substr(1, t.size() - 2));
        std::string part;
        while (std::getline(ss, part, ';')) comps.push_back(qfs::parse_poly(part, ring));
        if (comps.size() != n)
            throw qfs::LengthMismatch("operand " + t + " has length " + std::to_string(comps.size()) + ", expected " +
                                      std::to_string(n));
        return qfs::WittVector(std::move(comps));
    }
    return qfs::teichmuller(qfs::parse_poly(operand_text(t), ring), n);
}

int run_witt(const WittArgs& a, const Overrides& o) {
    const qfs::Config cfg = resolve_config(o);
    std::size_t arity = (a.op == "add" || a.op == "mul") ? 2 : 1;
    if (a.operands.size() != arity)
        throw qfs::InvalidArgument("witt " + a.op + " takes " + std::to_string(arity) + " operand(s)");

    std::vector<std::string> vars = split_vars(a.vars);
    if (vars.empty()) {
        std::string all;
        for (const auto& op : a.operands) all += operand_text(op) + " ";
        vars = qfs::collect_variables(all);
    }
    const auto ring = qfs::make_ring(a.p, vars);

    std::size_t n = a.n;
    if (n == 0) {
        n = 2;
        for (const auto& op : a.operands) {
            const std::string t = trim(op);
            if (explicit_vector(t)) n = static_cast<std::size_t>(std::count(t.begin(), t.end(), ';')) + 1;
        }
    }
    if (n > cfg.witt_length_cap)
        throw qfs::InvalidArgument("Witt length " + std::to_string(n) + " exceeds the cap " +
                                   std::to_string(cfg.witt_length_cap));

    if (a.op == "delta") {
        std::cout << qfs::to_string(qfs::delta_carry(qfs::parse_poly(operand_text(a.operands[0]), ring))) << '\n';
        return kExitOk;
    }
    if (a.op == "teich") {
        std::cout << qfs::to_string(qfs::teichmuller(qfs::parse_poly(operand_text(a.operands[0]), ring), n)) << '\n';
        return kExitOk;
    }
    if (a.op == "identity") {
        const qfs::Poly f = qfs::parse_poly(operand_text(a.operands[0]), ring);
        const auto lhs = qfs::teichmuller(f, 2);
        std::map<std::string, qfs::WittVector> args;
        for (std::size_t i = 0; i < ring->nvars(); ++i)
            args.emplace(ring->variable(i), qfs::teichmuller(qfs::Poly::variable(ring, i), 2));
        auto rhs = qfs::verschiebung(qfs::teichmuller(qfs::delta_carry(f), 1));
        if (!args.empty()) rhs = qfs::evaluate(f, args) + rhs;
        else rhs = qfs::teichmuller(f, 2) + rhs;  // constants: f([x]) is [f] itself
        const bool pass = lhs == rhs;
        std::cout << (pass ? "PASS" : "FAIL") << '\n'
                  << "[f]               = " << qfs::to_string(lhs) << '\n'
                  << "f([x]) + V(delta) = " << qfs::to_string(rhs) << '\n';
        return pass ? kExitOk : kExitFailure;
    }
    const auto u = parse_operand(a.operands[0], ring, n);
    const auto v = parse_operand(a.operands[1], ring, n);
    std::cout << qfs::to_string(a.op == "add" ? u + v : u * v) << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qfsplit: F-splitting and quasi-F-splitting of hypersurface singularities"};
    app.set_version_flag("--version", qfs::tool_version());
    app.require_subcommand(1);

    Overrides overrides;
    app.add_option("--config", overrides.config_path, "key=value config file (default: $QFSPLIT_CONFIG)");
    auto add_overrides = [&](CLI::App* sub) {
        sub->add_option("--truncation-degree", overrides.truncation_degree, "graded search truncation (0 = 4p^2)");
        sub->add_option("--candidate-slack", overrides.candidate_slack, "Frobenius image window slack (0 = p)");
        sub->add_option("--witt-length-cap", overrides.witt_length_cap, "largest Witt length accepted");
    };

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "analyse one polynomial");
    check_cmd->add_option("--p", check.p, "characteristic")->required();
    check_cmd->add_option("--kind", check.kind, "hypersurface | doublecover")
        ->check(CLI::IsMember({"hypersurface", "doublecover"}));
    check_cmd->add_option("--vars", check.vars, "comma separated variable order");
    check_cmd->add_flag("--json", check.json, "print the JSON report");
    check_cmd->add_flag("--explain", check.explain, "include intermediate results");
    check_cmd->add_flag("--timing", check.timing, "include wall time");
    check_cmd->add_flag("--cross-check", check.cross_check, "run the independent checks as well");
    check_cmd->add_option("--max-height", check.max_height, "1 or 2")->check(CLI::IsMember({1, 2}));
    check_cmd->add_option("poly", check.poly, "f, or g for a double cover z^2 + g")->required();
    add_overrides(check_cmd);

    BatchArgs batch;
    auto* batch_cmd = app.add_subcommand("batch", "analyse a JSON Lines catalog");
    batch_cmd->add_option("catalog", batch.catalog, "input catalog")->required();
    batch_cmd->add_option("--output,-o", batch.output, "output JSON Lines file")->required();
    batch_cmd->add_option("--jobs,-j", batch.jobs, "worker threads")->check(CLI::PositiveNumber);
    batch_cmd->add_flag("--explain", batch.explain, "include intermediate results");
    batch_cmd->add_flag("--timing", batch.timing, "include wall time (reports are then not reproducible)");
    batch_cmd->add_flag("--cross-check", batch.cross_check, "run the independent checks as well");
    add_overrides(batch_cmd);

    WittArgs witt;
    auto* witt_cmd = app.add_subcommand("witt", "Witt vector arithmetic");
    witt_cmd->add_option("op", witt.op, "add | mul | teich | delta | identity")
        ->required()
        ->check(CLI::IsMember({"add", "mul", "teich", "delta", "identity"}));
    witt_cmd->add_option("--p", witt.p, "characteristic")->required();
    witt_cmd->add_option("--n", witt.n, "length (default: from explicit operands, else 2)");
    witt_cmd->add_option("--vars", witt.vars, "comma separated variable order");
    witt_cmd->add_option("operands", witt.operands, "[f] Teichmuller lift, (a0; a1; ...) explicit, or bare f");
    add_overrides(witt_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*check_cmd) return run_check(check, overrides);
        if (*batch_cmd) return run_batch_command(batch, overrides);
        if (*witt_cmd) return run_witt(witt, overrides);
    } catch (const qfs::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const qfs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitInput;
}
