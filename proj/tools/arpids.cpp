// Command-line front end: run scenario files against the detection
// engine, run the built-in spoof-case matrix, replay raw traces, or
// reproduce the worked example with its golden tables.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "arpids/example.hpp"
#include "arpids/simulator.hpp"

namespace {

using namespace arpids;

enum class OutputFormat { human, lines };

struct CommonOptions {
    EngineConfig cfg;
    ScanMode mode = ScanMode::window;
    OutputFormat format = OutputFormat::human;
};

constexpr int kExitOk = 0;
constexpr int kExitExpectFailed = 1;
constexpr int kExitParseError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_snapshot_human(const std::string& snapshot, std::ostream& out) {
    std::vector<std::string> rqt, rst, vrft, autht;
    std::istringstream in(snapshot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("RQT ", 0) == 0) rqt.push_back(line.substr(4));
        else if (line.rfind("RST ", 0) == 0) rst.push_back(line.substr(4));
        else if (line.rfind("VRFT ", 0) == 0) vrft.push_back(line.substr(5));
        else if (line.rfind("AUTHT ", 0) == 0) autht.push_back(line.substr(6));
    }
    auto table = [&](const char* title, const char* header,
                     const std::vector<std::string>& rows) {
        out << title << '\n' << "  " << header << '\n';
        if (rows.empty()) out << "  (none)\n";
        for (const std::string& r : rows) {
            auto space = r.find(' ');
            if (space == std::string::npos) {
                out << "  " << r << '\n';
            } else {
                char buf[64];
                std::snprintf(buf, sizeof(buf), "  %-16s %s",
                              r.substr(0, space).c_str(),
                              r.substr(space + 1).c_str());
                out << buf << '\n';
            }
        }
        out << '\n';
    };
    table("Request-sent table", "dst-ip", rqt);
    table("Response-received table", "src-ip           src-mac", rst);
    table("Verification table", "ip               mac", vrft);
    table("Authenticated bindings table", "ip               mac", autht);
}

void print_report(const SimReport& report, const CommonOptions& opts,
                  std::ostream& out) {
    if (opts.format == OutputFormat::lines) {
        out << format_verdict_lines(report.verdicts);
        std::istringstream snap(report.table_snapshot);
        std::string line;
        while (std::getline(snap, line)) out << "SNAPSHOT " << line << '\n';
        out << "COUNT FRAMES_TOTAL " << report.frames_total << '\n';
        out << "COUNT FRAMES_ENGINE " << report.frames_engine << '\n';
        out << "COUNT PROBES_SENT " << report.probes_sent << '\n';
        out << "COUNT PROBE_REPLIES " << report.probe_replies << '\n';
        for (const ExpectResult& r : report.expect_results) {
            out << "EXPECT_RESULT " << (r.satisfied ? "PASS" : "FAIL") << ' '
                << r.expected.by.ms << ' ' << to_string(r.expected.kind) << ' '
                << r.expected.ip.to_string() << ' '
                << r.expected.mac.to_string() << '\n';
        }
        return;
    }
    out << "Verdicts:\n";
    if (report.verdicts.empty()) out << "  (none)\n";
    for (const Verdict& v : report.verdicts) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  t=%-8lld %-10s %-15s %s  [%s]",
                      static_cast<long long>(v.at.ms), to_string(v.kind),
                      v.ip.to_string().c_str(), v.mac.to_string().c_str(),
                      to_string(v.trigger));
        out << buf << '\n';
    }
    out << "\nTraffic: total=" << report.frames_total
        << " engine=" << report.frames_engine
        << " (probes=" << report.probes_sent
        << ", probe-replies=" << report.probe_replies << ")\n\n";
    print_snapshot_human(report.table_snapshot, out);
    if (!report.expect_results.empty()) {
        std::size_t met = 0;
        for (const ExpectResult& r : report.expect_results) {
            if (r.satisfied) ++met;
            else
                out << "UNMET expectation: " << to_string(r.expected.kind)
                    << ' ' << r.expected.ip.to_string() << ' '
                    << r.expected.mac.to_string() << " by "
                    << r.expected.by.ms << "ms\n";
        }
        out << "Expectations met: " << met << '/'
            << report.expect_results.size() << '\n';
    }
}

int cmd_simulate(const std::string& path, CommonOptions opts) {
    Scenario scenario;
    try {
        scenario = parse_scenario(read_file(path));
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitParseError;
    }
    // The first HOST line is the protected host and fixes the engine
    // identity.
    opts.cfg.hids_ip = scenario.protected_host().ip;
    opts.cfg.hids_mac = scenario.protected_host().mac;
    SimReport report = run_scenario(scenario, opts.cfg, opts.mode);
    print_report(report, opts, std::cout);
    return report.all_expectations_met() ? kExitOk : kExitExpectFailed;
}

int cmd_replay(const std::string& path, const CommonOptions& opts) {
    std::vector<Injection> injections;
    try {
        injections = parse_trace(read_file(path));
    } catch (const std::exception& e) {
        std::cerr << path << ": " << e.what() << '\n';
        return kExitParseError;
    }
    SimReport report = run_trace(injections, opts.cfg, opts.mode);
    std::cout << format_verdict_lines(report.verdicts);
    return kExitOk;
}

int cmd_example(const CommonOptions& opts) {
    Scenario scenario = example_scenario();
    EngineConfig cfg = opts.cfg;
    cfg.hids_ip = scenario.protected_host().ip;
    cfg.hids_mac = scenario.protected_host().mac;
    SimReport report = run_scenario(scenario, cfg, opts.mode);
    const std::string golden = example_golden_snapshot();
    const bool match = report.table_snapshot == golden;
    if (opts.format == OutputFormat::lines) {
        std::istringstream snap(report.table_snapshot);
        std::string line;
        while (std::getline(snap, line)) std::cout << "SNAPSHOT " << line << '\n';
        std::cout << "GOLDEN " << (match ? "MATCH" : "MISMATCH") << '\n';
    } else {
        print_snapshot_human(report.table_snapshot, std::cout);
        std::cout << "Golden tables: " << (match ? "match" : "MISMATCH") << '\n';
    }
    return match ? kExitOk : kExitExpectFailed;
}

struct MatrixRow {
    std::string name;
    VerdictKind expected;
    std::string observed;
    bool pass;
    bool known_miss;
};

std::string observed_classification(const SimReport& report,
                                    const IpV4Addr& ip, const MacAddr& mac) {
    const Verdict* last = nullptr;
    for (const Verdict& v : report.verdicts) {
        if (v.ip == ip && v.mac == mac &&
            (v.kind == VerdictKind::genuine || v.kind == VerdictKind::spoofed))
            last = &v;
    }
    return last ? to_string(last->kind) : "none";
}

MatrixRow run_matrix_case(const SpoofCase& tc, const std::string& name,
                          const EngineConfig& base_cfg, ScanMode mode) {
    EngineConfig cfg = base_cfg;
    cfg.hids_ip = tc.scenario.protected_host().ip;
    cfg.hids_mac = tc.scenario.protected_host().mac;
    SimReport report = run_scenario(tc.scenario, cfg, mode);
    MatrixRow row;
    row.name = name;
    row.expected = tc.expected;
    row.observed = observed_classification(report, tc.pair_ip, tc.pair_mac);
    row.pass = report.all_expectations_met();
    row.known_miss = tc.known_miss;
    return row;
}

int cmd_matrix(const CommonOptions& opts) {
    std::vector<MatrixRow> rows;
    struct Variant {
        const char* name;
        SpoofCaseOptions options;
    };
    const Variant variants[] = {
        {"silent req", {AttackReplyMode::silent, false, 0, AttackVector::request}},
        {"silent rep", {AttackReplyMode::silent, false, 0, AttackVector::reply}},
        {"consistent v-first req",
         {AttackReplyMode::consistent, false, 0, AttackVector::request}},
        {"consistent v-first rep",
         {AttackReplyMode::consistent, false, 0, AttackVector::reply}},
        {"consistent m-first req",
         {AttackReplyMode::consistent, true, 0, AttackVector::request}},
        {"consistent m-first rep",
         {AttackReplyMode::consistent, true, 0, AttackVector::reply}},
    };

    for (bool all_up : {true, false}) {
        const char* regime = all_up ? "ALL-UP" : "HOSTS-DOWN";
        const std::string labels = all_up ? "ABCDE" : "ABCDEFGH";
        for (char label : labels) {
            for (const Variant& variant : variants) {
                SpoofCase tc = spoof_case(label, all_up, variant.options);
                rows.push_back(run_matrix_case(
                    tc,
                    std::string(regime) + ' ' + label + " " + variant.name +
                        " (" + tc.description + ")",
                    opts.cfg, opts.mode));
            }
        }
    }

    // Multiple attackers all echoing the spoofed MAC (detectable cases).
    for (char label : {'C', 'E'}) {
        for (int extra : {1, 2}) {
            SpoofCaseOptions options;
            options.extra_attackers = extra;
            SpoofCase tc = spoof_case(label, true, options);
            rows.push_back(run_matrix_case(
                tc,
                std::string("MULTI-ATTACKER ") + label + " x" + std::to_string(1 + extra) +
                    " attackers (" + tc.description + ")",
                opts.cfg, opts.mode));
        }
    }

    // Victim-down spoof authenticated, then the victim comes up and its
    // own announcement is flagged while the falsified binding stays.
    {
        SpoofCase tc = spoof_case('H', false);
        Scenario wake = wake_host(tc.scenario, tc.pair_ip, Timestamp{5000});
        wake.expected.push_back({Timestamp{10000}, VerdictKind::spoofed,
                                 tc.pair_ip, canonical_mac(1)});
        EngineConfig cfg = opts.cfg;
        cfg.hids_ip = wake.protected_host().ip;
        cfg.hids_mac = wake.protected_host().mac;
        SimReport report = run_scenario(wake, cfg, opts.mode);
        bool retained = false;
        for (const IpMacPair& b : report.auth_bindings) {
            if (b.ip == tc.pair_ip && b.mac == tc.pair_mac) retained = true;
        }
        MatrixRow row;
        row.name = "HOSTS-DOWN H + wake (recovered victim flagged, binding retained)";
        row.expected = VerdictKind::spoofed;
        row.observed =
            observed_classification(report, tc.pair_ip, canonical_mac(1));
        row.pass = report.all_expectations_met() && retained;
        row.known_miss = false;
        rows.push_back(row);
    }

    bool all_pass = true;
    for (const MatrixRow& row : rows) {
        all_pass = all_pass && row.pass;
        if (opts.format == OutputFormat::lines) {
            std::cout << "CASE " << row.name << " expected="
                      << to_string(row.expected) << " observed=" << row.observed
                      << " result=" << (row.pass ? "PASS" : "FAIL")
                      << (row.known_miss ? " known-miss" : "") << '\n';
        } else {
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%-72s expected=%-10s observed=%-10s %s%s",
                          row.name.c_str(), to_string(row.expected),
                          row.observed.c_str(), row.pass ? "PASS" : "FAIL",
                          row.known_miss ? "  [known miss]" : "");
            std::cout << buf << '\n';
        }
    }
    std::cout << (all_pass ? "matrix: all cases pass\n"
                           : "matrix: FAILURES present\n");
    return all_pass ? kExitOk : kExitExpectFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Host-based active intrusion detection for ARP attacks"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string hids_ip = "10.0.0.1";
    std::string hids_mac = "02:00:00:00:00:0a";
    std::string mode_name = "window";
    std::string format_name = "human";
    std::string scenario_path;
    std::string trace_path;

    app.add_option("--t-req-ms", opts.cfg.t_req_ms,
                   "probe round-trip bound, ms");
    app.add_option("--t-resp-ms", opts.cfg.t_resp_ms,
                   "response-received entry lifetime, ms");
    app.add_option("--delta-ms", opts.cfg.delta_ms, "DoS time window, ms");
    app.add_option("--dos-th", opts.cfg.dos_th, "DoS threshold");
    app.add_option("--hids-ip", hids_ip,
                   "engine identity IP (replay; simulate uses the first HOST)");
    app.add_option("--hids-mac", hids_mac, "engine identity MAC (replay)");
    app.add_option("--mode", mode_name, "response scan mode")
        ->check(CLI::IsMember({"window", "whole-table"}));
    app.add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"human", "lines"}));

    auto* simulate = app.add_subcommand(
        "simulate", "run a scenario file; exit 0 iff every EXPECT holds");
    simulate->fallthrough();
    simulate->add_option("scenario", scenario_path, "scenario file")->required();
    auto* matrix = app.add_subcommand(
        "matrix", "run the built-in spoof-case matrix in both regimes");
    matrix->fallthrough();
    auto* replay = app.add_subcommand(
        "replay",
        "replay a raw trace headlessly; probes draw no replies, so spoof "
        "verdicts arise only from pending-verification conflicts and "
        "authenticated-binding mismatches");
    replay->fallthrough();
    replay->add_option("trace", trace_path, "trace file of INJECT lines")
        ->required();
    auto* example = app.add_subcommand(
        "example", "run the built-in worked example against its golden tables");
    example->fallthrough();

    CLI11_PARSE(app, argc, argv);

    auto ip = arpids::IpV4Addr::parse(hids_ip);
    auto mac = arpids::MacAddr::parse(hids_mac);
    if (!ip || !mac) {
        std::cerr << "bad --hids-ip/--hids-mac\n";
        return kExitParseError;
    }
    opts.cfg.hids_ip = *ip;
    opts.cfg.hids_mac = *mac;
    opts.mode = mode_name == "window" ? ScanMode::window : ScanMode::whole_table;
    opts.format = format_name == "human" ? OutputFormat::human : OutputFormat::lines;
    try {
        opts.cfg.validate();
    } catch (const std::exception& e) {
        std::cerr << "bad config: " << e.what() << '\n';
        return kExitParseError;
    }

    try {
        if (simulate->parsed()) return cmd_simulate(scenario_path, opts);
        if (matrix->parsed()) return cmd_matrix(opts);
        if (replay->parsed()) return cmd_replay(trace_path, opts);
        if (example->parsed()) return cmd_example(opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParseError;
    }
    return kExitOk;
}
