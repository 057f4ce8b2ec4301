// Deterministic discrete-event LAN simulation driving one detection
// engine on the protected host. Ideal broadcast medium: broadcast frames
// reach every up host except the sender, unicast frames reach only the
// addressed MAC; no loss, delivery is instantaneous, reply generation
// takes each host's reply latency.

#ifndef ARPIDS_SIMULATOR_HPP
#define ARPIDS_SIMULATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "arpids/engine.hpp"
#include "arpids/scenario.hpp"

namespace arpids {

struct ExpectResult {
    ExpectedVerdict expected;
    bool satisfied;
};

struct SimReport {
    std::vector<Verdict> verdicts;
    std::uint64_t frames_total = 0;   // every ARP frame on the wire
    std::uint64_t frames_engine = 0;  // probes plus the replies they drew
    std::uint64_t probes_sent = 0;
    std::uint64_t probe_replies = 0;
    std::string table_snapshot;
    std::vector<IpMacPair> auth_bindings;  // live bindings at end of run
    std::vector<ExpectResult> expect_results;

    bool all_expectations_met() const;
};

// Runs the scenario to quiescence (no wire frames or probe checks left).
// Deterministic: identical scenarios and configs produce identical
// reports. Ties at one instant deliver scripted injections first (in
// list order), then auto replies (ascending host IP), then due checks.
// Throws InvalidScenario on ordering or latency violations.
SimReport run_scenario(const Scenario& scenario, const EngineConfig& cfg,
                       ScanMode mode = ScanMode::window);

// Headless replay: every frame is delivered straight to the engine,
// probes are emitted but draw no replies, checks fire on schedule.
SimReport run_trace(const std::vector<Injection>& injections,
                    const EngineConfig& cfg, ScanMode mode = ScanMode::window);

// One line per verdict: VERDICT <t_ms> <KIND> <ip> <mac> <TRIGGER>.
std::string format_verdict_lines(const std::vector<Verdict>& verdicts);

}  // namespace arpids

#endif
