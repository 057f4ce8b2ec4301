#include "arpids/simulator.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace arpids {

bool SimReport::all_expectations_met() const {
    return std::all_of(expect_results.begin(), expect_results.end(),
                       [](const ExpectResult& r) { return r.satisfied; });
}

namespace {

// A frame hitting the wire. Scripted injections sort before auto replies
// at the same instant; auto replies sort by the emitting host's IP.
struct Emission {
    Timestamp at;
    int klass = 0;  // 0 scripted, 1 auto reply / probe
    std::uint64_t order_key = 0;
    std::uint64_t seq = 0;
    ArpFrame frame;
    bool from_protected = false;  // scripted OUT injection
    bool probe_origin = false;    // emitted by the engine itself
    bool sender_known = false;
    IpV4Addr sender_ip;
    bool elicited_by_probe = false;  // reply drawn by an engine probe
};

struct EmissionAfter {
    bool operator()(const Emission& a, const Emission& b) const {
        if (a.at != b.at) return a.at > b.at;
        if (a.klass != b.klass) return a.klass > b.klass;
        if (a.order_key != b.order_key) return a.order_key > b.order_key;
        return a.seq > b.seq;
    }
};

std::uint64_t ip_key(const IpV4Addr& ip) {
    return static_cast<std::uint64_t>(ip.octets[0]) << 24 |
           static_cast<std::uint64_t>(ip.octets[1]) << 16 |
           static_cast<std::uint64_t>(ip.octets[2]) << 8 | ip.octets[3];
}

DurationMs host_latency(const SimHost& host, const Scenario& scenario) {
    return host.reply_latency_ms.value_or(scenario.reply_latency_ms);
}

void validate(const Scenario& scenario, const EngineConfig& cfg) {
    if (scenario.hosts.empty())
        throw InvalidScenario("scenario has no hosts");
    for (std::size_t i = 1; i < scenario.injections.size(); ++i) {
        if (scenario.injections[i].at < scenario.injections[i - 1].at)
            throw InvalidScenario("injections out of time order");
    }
    // The scenario-wide latency must respect the round-trip assumption.
    // Per-host overrides may exceed it: that is how a violated assumption
    // is reproduced on purpose. A zero-width probe window is a deliberate
    // degenerate configuration that no latency can satisfy.
    if (cfg.t_req_ms > 0 && scenario.reply_latency_ms >= cfg.t_req_ms)
        throw InvalidScenario("reply latency must be below t_req");
}

// The reply a host would send on receiving a request, if any. Spoof-map
// hits answer with the mapped MAC; genuine hosts (and attackers asked for
// their own unspoofed IP) answer with their true binding.
std::optional<ArpFrame> auto_reply(const SimHost& host, const ArpFrame& request,
                                   Timestamp when) {
    if (!host.up_at(when) || !request.is_request()) return std::nullopt;
    if (host.policy == HostPolicy::silent_attacker) return std::nullopt;

    MacAddr reply_mac;
    if (host.policy == HostPolicy::consistent_spoof_attacker) {
        auto it = host.spoof_map.find(request.tpa);
        if (it != host.spoof_map.end()) {
            reply_mac = it->second;
        } else if (request.tpa == host.ip) {
            reply_mac = host.mac;
        } else {
            return std::nullopt;
        }
    } else {
        if (request.tpa != host.ip) return std::nullopt;
        reply_mac = host.mac;
    }
    return make_reply(reply_mac, request.sha, reply_mac, request.tpa,
                      request.sha, request.spa);
}

class Simulation {
public:
    Simulation(const Scenario& scenario, const EngineConfig& cfg, ScanMode mode)
        : scenario_(scenario),
          engine_(
              cfg,
              [this](const ArpFrame& probe, Timestamp at) {
                  pending_probes_.push_back({probe, at});
              },
              mode) {}

    SimReport run() {
        std::uint64_t inject_index = 0;
        for (const Injection& inj : scenario_.injections) {
            Emission e;
            e.at = inj.at;
            e.klass = 0;
            e.order_key = inject_index++;
            e.seq = seq_++;
            e.frame = inj.frame;
            e.from_protected = inj.direction == InjectDirection::out;
            // Inbound injections come from the host owning the source MAC
            // when one exists; otherwise from outside the inventory and
            // every host hears the broadcast.
            if (e.from_protected) {
                e.sender_known = true;
                e.sender_ip = scenario_.protected_host().ip;
            } else {
                for (const SimHost& h : scenario_.hosts) {
                    if (h.mac == inj.frame.eth_src) {
                        e.sender_known = true;
                        e.sender_ip = h.ip;
                        break;
                    }
                }
            }
            queue_.push(e);
        }

        while (true) {
            const bool have_emission = !queue_.empty();
            const auto check_at = engine_.next_check_at();
            if (!have_emission && !check_at) break;
            // Frames deliver ahead of checks due at the same instant, so
            // a reply on the window edge is inside the closed window.
            if (check_at && (!have_emission || *check_at < queue_.top().at)) {
                collect(engine_.dispatch(Deferred{engine_.pop_next_check()}));
                flush_probes();
                continue;
            }
            Emission e = queue_.top();
            queue_.pop();
            process(e);
        }
        finish();
        return std::move(report_);
    }

private:
    void process(const Emission& emission) {
        ++report_.frames_total;
        if (emission.elicited_by_probe) ++report_.probe_replies;

        const SimHost& protected_host = scenario_.protected_host();
        if (emission.from_protected) {
            collect(engine_.dispatch(FrameOut{emission.frame, emission.at}));
        } else if (!emission.probe_origin &&
                   (emission.frame.eth_dst.is_broadcast() ||
                    emission.frame.eth_dst == protected_host.mac)) {
            collect(engine_.dispatch(FrameIn{emission.frame, emission.at}));
        }
        flush_probes();
        fan_out(emission);
    }

    // Deliver a wire frame to the non-protected hosts and schedule the
    // replies it draws. The protected host's own ARP stack is out of
    // scope: its traffic is scripted through OUT injections only.
    void fan_out(const Emission& emission) {
        for (const SimHost& host : scenario_.hosts) {
            if (&host == &scenario_.protected_host()) continue;
            if (emission.sender_known && host.ip == emission.sender_ip) continue;
            const bool receives = emission.frame.eth_dst.is_broadcast() ||
                                  emission.frame.eth_dst == host.mac;
            if (!receives || !host.up_at(emission.at)) continue;
            auto reply = auto_reply(host, emission.frame, emission.at);
            if (!reply) continue;
            Emission r;
            r.at = emission.at + host_latency(host, scenario_);
            r.klass = 1;
            r.order_key = ip_key(host.ip);
            r.seq = seq_++;
            r.frame = *reply;
            r.sender_known = true;
            r.sender_ip = host.ip;
            r.elicited_by_probe = emission.probe_origin;
            queue_.push(r);
        }
    }

    // Probes recorded by the transport during dispatch enter the wire
    // once dispatch has returned.
    void flush_probes() {
        for (const auto& [frame, at] : pending_probes_) {
            Emission e;
            e.at = at;
            e.klass = 1;
            e.order_key = ip_key(scenario_.protected_host().ip);
            e.seq = seq_++;
            e.frame = frame;
            e.probe_origin = true;
            e.sender_known = true;
            e.sender_ip = scenario_.protected_host().ip;
            queue_.push(e);
        }
        pending_probes_.clear();
    }

    void collect(std::vector<Verdict> verdicts) {
        report_.verdicts.insert(report_.verdicts.end(), verdicts.begin(),
                                verdicts.end());
    }

    void finish() {
        report_.probes_sent = engine_.probes_sent();
        report_.frames_engine = report_.probes_sent + report_.probe_replies;
        report_.table_snapshot = engine_.tables().snapshot();
        report_.auth_bindings = engine_.tables().auth_bindings.live();
        for (const ExpectedVerdict& e : scenario_.expected) {
            const bool hit = std::any_of(
                report_.verdicts.begin(), report_.verdicts.end(),
                [&](const Verdict& v) {
                    return v.kind == e.kind && v.ip == e.ip && v.mac == e.mac &&
                           v.at <= e.by;
                });
            report_.expect_results.push_back({e, hit});
        }
    }

    const Scenario& scenario_;
    Engine engine_;
    std::priority_queue<Emission, std::vector<Emission>, EmissionAfter> queue_;
    std::vector<std::pair<ArpFrame, Timestamp>> pending_probes_;
    std::uint64_t seq_ = 0;
    SimReport report_;
};

}  // namespace

SimReport run_scenario(const Scenario& scenario, const EngineConfig& cfg,
                       ScanMode mode) {
    cfg.validate();
    validate(scenario, cfg);
    Simulation sim(scenario, cfg, mode);
    return sim.run();
}

SimReport run_trace(const std::vector<Injection>& injections,
                    const EngineConfig& cfg, ScanMode mode) {
    cfg.validate();
    SimReport report;
    std::vector<std::pair<ArpFrame, Timestamp>> probes;
    Engine engine(
        cfg,
        [&probes](const ArpFrame& frame, Timestamp at) {
            probes.emplace_back(frame, at);
        },
        mode);
    auto collect = [&report](std::vector<Verdict> verdicts) {
        report.verdicts.insert(report.verdicts.end(), verdicts.begin(),
                               verdicts.end());
    };
    for (const Injection& inj : injections) {
        while (auto due = engine.next_check_at()) {
            if (*due >= inj.at) break;
            collect(engine.dispatch(Deferred{engine.pop_next_check()}));
        }
        if (inj.direction == InjectDirection::in) {
            collect(engine.dispatch(FrameIn{inj.frame, inj.at}));
        } else {
            collect(engine.dispatch(FrameOut{inj.frame, inj.at}));
        }
        report.frames_total += 1;
    }
    while (engine.next_check_at()) {
        collect(engine.dispatch(Deferred{engine.pop_next_check()}));
    }
    report.frames_total += probes.size();
    report.probes_sent = engine.probes_sent();
    report.frames_engine = report.probes_sent;
    report.table_snapshot = engine.tables().snapshot();
    report.auth_bindings = engine.tables().auth_bindings.live();
    return report;
}

std::string format_verdict_lines(const std::vector<Verdict>& verdicts) {
    std::ostringstream out;
    for (const Verdict& v : verdicts) {
        out << "VERDICT " << v.at.ms << ' ' << to_string(v.kind) << ' '
            << v.ip.to_string() << ' ' << v.mac.to_string() << ' '
            << to_string(v.trigger) << '\n';
    }
    return out.str();
}

}  // namespace arpids
