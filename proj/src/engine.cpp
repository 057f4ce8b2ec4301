#include "arpids/engine.hpp"

namespace arpids {

const char* to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::genuine: return "GENUINE";
        case VerdictKind::spoofed: return "SPOOFED";
        case VerdictKind::malformed: return "MALFORMED";
        case VerdictKind::unicast: return "UNICAST";
        case VerdictKind::gratuitous: return "GRATUITOUS";
        case VerdictKind::dos: return "DOS";
    }
    return "?";
}

const char* to_string(VerdictTrigger trigger) {
    switch (trigger) {
        case VerdictTrigger::request: return "REQUEST";
        case VerdictTrigger::response: return "RESPONSE";
        case VerdictTrigger::probe_analysis: return "PROBE";
        case VerdictTrigger::unsolicited_flood: return "FLOOD";
    }
    return "?";
}

Engine::Engine(EngineConfig cfg, ProbeTransport transport, ScanMode mode)
    : cfg_(cfg), transport_(std::move(transport)), mode_(mode) {
    cfg_.validate();
}

std::optional<Timestamp> Engine::next_check_at() const {
    if (pending_checks_.empty()) return std::nullopt;
    return pending_checks_.front().issued_at + cfg_.t_req_ms;
}

ProbeCheck Engine::pop_next_check() {
    ProbeCheck check = pending_checks_.front();
    pending_checks_.pop_front();
    return check;
}

std::vector<Verdict> Engine::dispatch(const EngineEvent& event) {
    const Timestamp at = std::visit(
        [&](const auto& ev) -> Timestamp {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, Deferred>)
                return ev.check.issued_at + cfg_.t_req_ms;
            else
                return ev.at;
        },
        event);
    if (saw_event_ && at < last_event_t_)
        throw OutOfOrderEvent("event timestamp regressed");
    last_event_t_ = at;
    saw_event_ = true;

    tables_.evict_expired(at, cfg_);

    std::vector<Verdict> out;
    std::visit(
        [&](const auto& ev) {
            using T = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<T, FrameIn>) {
                if (ev.frame.is_request()) {
                    handle_request(ev.frame, ev.at, out);
                } else if (ev.frame.is_reply()) {
                    handle_response(ev.frame, ev.at, out);
                } else {
                    // Undispatchable opcode: quarantined as malformed.
                    push_verdict(out, VerdictKind::malformed, ev.frame.spa,
                                 ev.frame.sha, ev.at, VerdictTrigger::request);
                }
            } else if constexpr (std::is_same_v<T, FrameOut>) {
                if (ev.frame.is_request()) on_outgoing_request(ev.frame, ev.at);
            } else {
                spoof_detector(ev.check, at, out);
            }
        },
        event);
    return out;
}

// Request handler: malformed -> unicast -> gratuitous (verify) ->
// authenticated-bindings match -> verify, in that order.
void Engine::handle_request(const ArpFrame& frame, Timestamp t,
                            std::vector<Verdict>& out) {
    if (is_malformed(frame)) {
        push_verdict(out, VerdictKind::malformed, frame.spa, frame.sha, t,
                     VerdictTrigger::request);
        return;
    }
    if (is_unicast_request(frame)) {
        push_verdict(out, VerdictKind::unicast, frame.spa, frame.sha, t,
                     VerdictTrigger::request);
        return;
    }
    if (is_gratuitous(frame)) {
        push_verdict(out, VerdictKind::gratuitous, frame.spa, frame.sha, t,
                     VerdictTrigger::request);
        verify_ip_mac(frame.spa, frame.sha, t, VerdictTrigger::request, out);
        return;
    }
    if (auto bound = tables_.auth_bindings.lookup(frame.spa)) {
        push_verdict(out,
                     *bound == frame.sha ? VerdictKind::genuine
                                         : VerdictKind::spoofed,
                     frame.spa, frame.sha, t, VerdictTrigger::request);
        return;
    }
    verify_ip_mac(frame.spa, frame.sha, t, VerdictTrigger::request, out);
}

// Response handler: malformed -> unconditional response-received insert ->
// gratuitous (verify) -> probe-reply short-circuit -> solicited check ->
// authenticated-bindings match or verify -> unsolicited handler.
void Engine::handle_response(const ArpFrame& frame, Timestamp t,
                             std::vector<Verdict>& out) {
    if (is_malformed(frame)) {
        push_verdict(out, VerdictKind::malformed, frame.spa, frame.sha, t,
                     VerdictTrigger::response);
        return;
    }
    tables_.response_received.record(frame.spa, frame.sha, t);

    if (is_gratuitous(frame)) {
        push_verdict(out, VerdictKind::gratuitous, frame.spa, frame.sha, t,
                     VerdictTrigger::response);
        verify_ip_mac(frame.spa, frame.sha, t, VerdictTrigger::response, out);
        return;
    }
    // A reply to one of our probes: the insert above already made it
    // visible to the pending check, nothing further to do.
    if (frame.tpa == cfg_.hids_ip && frame.tha == cfg_.hids_mac &&
        tables_.verification.lookup(frame.spa)) {
        return;
    }
    if (tables_.request_sent.contains(frame.spa)) {
        if (auto bound = tables_.auth_bindings.lookup(frame.spa)) {
            push_verdict(out,
                         *bound == frame.sha ? VerdictKind::genuine
                                             : VerdictKind::spoofed,
                         frame.spa, frame.sha, t, VerdictTrigger::response);
        } else {
            verify_ip_mac(frame.spa, frame.sha, t, VerdictTrigger::response,
                          out);
        }
        return;
    }
    handle_unsolicited(frame, t, out);
}

// Probe-or-conflict: a pending verification for the same pair absorbs the
// packet; a pending verification with a different MAC is an immediate
// spoof; otherwise probe and schedule the check.
void Engine::verify_ip_mac(const IpV4Addr& ips, const MacAddr& macs,
                           Timestamp t, VerdictTrigger trigger,
                           std::vector<Verdict>& out) {
    if (auto pending = tables_.verification.lookup(ips)) {
        if (*pending != macs)
            push_verdict(out, VerdictKind::spoofed, ips, macs, t, trigger);
        return;
    }
    emit_probe(ips, t);
    tables_.verification.insert(ips, macs);
    pending_checks_.push_back({ips, macs, t});
}

void Engine::spoof_detector(const ProbeCheck& check, Timestamp fired_at,
                            std::vector<Verdict>& out) {
    const Timestamp since =
        mode_ == ScanMode::window ? check.issued_at : Timestamp{0};
    bool conflict = false;
    for (const ResponseEntry& e :
         tables_.response_received.responses_for(check.ip, since)) {
        if (e.macs != check.mac) {
            conflict = true;
            break;
        }
    }
    tables_.verification.remove(check.ip);
    if (conflict) {
        push_verdict(out, VerdictKind::spoofed, check.ip, check.mac, fired_at,
                     VerdictTrigger::probe_analysis);
        return;
    }
    // All window replies agreed with the pair under test. An existing
    // conflicting binding still wins: bindings are unique per IP.
    if (tables_.auth_bindings.insert(check.ip, check.mac)) {
        push_verdict(out, VerdictKind::genuine, check.ip, check.mac, fired_at,
                     VerdictTrigger::probe_analysis);
    } else {
        push_verdict(out, VerdictKind::spoofed, check.ip, check.mac, fired_at,
                     VerdictTrigger::probe_analysis);
    }
}

void Engine::handle_unsolicited(const ArpFrame& frame, Timestamp t,
                                std::vector<Verdict>& out) {
    UnsolicitedState& s = tables_.unsolicited;
    if (s.counter > 0 && t - s.last_t < cfg_.delta_ms) {
        ++s.counter;
        s.last_t = t;
        if (s.counter > cfg_.dos_th) {
            push_verdict(out, VerdictKind::dos, frame.spa, frame.sha, t,
                         VerdictTrigger::unsolicited_flood);
        }
    } else {
        s.counter = 1;
        s.last_t = t;
    }
}

void Engine::on_outgoing_request(const ArpFrame& frame, Timestamp t) {
    // Applies to every request the host sends, gratuitous announcements
    // included. Engine probes do not pass through here: probe replies are
    // matched via the verification table, not the request-sent table.
    tables_.request_sent.record(frame.tpa, t);
}

void Engine::emit_probe(const IpV4Addr& target, Timestamp t) {
    ArpFrame probe;
    probe.eth_dst = MacAddr::broadcast();
    probe.eth_src = cfg_.hids_mac;
    probe.opcode = kOpcodeRequest;
    probe.sha = cfg_.hids_mac;
    probe.spa = cfg_.hids_ip;
    probe.tha = MacAddr::zero();
    probe.tpa = target;
    ++probes_sent_;
    if (transport_) transport_(probe, t);
}

void Engine::push_verdict(std::vector<Verdict>& out, VerdictKind kind,
                          const IpV4Addr& ip, const MacAddr& mac, Timestamp at,
                          VerdictTrigger trigger) {
    Verdict v{kind, ip, mac, at, trigger};
    if (kind == VerdictKind::spoofed) spoofed_log_.push_back(v);
    out.push_back(v);
}

}  // namespace arpids
