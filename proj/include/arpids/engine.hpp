// Event-driven ARP intrusion detection engine.
//
// The engine is a deterministic state machine over the four data tables.
// It consumes a totally ordered stream of events:
//
//   FrameIn   - an ARP frame received by the protected host
//   FrameOut  - an ARP frame the protected host itself sends
//   Deferred  - a scheduled probe check, due exactly t_req after the
//               probe it belongs to was emitted
//
// Receiving a frame that needs verification makes the engine emit a
// broadcast probe through the injected transport and schedule a probe
// check. The check is not run inline: it is queued, exposed through
// next_check_at()/pop_next_check(), and the driver feeds it back as a
// Deferred event once the virtual clock reaches its due time. Probe
// replies arriving in between land in the response-received table and
// are what the check inspects. Drivers deliver frames before checks due
// at the same instant, so a reply landing exactly at the window edge
// still counts.
//
// The engine never blocks, never reads wall-clock time and never mutates
// traffic; verdicts are returned from dispatch(). Concurrent dispatch is
// forbidden by contract; the transport callback must not re-enter
// dispatch synchronously.

#ifndef ARPIDS_ENGINE_HPP
#define ARPIDS_ENGINE_HPP

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "arpids/frame.hpp"
#include "arpids/tables.hpp"

namespace arpids {

enum class VerdictKind { genuine, spoofed, malformed, unicast, gratuitous, dos };
enum class VerdictTrigger { request, response, probe_analysis, unsolicited_flood };

const char* to_string(VerdictKind kind);
const char* to_string(VerdictTrigger trigger);

struct Verdict {
    VerdictKind kind;
    IpV4Addr ip;
    MacAddr mac;
    Timestamp at;
    VerdictTrigger trigger;

    bool operator==(const Verdict&) const = default;
};

struct ProbeCheck {
    IpV4Addr ip;
    MacAddr mac;
    Timestamp issued_at;
};

struct FrameIn {
    ArpFrame frame;
    Timestamp at;
};

struct FrameOut {
    ArpFrame frame;
    Timestamp at;
};

struct Deferred {
    ProbeCheck check;
};

using EngineEvent = std::variant<FrameIn, FrameOut, Deferred>;

struct OutOfOrderEvent : std::logic_error {
    using std::logic_error::logic_error;
};

// Single capability: put a probe frame on the wire at the given instant.
using ProbeTransport = std::function<void(const ArpFrame&, Timestamp)>;

class Engine {
public:
    Engine(EngineConfig cfg, ProbeTransport transport,
           ScanMode mode = ScanMode::window);

    // Routes the event to the matching handler after lazy eviction.
    // Throws OutOfOrderEvent if the event's timestamp regresses.
    std::vector<Verdict> dispatch(const EngineEvent& event);

    // Scheduled probe checks, earliest first. The driver re-delivers
    // them as Deferred events when the clock reaches the due time.
    std::optional<Timestamp> next_check_at() const;
    ProbeCheck pop_next_check();

    const StateTables& tables() const { return tables_; }
    StateTables& tables() { return tables_; }
    const EngineConfig& config() const { return cfg_; }

    // Every Spoofed verdict ever raised, in order.
    const std::vector<Verdict>& spoofed_log() const { return spoofed_log_; }
    std::uint64_t probes_sent() const { return probes_sent_; }

private:
    void handle_request(const ArpFrame& frame, Timestamp t,
                        std::vector<Verdict>& out);
    void handle_response(const ArpFrame& frame, Timestamp t,
                         std::vector<Verdict>& out);
    void verify_ip_mac(const IpV4Addr& ips, const MacAddr& macs, Timestamp t,
                       VerdictTrigger trigger, std::vector<Verdict>& out);
    void spoof_detector(const ProbeCheck& check, Timestamp fired_at,
                        std::vector<Verdict>& out);
    void handle_unsolicited(const ArpFrame& frame, Timestamp t,
                            std::vector<Verdict>& out);
    void on_outgoing_request(const ArpFrame& frame, Timestamp t);

    void emit_probe(const IpV4Addr& target, Timestamp t);
    void push_verdict(std::vector<Verdict>& out, VerdictKind kind,
                      const IpV4Addr& ip, const MacAddr& mac, Timestamp at,
                      VerdictTrigger trigger);

    EngineConfig cfg_;
    ProbeTransport transport_;
    ScanMode mode_;
    StateTables tables_;
    std::deque<ProbeCheck> pending_checks_;
    std::vector<Verdict> spoofed_log_;
    std::uint64_t probes_sent_ = 0;
    Timestamp last_event_t_;
    bool saw_event_ = false;
};

}  // namespace arpids

#endif
