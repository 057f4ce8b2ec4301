// Simulated-LAN scenario model: host inventory with reply policies,
// scripted injections on a virtual clock, and expected-verdict oracles.
// Includes the line-oriented scenario/trace file codec and the canonical
// spoof-case matrix constructors.

#ifndef ARPIDS_SCENARIO_HPP
#define ARPIDS_SCENARIO_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arpids/engine.hpp"
#include "arpids/frame.hpp"
#include "arpids/tables.hpp"

namespace arpids {

enum class HostPolicy { genuine, silent_attacker, consistent_spoof_attacker };

struct SimHost {
    IpV4Addr ip;
    MacAddr mac;
    bool up = true;
    HostPolicy policy = HostPolicy::genuine;
    // Replies to requests for any IP in the map with the mapped MAC; a
    // consistent attacker answers every probe for a spoofed IP this way
    // to avoid identifying itself.
    std::map<IpV4Addr, MacAddr> spoof_map;
    // Overrides the scenario reply latency; used to pin reply orderings.
    std::optional<DurationMs> reply_latency_ms;
    // Down until this instant, then up (set by wake_host).
    std::optional<Timestamp> wakes_at;

    bool up_at(Timestamp t) const {
        return up || (wakes_at && t >= *wakes_at);
    }
};

enum class InjectDirection { in, out };

struct Injection {
    Timestamp at;
    InjectDirection direction;
    ArpFrame frame;
};

struct ExpectedVerdict {
    Timestamp by;  // verdict must be observed at or before this instant
    VerdictKind kind;
    IpV4Addr ip;
    MacAddr mac;
};

struct Scenario {
    std::vector<SimHost> hosts;  // hosts[0] is the protected host
    std::vector<Injection> injections;
    DurationMs reply_latency_ms = 5;
    std::vector<ExpectedVerdict> expected;

    const SimHost& protected_host() const { return hosts.front(); }
    const SimHost* find_host(const IpV4Addr& ip) const;
};

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidScenario : SimError {
    using SimError::SimError;
};
struct HostAlreadyUp : SimError {
    using SimError::SimError;
};
struct UnknownCase : SimError {
    using SimError::SimError;
};

// Parse failure with a 1-based line number for diagnostics.
struct ScenarioParseError : std::runtime_error {
    ScenarioParseError(int line_arg, const std::string& message);
    int line;
};

// Line-oriented scenario text:
//   HOST <ip> <mac> <up|down> <genuine|silent|spoof ip=mac[,ip=mac...]>
//   INJECT <t_ms> <IN|OUT> <REQ|REP> <eth_src> <eth_dst> <sha> <spa> <tha> <tpa>
//   EXPECT <t_ms_max> <GENUINE|SPOOFED|MALFORMED|UNICAST|GRATUITOUS|DOS> <ip> <mac>
// '#' starts a comment. The first HOST line is the protected host.
Scenario parse_scenario(const std::string& text);

// Traces are INJECT-format lines only (HOST/EXPECT rejected).
std::vector<Injection> parse_trace(const std::string& text);

// Builders for scripted frames. Injected request/reply frames default to
// standard immutable header fields; callers override eth_src to forge.
ArpFrame make_request(const MacAddr& eth_src, const MacAddr& eth_dst,
                      const MacAddr& sha, const IpV4Addr& spa,
                      const MacAddr& tha, const IpV4Addr& tpa);
ArpFrame make_reply(const MacAddr& eth_src, const MacAddr& eth_dst,
                    const MacAddr& sha, const IpV4Addr& spa,
                    const MacAddr& tha, const IpV4Addr& tpa);

// ---- Canonical spoof-case matrix ---------------------------------------

enum class AttackReplyMode { silent, consistent };
enum class AttackVector { request, reply };

struct SpoofCaseOptions {
    AttackReplyMode attacker = AttackReplyMode::consistent;
    // Reply ordering: false lands the genuine host's probe reply first,
    // true the attacker's.
    bool attacker_first = false;
    int extra_attackers = 0;  // additional consistent repliers
    AttackVector vector = AttackVector::request;
};

struct SpoofCase {
    char label;
    bool all_up;
    Scenario scenario;
    VerdictKind expected;  // verdict kind for the injected pair
    IpV4Addr pair_ip;
    MacAddr pair_mac;
    bool known_miss;  // documented false negative
    std::string description;
};

// Canonical 4-host LAN: protected p, victim v, bystander k, attacker m.
// all_up selects the 5-case regime (labels A-E); otherwise the 8-case
// regime (A-H) where the victim host is down in cases C, E and H.
// Throws UnknownCase for labels outside the regime.
SpoofCase spoof_case(char label, bool all_up,
                     const SpoofCaseOptions& options = {});

// Marks a down host as coming up at t and injects its gratuitous
// broadcast announcement at the same instant. Throws HostAlreadyUp.
Scenario wake_host(Scenario s, const IpV4Addr& host_ip, Timestamp t);

// Appends n unsolicited replies from the attacker to the protected host,
// spaced gap_ms apart, starting at start.
Scenario dos_flood(Scenario s, const IpV4Addr& attacker_ip,
                   const IpV4Addr& target, int n, DurationMs gap_ms,
                   Timestamp start);

// Fixed addresses of the canonical LAN (index 0 = protected).
IpV4Addr canonical_ip(int index);
MacAddr canonical_mac(int index);

}  // namespace arpids

#endif
