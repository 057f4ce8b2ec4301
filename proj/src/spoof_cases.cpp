// Canonical spoof-case scenarios: every IP-MAC combination a malicious
// host can put on the wire against a 4-host LAN, each with the verdict
// the detector must produce, including the two documented false-negative
// classes (attacker-is-victim, victim host down).

#include <algorithm>

#include "arpids/scenario.hpp"

namespace arpids {

namespace {

constexpr Timestamp kAttackAt{100};
constexpr Timestamp kExpectBy{10000};

// p, v, k, m and up to two extra attackers.
constexpr int kProtected = 0;
constexpr int kVictim = 1;
constexpr int kBystander = 2;
constexpr int kAttacker = 3;

struct CaseSpec {
    int ip_of;
    int mac_of;
    bool victim_down;
    VerdictKind expected;
    bool known_miss;
    const char* description;
};

CaseSpec case_spec(char label, bool all_up) {
    if (all_up) {
        switch (label) {
            case 'A':
                return {kAttacker, kAttacker, false, VerdictKind::genuine,
                        false, "IP(m)-MAC(m), true pair of the attacker"};
            case 'B':
                return {kVictim, kVictim, false, VerdictKind::genuine, false,
                        "IP(v)-MAC(v), true pair of the victim"};
            case 'C':
                return {kVictim, kAttacker, false, VerdictKind::spoofed, false,
                        "IP(v)-MAC(m), spoof with attacker MAC"};
            case 'D':
                return {kAttacker, kVictim, false, VerdictKind::genuine, true,
                        "IP(m)-MAC(v), attacker is the victim"};
            case 'E':
                return {kVictim, kBystander, false, VerdictKind::spoofed,
                        false, "IP(v)-MAC(k), spoof with bystander MAC"};
            default:
                throw UnknownCase(std::string("no all-up case '") + label + "'");
        }
    }
    switch (label) {
        case 'A':
            return {kAttacker, kAttacker, false, VerdictKind::genuine, false,
                    "IP(m)-MAC(m), true pair of the attacker"};
        case 'B':
            return {kVictim, kVictim, false, VerdictKind::genuine, false,
                    "IP(v)-MAC(v), victim up"};
        case 'C':
            return {kVictim, kVictim, true, VerdictKind::genuine, false,
                    "IP(v)-MAC(v), victim down"};
        case 'D':
            return {kVictim, kAttacker, false, VerdictKind::spoofed, false,
                    "IP(v)-MAC(m), victim up"};
        case 'E':
            return {kVictim, kAttacker, true, VerdictKind::genuine, true,
                    "IP(v)-MAC(m), victim down"};
        case 'F':
            return {kAttacker, kVictim, false, VerdictKind::genuine, true,
                    "IP(m)-MAC(v), attacker is the victim"};
        case 'G':
            return {kVictim, kBystander, false, VerdictKind::spoofed, false,
                    "IP(v)-MAC(k), victim up"};
        case 'H':
            return {kVictim, kBystander, true, VerdictKind::genuine, true,
                    "IP(v)-MAC(k), victim down"};
        default:
            throw UnknownCase(std::string("no host-down case '") + label + "'");
    }
}

}  // namespace

IpV4Addr canonical_ip(int index) {
    return IpV4Addr{{10, 0, 0, static_cast<std::uint8_t>(index + 1)}};
}

MacAddr canonical_mac(int index) {
    return MacAddr{{0x02, 0, 0, 0, 0, static_cast<std::uint8_t>(0x0a + index)}};
}

SpoofCase spoof_case(char label, bool all_up, const SpoofCaseOptions& options) {
    const CaseSpec spec = case_spec(label, all_up);

    Scenario s;
    // Every replying host carries an explicit latency, so the scenario
    // stays runnable when t_req is deliberately configured below the
    // overridden latencies to demonstrate the violated assumption.
    s.reply_latency_ms = 1;
    for (int i = 0; i < 4 + options.extra_attackers; ++i) {
        SimHost host;
        host.ip = canonical_ip(i);
        host.mac = canonical_mac(i);
        host.policy = (i >= kAttacker) ? (options.attacker == AttackReplyMode::silent
                                              ? HostPolicy::silent_attacker
                                              : HostPolicy::consistent_spoof_attacker)
                                       : HostPolicy::genuine;
        s.hosts.push_back(host);
    }
    if (spec.victim_down) s.hosts[kVictim].up = false;

    const IpV4Addr pair_ip = canonical_ip(spec.ip_of);
    const MacAddr pair_mac = canonical_mac(spec.mac_of);

    // A consistent attacker answers every probe for the spoofed IP with
    // the MAC it used in the attack; so do any accomplices.
    for (std::size_t i = kAttacker; i < s.hosts.size(); ++i) {
        if (s.hosts[i].policy == HostPolicy::consistent_spoof_attacker)
            s.hosts[i].spoof_map[pair_ip] = pair_mac;
    }

    // Reply order is pinned with per-host latencies; every latency stays
    // below the default probe window.
    s.hosts[kVictim].reply_latency_ms = options.attacker_first ? 9 : 3;
    for (std::size_t i = kAttacker; i < s.hosts.size(); ++i) {
        s.hosts[i].reply_latency_ms =
            (options.attacker_first ? 3 : 9) + static_cast<DurationMs>(i - kAttacker);
    }

    const MacAddr protected_mac = canonical_mac(kProtected);
    const IpV4Addr protected_ip = canonical_ip(kProtected);
    Injection attack;
    attack.at = kAttackAt;
    attack.direction = InjectDirection::in;
    attack.frame =
        options.vector == AttackVector::request
            ? make_request(pair_mac, MacAddr::broadcast(), pair_mac, pair_ip,
                           MacAddr::zero(), protected_ip)
            // Gratuitous reply so the falsified pair is verified rather
            // than dismissed as unsolicited.
            : make_reply(pair_mac, protected_mac, pair_mac, pair_ip,
                         protected_mac, pair_ip);
    s.injections.push_back(attack);

    s.expected.push_back({kExpectBy, spec.expected, pair_ip, pair_mac});

    SpoofCase out;
    out.label = label;
    out.all_up = all_up;
    out.scenario = std::move(s);
    out.expected = spec.expected;
    out.pair_ip = pair_ip;
    out.pair_mac = pair_mac;
    out.known_miss = spec.known_miss;
    out.description = spec.description;
    return out;
}

Scenario wake_host(Scenario s, const IpV4Addr& host_ip, Timestamp t) {
    auto it = std::find_if(s.hosts.begin(), s.hosts.end(),
                           [&](const SimHost& h) { return h.ip == host_ip; });
    if (it == s.hosts.end())
        throw InvalidScenario("wake_host: no host with IP " + host_ip.to_string());
    if (it->up_at(t))
        throw HostAlreadyUp("host " + host_ip.to_string() + " is already up");
    it->wakes_at = t;

    Injection announce;
    announce.at = t;
    announce.direction = InjectDirection::in;
    announce.frame = make_request(it->mac, MacAddr::broadcast(), it->mac,
                                  it->ip, MacAddr::zero(), it->ip);
    auto pos = std::upper_bound(
        s.injections.begin(), s.injections.end(), announce,
        [](const Injection& a, const Injection& b) { return a.at < b.at; });
    s.injections.insert(pos, announce);
    return s;
}

Scenario dos_flood(Scenario s, const IpV4Addr& attacker_ip,
                   const IpV4Addr& target, int n, DurationMs gap_ms,
                   Timestamp start) {
    const SimHost* attacker = s.find_host(attacker_ip);
    if (!attacker)
        throw InvalidScenario("dos_flood: no host with IP " +
                              attacker_ip.to_string());
    const SimHost& victim = s.protected_host();
    for (int i = 0; i < n; ++i) {
        Injection inj;
        inj.at = start + static_cast<DurationMs>(i) * gap_ms;
        inj.direction = InjectDirection::in;
        inj.frame = make_reply(attacker->mac, victim.mac, attacker->mac,
                               target, victim.mac, victim.ip);
        auto pos = std::upper_bound(
            s.injections.begin(), s.injections.end(), inj,
            [](const Injection& a, const Injection& b) { return a.at < b.at; });
        s.injections.insert(pos, inj);
    }
    return s;
}

}  // namespace arpids
