#include "arpids/example.hpp"

namespace arpids {

Scenario example_scenario() {
    Scenario s;
    const IpV4Addr ip_a = canonical_ip(0);
    const IpV4Addr ip_b = canonical_ip(1);
    const IpV4Addr ip_c = canonical_ip(2);
    const MacAddr mac_a = canonical_mac(0);
    const MacAddr mac_b = canonical_mac(1);
    const MacAddr mac_c = canonical_mac(2);
    const MacAddr mac_d = canonical_mac(3);

    SimHost a;
    a.ip = ip_a;
    a.mac = mac_a;
    SimHost b;
    b.ip = ip_b;
    b.mac = mac_b;
    SimHost c;
    c.ip = ip_c;
    c.mac = mac_c;
    SimHost d;
    d.ip = canonical_ip(3);
    d.mac = mac_d;
    d.policy = HostPolicy::consistent_spoof_attacker;
    d.spoof_map[ip_c] = mac_d;
    d.reply_latency_ms = 3;  // the attacker beats C to the probe
    s.hosts = {a, b, c, d};

    // B announces its own binding with a gratuitous reply to A.
    Injection genuine;
    genuine.at = Timestamp{10};
    genuine.direction = InjectDirection::in;
    genuine.frame = make_reply(mac_b, mac_a, mac_b, ip_b, mac_a, ip_b);
    s.injections.push_back(genuine);

    // D claims C's IP with its own MAC, again as a gratuitous reply.
    Injection spoofed;
    spoofed.at = Timestamp{200};
    spoofed.direction = InjectDirection::in;
    spoofed.frame = make_reply(mac_d, mac_a, mac_d, ip_c, mac_a, ip_c);
    s.injections.push_back(spoofed);

    s.expected.push_back({Timestamp{1000}, VerdictKind::genuine, ip_b, mac_b});
    s.expected.push_back({Timestamp{1000}, VerdictKind::spoofed, ip_c, mac_d});
    return s;
}

std::string example_golden_snapshot() {
    const std::string b = canonical_ip(1).to_string();
    const std::string c = canonical_ip(2).to_string();
    const std::string mac_b = canonical_mac(1).to_string();
    const std::string mac_c = canonical_mac(2).to_string();
    const std::string mac_d = canonical_mac(3).to_string();
    std::string out;
    out += "RST " + b + ' ' + mac_b + '\n';
    out += "RST " + b + ' ' + mac_b + '\n';
    out += "RST " + c + ' ' + mac_d + '\n';
    out += "RST " + c + ' ' + mac_d + '\n';
    out += "RST " + c + ' ' + mac_c + '\n';
    out += "VRFT " + b + ' ' + mac_b + '\n';
    out += "VRFT " + c + ' ' + mac_d + '\n';
    out += "AUTHT " + b + ' ' + mac_b + '\n';
    return out;
}

}  // namespace arpids
