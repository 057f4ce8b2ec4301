#include "arpids/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace arpids {

const SimHost* Scenario::find_host(const IpV4Addr& ip) const {
    for (const SimHost& h : hosts) {
        if (h.ip == ip) return &h;
    }
    return nullptr;
}

ScenarioParseError::ScenarioParseError(int line_arg, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_arg) + ": " + message),
      line(line_arg) {}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) {
        if (field[0] == '#') break;
        fields.push_back(field);
    }
    return fields;
}

IpV4Addr parse_ip_field(const std::string& s, int line) {
    auto ip = IpV4Addr::parse(s);
    if (!ip) throw ScenarioParseError(line, "bad IPv4 address '" + s + "'");
    return *ip;
}

MacAddr parse_mac_field(const std::string& s, int line) {
    auto mac = MacAddr::parse(s);
    if (!mac) throw ScenarioParseError(line, "bad MAC address '" + s + "'");
    return *mac;
}

Timestamp parse_time_field(const std::string& s, int line) {
    std::int64_t ms = 0;
    auto [next, ec] = std::from_chars(s.data(), s.data() + s.size(), ms);
    if (ec != std::errc{} || next != s.data() + s.size() || ms < 0)
        throw ScenarioParseError(line, "bad timestamp '" + s + "'");
    return Timestamp{ms};
}

std::optional<VerdictKind> parse_kind(const std::string& s) {
    if (s == "GENUINE") return VerdictKind::genuine;
    if (s == "SPOOFED") return VerdictKind::spoofed;
    if (s == "MALFORMED") return VerdictKind::malformed;
    if (s == "UNICAST") return VerdictKind::unicast;
    if (s == "GRATUITOUS") return VerdictKind::gratuitous;
    if (s == "DOS") return VerdictKind::dos;
    return std::nullopt;
}

SimHost parse_host_line(const std::vector<std::string>& fields, int line) {
    if (fields.size() < 5 || fields.size() > 6)
        throw ScenarioParseError(line, "HOST needs ip, mac, up|down, policy");
    SimHost host;
    host.ip = parse_ip_field(fields[1], line);
    host.mac = parse_mac_field(fields[2], line);
    if (fields[3] == "up") {
        host.up = true;
    } else if (fields[3] == "down") {
        host.up = false;
    } else {
        throw ScenarioParseError(line, "expected up|down, got '" + fields[3] + "'");
    }
    if (fields[4] == "genuine" || fields[4] == "silent") {
        if (fields.size() != 5)
            throw ScenarioParseError(line, "unexpected field after policy");
        host.policy = fields[4] == "genuine" ? HostPolicy::genuine
                                             : HostPolicy::silent_attacker;
    } else if (fields[4] == "spoof") {
        host.policy = HostPolicy::consistent_spoof_attacker;
        if (fields.size() < 6)
            throw ScenarioParseError(line, "spoof policy needs ip=mac map");
        std::istringstream map_in(fields[5]);
        std::string pair;
        while (std::getline(map_in, pair, ',')) {
            auto eq = pair.find('=');
            if (eq == std::string::npos)
                throw ScenarioParseError(line, "bad spoof entry '" + pair + "'");
            IpV4Addr ip = parse_ip_field(pair.substr(0, eq), line);
            MacAddr mac = parse_mac_field(pair.substr(eq + 1), line);
            host.spoof_map[ip] = mac;
        }
        if (host.spoof_map.empty())
            throw ScenarioParseError(line, "empty spoof map");
    } else {
        throw ScenarioParseError(line, "unknown policy '" + fields[4] + "'");
    }
    return host;
}

Injection parse_inject_line(const std::vector<std::string>& fields, int line) {
    if (fields.size() != 10)
        throw ScenarioParseError(
            line, "INJECT needs t, IN|OUT, REQ|REP and six addresses");
    Injection inj;
    inj.at = parse_time_field(fields[1], line);
    if (fields[2] == "IN") {
        inj.direction = InjectDirection::in;
    } else if (fields[2] == "OUT") {
        inj.direction = InjectDirection::out;
    } else {
        throw ScenarioParseError(line, "expected IN|OUT, got '" + fields[2] + "'");
    }
    if (fields[3] == "REQ") {
        inj.frame.opcode = kOpcodeRequest;
    } else if (fields[3] == "REP") {
        inj.frame.opcode = kOpcodeReply;
    } else {
        throw ScenarioParseError(line, "expected REQ|REP, got '" + fields[3] + "'");
    }
    inj.frame.eth_src = parse_mac_field(fields[4], line);
    inj.frame.eth_dst = parse_mac_field(fields[5], line);
    inj.frame.sha = parse_mac_field(fields[6], line);
    inj.frame.spa = parse_ip_field(fields[7], line);
    inj.frame.tha = parse_mac_field(fields[8], line);
    inj.frame.tpa = parse_ip_field(fields[9], line);
    return inj;
}

ExpectedVerdict parse_expect_line(const std::vector<std::string>& fields,
                                  int line) {
    if (fields.size() != 5)
        throw ScenarioParseError(line, "EXPECT needs t_max, kind, ip, mac");
    ExpectedVerdict e;
    e.by = parse_time_field(fields[1], line);
    auto kind = parse_kind(fields[2]);
    if (!kind)
        throw ScenarioParseError(line, "unknown verdict kind '" + fields[2] + "'");
    e.kind = *kind;
    e.ip = parse_ip_field(fields[3], line);
    e.mac = parse_mac_field(fields[4], line);
    return e;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario scenario;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields[0] == "HOST") {
            scenario.hosts.push_back(parse_host_line(fields, line_no));
        } else if (fields[0] == "INJECT") {
            scenario.injections.push_back(parse_inject_line(fields, line_no));
        } else if (fields[0] == "EXPECT") {
            scenario.expected.push_back(parse_expect_line(fields, line_no));
        } else {
            throw ScenarioParseError(line_no, "unknown record '" + fields[0] + "'");
        }
    }
    if (scenario.hosts.empty())
        throw ScenarioParseError(line_no, "scenario has no HOST lines");
    return scenario;
}

std::vector<Injection> parse_trace(const std::string& text) {
    std::vector<Injection> injections;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields[0] != "INJECT")
            throw ScenarioParseError(line_no,
                                     "traces allow only INJECT records");
        injections.push_back(parse_inject_line(fields, line_no));
    }
    return injections;
}

ArpFrame make_request(const MacAddr& eth_src, const MacAddr& eth_dst,
                      const MacAddr& sha, const IpV4Addr& spa,
                      const MacAddr& tha, const IpV4Addr& tpa) {
    ArpFrame f;
    f.eth_src = eth_src;
    f.eth_dst = eth_dst;
    f.opcode = kOpcodeRequest;
    f.sha = sha;
    f.spa = spa;
    f.tha = tha;
    f.tpa = tpa;
    return f;
}

ArpFrame make_reply(const MacAddr& eth_src, const MacAddr& eth_dst,
                    const MacAddr& sha, const IpV4Addr& spa,
                    const MacAddr& tha, const IpV4Addr& tpa) {
    ArpFrame f = make_request(eth_src, eth_dst, sha, spa, tha, tpa);
    f.opcode = kOpcodeReply;
    return f;
}

}  // namespace arpids
