#include "arpids/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arpids {

void EngineConfig::validate() const {
    if (t_req_ms < 0) throw std::invalid_argument("t_req must be >= 0 ms");
    if (t_resp_ms < t_req_ms)
        throw std::invalid_argument("t_resp must be >= t_req");
    if (delta_ms <= 0) throw std::invalid_argument("delta must be > 0 ms");
    if (dos_th < 1) throw std::invalid_argument("dos threshold must be >= 1");
}

void RequestSentTable::record(const IpV4Addr& ipd, Timestamp t) {
    live_.push_back({ipd, t});
    journal_.push_back(ipd);
}

void RequestSentTable::evict_expired(Timestamp now, DurationMs t_req_ms) {
    std::erase_if(live_, [&](const RequestSentEntry& e) {
        return now - e.t >= t_req_ms;
    });
}

bool RequestSentTable::contains(const IpV4Addr& ipd) const {
    return std::any_of(live_.begin(), live_.end(),
                       [&](const RequestSentEntry& e) { return e.ipd == ipd; });
}

void ResponseReceivedTable::record(const IpV4Addr& ips, const MacAddr& macs,
                                   Timestamp t) {
    live_.push_back({ips, macs, t});
    journal_.push_back({ips, macs});
}

void ResponseReceivedTable::evict_expired(Timestamp now, DurationMs t_resp_ms) {
    std::erase_if(live_, [&](const ResponseEntry& e) {
        return now - e.t >= t_resp_ms;
    });
}

std::vector<ResponseEntry> ResponseReceivedTable::responses_for(
    const IpV4Addr& ip, Timestamp since) const {
    std::vector<ResponseEntry> out;
    for (const ResponseEntry& e : live_) {
        if (e.ips == ip && e.t >= since) out.push_back(e);
    }
    return out;
}

bool VerificationTable::insert(const IpV4Addr& ips, const MacAddr& macs) {
    if (lookup(ips)) return false;
    live_.push_back({ips, macs});
    journal_.push_back({ips, macs});
    return true;
}

void VerificationTable::remove(const IpV4Addr& ips) {
    std::erase_if(live_, [&](const IpMacPair& e) { return e.ip == ips; });
}

std::optional<MacAddr> VerificationTable::lookup(const IpV4Addr& ips) const {
    for (const IpMacPair& e : live_) {
        if (e.ip == ips) return e.mac;
    }
    return std::nullopt;
}

bool AuthBindingsTable::insert(const IpV4Addr& ip, const MacAddr& mac) {
    if (auto existing = lookup(ip)) return *existing == mac;
    live_.push_back({ip, mac});
    journal_.push_back({ip, mac});
    return true;
}

std::optional<MacAddr> AuthBindingsTable::lookup(const IpV4Addr& ip) const {
    for (const IpMacPair& e : live_) {
        if (e.ip == ip) return e.mac;
    }
    return std::nullopt;
}

void StateTables::evict_expired(Timestamp now, const EngineConfig& cfg) {
    request_sent.evict_expired(now, cfg.t_req_ms);
    response_received.evict_expired(now, cfg.t_resp_ms);
    // Verification and authenticated-bindings entries have no timeout.
}

std::string StateTables::snapshot() const {
    std::ostringstream out;
    for (const IpV4Addr& ip : request_sent.journal())
        out << "RQT " << ip.to_string() << '\n';
    for (const IpMacPair& e : response_received.journal())
        out << "RST " << e.ip.to_string() << ' ' << e.mac.to_string() << '\n';
    for (const IpMacPair& e : verification.journal())
        out << "VRFT " << e.ip.to_string() << ' ' << e.mac.to_string() << '\n';
    for (const IpMacPair& e : auth_bindings.journal())
        out << "AUTHT " << e.ip.to_string() << ' ' << e.mac.to_string() << '\n';
    return out.str();
}

}  // namespace arpids
