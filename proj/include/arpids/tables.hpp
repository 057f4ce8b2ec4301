// The four data tables backing the detection engine (request-sent,
// response-received, verification, authenticated bindings) plus the
// unsolicited-response counter, with their timeout semantics.
//
// Each table keeps two views: the live contents, which eviction and the
// engine mutate, and an append-only insertion journal used by snapshot
// export. The journal is what the report tables show; the live view is
// what the algorithms consult.

#ifndef ARPIDS_TABLES_HPP
#define ARPIDS_TABLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arpids/addr.hpp"

namespace arpids {

// Monotonic virtual time, milliseconds since engine start.
struct Timestamp {
    std::int64_t ms = 0;
    auto operator<=>(const Timestamp&) const = default;
};

using DurationMs = std::int64_t;

inline Timestamp operator+(Timestamp t, DurationMs d) { return {t.ms + d}; }
inline DurationMs operator-(Timestamp a, Timestamp b) { return a.ms - b.ms; }

enum class ScanMode {
    window,       // spoof detector scans only replies from the probe window
    whole_table,  // spoof detector scans every retained response entry
};

struct EngineConfig {
    DurationMs t_req_ms = 50;      // request-reply round-trip bound
    DurationMs t_resp_ms = 60000;  // response-received entry lifetime
    DurationMs delta_ms = 1000;    // DoS time window
    std::uint32_t dos_th = 10;     // DoS threshold
    IpV4Addr hids_ip;
    MacAddr hids_mac;

    // t_req may be zero (degenerate probe window, useful for demos); all
    // other bounds follow the table-lifetime invariants.
    void validate() const;  // throws std::invalid_argument
};

struct RequestSentEntry {
    IpV4Addr ipd;
    Timestamp t;
};

struct ResponseEntry {
    IpV4Addr ips;
    MacAddr macs;
    Timestamp t;
};

struct IpMacPair {
    IpV4Addr ip;
    MacAddr mac;
    bool operator==(const IpMacPair&) const = default;
};

class RequestSentTable {
public:
    // Duplicates for the same destination IP allowed; each send is an entry.
    void record(const IpV4Addr& ipd, Timestamp t);
    void evict_expired(Timestamp now, DurationMs t_req_ms);
    bool contains(const IpV4Addr& ipd) const;

    const std::vector<RequestSentEntry>& live() const { return live_; }
    const std::vector<IpV4Addr>& journal() const { return journal_; }

private:
    std::vector<RequestSentEntry> live_;
    std::vector<IpV4Addr> journal_;
};

class ResponseReceivedTable {
public:
    // Duplicates permitted: the same IP appearing with several MACs is the
    // spoof signal. Insertion order preserved.
    void record(const IpV4Addr& ips, const MacAddr& macs, Timestamp t);
    void evict_expired(Timestamp now, DurationMs t_resp_ms);

    // Entries with ips == ip and t >= since, in insertion order.
    std::vector<ResponseEntry> responses_for(const IpV4Addr& ip,
                                             Timestamp since) const;

    const std::vector<ResponseEntry>& live() const { return live_; }
    const std::vector<IpMacPair>& journal() const { return journal_; }

private:
    std::vector<ResponseEntry> live_;
    std::vector<IpMacPair> journal_;
};

class VerificationTable {
public:
    // At most one live entry per IP; insert is a no-op when the IP is
    // already pending.
    bool insert(const IpV4Addr& ips, const MacAddr& macs);
    void remove(const IpV4Addr& ips);
    std::optional<MacAddr> lookup(const IpV4Addr& ips) const;

    const std::vector<IpMacPair>& live() const { return live_; }
    const std::vector<IpMacPair>& journal() const { return journal_; }

private:
    std::vector<IpMacPair> live_;
    std::vector<IpMacPair> journal_;
};

class AuthBindingsTable {
public:
    // At most one entry per IP; a conflicting insert is rejected and the
    // existing binding wins.
    bool insert(const IpV4Addr& ip, const MacAddr& mac);
    std::optional<MacAddr> lookup(const IpV4Addr& ip) const;

    const std::vector<IpMacPair>& live() const { return live_; }
    const std::vector<IpMacPair>& journal() const { return journal_; }

private:
    std::vector<IpMacPair> live_;
    std::vector<IpMacPair> journal_;
};

struct UnsolicitedState {
    std::uint32_t counter = 0;
    Timestamp last_t;
};

struct StateTables {
    RequestSentTable request_sent;
    ResponseReceivedTable response_received;
    VerificationTable verification;
    AuthBindingsTable auth_bindings;
    UnsolicitedState unsolicited;

    void evict_expired(Timestamp now, const EngineConfig& cfg);

    // Journal dump, one record per line: table name then fields in the
    // order the report tables use (RQT ip / RST ip mac / VRFT ip mac /
    // AUTHT ip mac).
    std::string snapshot() const;
};

}  // namespace arpids

#endif
