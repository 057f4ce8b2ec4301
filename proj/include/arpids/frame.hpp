// ARP-over-Ethernet frame representation, wire codec and the structural
// predicates the detection engine dispatches on.
//
// Wire layout (42 meaningful octets, big-endian multi-octet fields):
//   Ethernet II: dst 6, src 6, EtherType 2 (0x0806)
//   ARP body:    htype 2, ptype 2, hlen 1, plen 1, opcode 2,
//                sha 6, spa 4, tha 6, tpa 4
// Trailing padding is ignored on parse.

#ifndef ARPIDS_FRAME_HPP
#define ARPIDS_FRAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arpids/addr.hpp"

namespace arpids {

inline constexpr std::uint16_t kEtherTypeArp = 0x0806;
inline constexpr std::uint16_t kOpcodeRequest = 1;
inline constexpr std::uint16_t kOpcodeReply = 2;
inline constexpr std::size_t kFrameWireSize = 42;

struct ArpFrame {
    MacAddr eth_dst;
    MacAddr eth_src;
    std::uint16_t htype = 1;       // Ethernet
    std::uint16_t ptype = 0x0800;  // IPv4
    std::uint8_t hlen = 6;
    std::uint8_t plen = 4;
    std::uint16_t opcode = kOpcodeRequest;
    MacAddr sha;   // sender hardware address (MACS)
    IpV4Addr spa;  // sender protocol address (IPS)
    MacAddr tha;   // target hardware address (MACD)
    IpV4Addr tpa;  // target protocol address (IPD)

    bool operator==(const ArpFrame&) const = default;

    bool is_request() const { return opcode == kOpcodeRequest; }
    bool is_reply() const { return opcode == kOpcodeReply; }
};

enum class ParseError { too_short, not_arp };

// Fails with too_short below 42 octets, not_arp when the EtherType field
// is not 0x0806. Lossless against serialize_frame on the 42 meaningful
// octets.
std::optional<ArpFrame> parse_frame(std::span<const std::uint8_t> bytes,
                                    ParseError* error = nullptr);

std::vector<std::uint8_t> serialize_frame(const ArpFrame& frame);

// True iff an immutable header field deviates from the ARP-over-Ethernet
// IPv4 constants (htype 1, ptype 0x0800, hlen 6, plen 4, opcode 1 or 2)
// or the Ethernet source differs from the ARP sender hardware address.
// Ethernet destination vs. tha is deliberately not compared: legitimate
// requests carry tha zero or broadcast while eth_dst is broadcast.
bool is_malformed(const ArpFrame& frame);

// Requests only: true iff the Ethernet destination is not broadcast.
bool is_unicast_request(const ArpFrame& frame);

// True iff sender and target protocol addresses are equal.
bool is_gratuitous(const ArpFrame& frame);

}  // namespace arpids

#endif
