#include "arpids/frame.hpp"

#include <algorithm>

namespace arpids {

namespace {

std::uint16_t read_u16(std::span<const std::uint8_t> bytes, std::size_t at) {
    return static_cast<std::uint16_t>(bytes[at] << 8 | bytes[at + 1]);
}

void write_u16(std::vector<std::uint8_t>& out, std::uint16_t value) {
    out.push_back(static_cast<std::uint8_t>(value >> 8));
    out.push_back(static_cast<std::uint8_t>(value & 0xff));
}

}  // namespace

std::optional<ArpFrame> parse_frame(std::span<const std::uint8_t> bytes,
                                    ParseError* error) {
    if (bytes.size() < kFrameWireSize) {
        if (error) *error = ParseError::too_short;
        return std::nullopt;
    }
    if (read_u16(bytes, 12) != kEtherTypeArp) {
        if (error) *error = ParseError::not_arp;
        return std::nullopt;
    }
    ArpFrame f;
    std::copy_n(bytes.begin(), 6, f.eth_dst.octets.begin());
    std::copy_n(bytes.begin() + 6, 6, f.eth_src.octets.begin());
    f.htype = read_u16(bytes, 14);
    f.ptype = read_u16(bytes, 16);
    f.hlen = bytes[18];
    f.plen = bytes[19];
    f.opcode = read_u16(bytes, 20);
    std::copy_n(bytes.begin() + 22, 6, f.sha.octets.begin());
    std::copy_n(bytes.begin() + 28, 4, f.spa.octets.begin());
    std::copy_n(bytes.begin() + 32, 6, f.tha.octets.begin());
    std::copy_n(bytes.begin() + 38, 4, f.tpa.octets.begin());
    return f;
}

std::vector<std::uint8_t> serialize_frame(const ArpFrame& frame) {
    std::vector<std::uint8_t> out;
    out.reserve(kFrameWireSize);
    out.insert(out.end(), frame.eth_dst.octets.begin(), frame.eth_dst.octets.end());
    out.insert(out.end(), frame.eth_src.octets.begin(), frame.eth_src.octets.end());
    write_u16(out, kEtherTypeArp);
    write_u16(out, frame.htype);
    write_u16(out, frame.ptype);
    out.push_back(frame.hlen);
    out.push_back(frame.plen);
    write_u16(out, frame.opcode);
    out.insert(out.end(), frame.sha.octets.begin(), frame.sha.octets.end());
    out.insert(out.end(), frame.spa.octets.begin(), frame.spa.octets.end());
    out.insert(out.end(), frame.tha.octets.begin(), frame.tha.octets.end());
    out.insert(out.end(), frame.tpa.octets.begin(), frame.tpa.octets.end());
    return out;
}

bool is_malformed(const ArpFrame& frame) {
    if (frame.htype != 1 || frame.ptype != 0x0800) return true;
    if (frame.hlen != 6 || frame.plen != 4) return true;
    if (frame.opcode != kOpcodeRequest && frame.opcode != kOpcodeReply) return true;
    return frame.eth_src != frame.sha;
}

bool is_unicast_request(const ArpFrame& frame) {
    return !frame.eth_dst.is_broadcast();
}

bool is_gratuitous(const ArpFrame& frame) { return frame.spa == frame.tpa; }

}  // namespace arpids
