#include "arpids/addr.hpp"

#include <charconv>
#include <cstdio>

namespace arpids {

std::string MacAddr::to_string() const {
    char buf[18];
    std::snprintf(buf, sizeof(buf), "%02x:%02x:%02x:%02x:%02x:%02x", octets[0],
                  octets[1], octets[2], octets[3], octets[4], octets[5]);
    return buf;
}

namespace {

std::optional<std::uint8_t> hex_nibble(char c) {
    if (c >= '0' && c <= '9') return static_cast<std::uint8_t>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<std::uint8_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<std::uint8_t>(c - 'A' + 10);
    return std::nullopt;
}

}  // namespace

std::optional<MacAddr> MacAddr::parse(std::string_view text) {
    if (text.size() != 17) return std::nullopt;
    MacAddr mac;
    for (int i = 0; i < 6; ++i) {
        const std::size_t pos = static_cast<std::size_t>(i) * 3;
        if (i > 0 && text[pos - 1] != ':') return std::nullopt;
        auto hi = hex_nibble(text[pos]);
        auto lo = hex_nibble(text[pos + 1]);
        if (!hi || !lo) return std::nullopt;
        mac.octets[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(*hi << 4 | *lo);
    }
    return mac;
}

std::string IpV4Addr::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%u.%u.%u.%u", octets[0], octets[1],
                  octets[2], octets[3]);
    return buf;
}

std::optional<IpV4Addr> IpV4Addr::parse(std::string_view text) {
    IpV4Addr ip;
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            if (p == end || *p != '.') return std::nullopt;
            ++p;
        }
        unsigned value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || next == p || value > 255) return std::nullopt;
        ip.octets[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(value);
        p = next;
    }
    if (p != end) return std::nullopt;
    return ip;
}

}  // namespace arpids
