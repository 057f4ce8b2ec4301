// MAC and IPv4 address value types with the canonical text forms used by
// scenario files and reports (colon-hex, dotted-quad).

#ifndef ARPIDS_ADDR_HPP
#define ARPIDS_ADDR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace arpids {

struct MacAddr {
    std::array<std::uint8_t, 6> octets{};

    auto operator<=>(const MacAddr&) const = default;

    static constexpr MacAddr broadcast() {
        return MacAddr{{0xff, 0xff, 0xff, 0xff, 0xff, 0xff}};
    }
    static constexpr MacAddr zero() { return MacAddr{}; }

    bool is_broadcast() const { return *this == broadcast(); }

    // Six lowercase hex pairs separated by colons, e.g. "02:00:00:00:00:0a".
    std::string to_string() const;
    static std::optional<MacAddr> parse(std::string_view text);
};

struct IpV4Addr {
    std::array<std::uint8_t, 4> octets{};

    auto operator<=>(const IpV4Addr&) const = default;

    // Dotted-quad decimal, e.g. "10.0.0.2".
    std::string to_string() const;
    static std::optional<IpV4Addr> parse(std::string_view text);
};

}  // namespace arpids

#endif
