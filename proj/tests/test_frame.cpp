#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "arpids/frame.hpp"

using namespace arpids;

namespace {

ArpFrame sample_request() {
    ArpFrame f;
    f.eth_dst = MacAddr::broadcast();
    f.eth_src = *MacAddr::parse("aa:aa:aa:aa:aa:aa");
    f.opcode = kOpcodeRequest;
    f.sha = f.eth_src;
    f.spa = *IpV4Addr::parse("10.0.0.2");
    f.tha = MacAddr::zero();
    f.tpa = *IpV4Addr::parse("10.0.0.3");
    return f;
}

ArpFrame random_frame(std::mt19937& rng) {
    std::uniform_int_distribution<int> byte(0, 255);
    ArpFrame f;
    for (auto& o : f.eth_dst.octets) o = static_cast<std::uint8_t>(byte(rng));
    for (auto& o : f.eth_src.octets) o = static_cast<std::uint8_t>(byte(rng));
    f.htype = static_cast<std::uint16_t>(byte(rng) << 8 | byte(rng));
    f.ptype = static_cast<std::uint16_t>(byte(rng) << 8 | byte(rng));
    f.hlen = static_cast<std::uint8_t>(byte(rng));
    f.plen = static_cast<std::uint8_t>(byte(rng));
    f.opcode = static_cast<std::uint16_t>(byte(rng) << 8 | byte(rng));
    for (auto& o : f.sha.octets) o = static_cast<std::uint8_t>(byte(rng));
    for (auto& o : f.spa.octets) o = static_cast<std::uint8_t>(byte(rng));
    for (auto& o : f.tha.octets) o = static_cast<std::uint8_t>(byte(rng));
    for (auto& o : f.tpa.octets) o = static_cast<std::uint8_t>(byte(rng));
    return f;
}

}  // namespace

TEST_CASE("address text forms round-trip") {
    CHECK(MacAddr::parse("02:00:00:00:00:0a")->to_string() ==
          "02:00:00:00:00:0a");
    CHECK(MacAddr::parse("FF:FF:FF:FF:FF:FF")->is_broadcast());
    CHECK(!MacAddr::parse("02:00:00:00:00"));
    CHECK(!MacAddr::parse("02-00-00-00-00-0a"));
    CHECK(IpV4Addr::parse("10.0.0.2")->to_string() == "10.0.0.2");
    CHECK(!IpV4Addr::parse("10.0.0.256"));
    CHECK(!IpV4Addr::parse("10.0.0"));
    CHECK(!IpV4Addr::parse("10.0.0.1.2"));
}

TEST_CASE("parse_frame extracts fields at fixed offsets") {
    ArpFrame f = sample_request();
    auto bytes = serialize_frame(f);
    REQUIRE(bytes.size() == kFrameWireSize);
    CHECK(bytes[12] == 0x08);
    CHECK(bytes[13] == 0x06);
    CHECK(bytes[20] == 0x00);
    CHECK(bytes[21] == 0x01);
    // Target protocol address octets sit at the end of the body.
    CHECK(bytes[38] == 10);
    CHECK(bytes[39] == 0);
    CHECK(bytes[40] == 0);
    CHECK(bytes[41] == 3);

    auto parsed = parse_frame(bytes);
    REQUIRE(parsed);
    CHECK(parsed->sha.to_string() == "aa:aa:aa:aa:aa:aa");
    CHECK(parsed->spa.to_string() == "10.0.0.2");
    CHECK(*parsed == f);
}

TEST_CASE("parse_frame error cases") {
    ParseError err;
    std::vector<std::uint8_t> short_input(20, 0);
    CHECK(!parse_frame(short_input, &err));
    CHECK(err == ParseError::too_short);

    auto bytes = serialize_frame(sample_request());
    bytes[12] = 0x08;
    bytes[13] = 0x00;  // IPv4 EtherType
    CHECK(!parse_frame(bytes, &err));
    CHECK(err == ParseError::not_arp);
}

TEST_CASE("trailing padding is ignored") {
    auto bytes = serialize_frame(sample_request());
    bytes.resize(60, 0);  // minimum Ethernet frame padding
    auto parsed = parse_frame(bytes);
    REQUIRE(parsed);
    CHECK(*parsed == sample_request());
}

TEST_CASE("round-trip identity holds for arbitrary frames") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 500; ++i) {
        ArpFrame f = random_frame(rng);
        auto parsed = parse_frame(serialize_frame(f));
        REQUIRE(parsed);
        CHECK(*parsed == f);
    }
}

TEST_CASE("reply frames serialize opcode 2") {
    ArpFrame f = sample_request();
    f.opcode = kOpcodeReply;
    auto bytes = serialize_frame(f);
    CHECK(bytes[20] == 0x00);
    CHECK(bytes[21] == 0x02);
}

TEST_CASE("malformed detection") {
    ArpFrame ok = sample_request();
    CHECK(!is_malformed(ok));

    ArpFrame mismatch = ok;
    mismatch.sha = *MacAddr::parse("bb:bb:bb:bb:bb:bb");
    CHECK(is_malformed(mismatch));

    // Each immutable field against its standard value.
    ArpFrame f = ok;
    f.htype = 2;
    CHECK(is_malformed(f));
    f = ok;
    f.ptype = 0x86dd;
    CHECK(is_malformed(f));
    f = ok;
    f.hlen = 8;
    CHECK(is_malformed(f));
    f = ok;
    f.plen = 16;
    CHECK(is_malformed(f));
    f = ok;
    f.opcode = 3;
    CHECK(is_malformed(f));

    // tha content and eth_dst are not part of the check.
    f = ok;
    f.tha = MacAddr::broadcast();
    CHECK(!is_malformed(f));
    f.eth_dst = *MacAddr::parse("02:00:00:00:00:0b");
    CHECK(!is_malformed(f));
}

TEST_CASE("is_malformed is pure") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
        ArpFrame f = random_frame(rng);
        CHECK(is_malformed(f) == is_malformed(f));
    }
}

TEST_CASE("unicast and gratuitous predicates") {
    ArpFrame f = sample_request();
    CHECK(!is_unicast_request(f));
    f.eth_dst = *MacAddr::parse("aa:bb:cc:dd:ee:01");
    CHECK(is_unicast_request(f));

    ArpFrame g = sample_request();
    CHECK(!is_gratuitous(g));
    g.tpa = g.spa;
    CHECK(is_gratuitous(g));

    ArpFrame reply = sample_request();
    reply.opcode = kOpcodeReply;
    reply.spa = *IpV4Addr::parse("10.0.0.5");
    reply.tpa = *IpV4Addr::parse("10.0.0.5");
    CHECK(is_gratuitous(reply));
}

TEST_CASE("exactly one dispatch branch applies per frame") {
    // Branch order: malformed, unicast (requests), gratuitous, rest.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> byte(0, 3);
    for (int i = 0; i < 500; ++i) {
        ArpFrame f = random_frame(rng);
        // Bias fields toward collisions so every branch gets exercised.
        f.htype = byte(rng) == 0 ? 1 : 2;
        f.ptype = 0x0800;
        f.hlen = 6;
        f.plen = 4;
        f.opcode = byte(rng) == 0 ? kOpcodeRequest : kOpcodeReply;
        if (byte(rng) == 0) f.eth_src = f.sha;
        if (byte(rng) == 0) f.eth_dst = MacAddr::broadcast();
        if (byte(rng) == 0) f.tpa = f.spa;

        int branches = 0;
        if (is_malformed(f)) {
            ++branches;
        } else if (f.is_request() && is_unicast_request(f)) {
            ++branches;
        } else if (is_gratuitous(f)) {
            ++branches;
        } else {
            ++branches;
        }
        CHECK(branches == 1);
    }
}
