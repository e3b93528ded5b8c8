#ifndef VNDN_NET_WIRE_HPP
#define VNDN_NET_WIRE_HPP

#include "../util/errors.hpp"
#include "frame.hpp"

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace vndn {

/// Fixed-layout byte codecs for the two NDN packet kinds and the UDP/IPv4
/// encapsulation. Layouts are little-endian for NDN fields and big-endian for
/// the IP/UDP headers (network order). Sizes match the wireSize() accounting:
/// interest = 32 + name, data = 48 + name + payload, UDP/IPv4 adds 28.

namespace detail {

inline void
put16le(std::vector<std::uint8_t>& out, std::uint16_t v)
{
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void
put32le(std::vector<std::uint8_t>& out, std::uint32_t v)
{
  for (int i = 0; i < 4; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

inline void
put64le(std::vector<std::uint8_t>& out, std::uint64_t v)
{
  for (int i = 0; i < 8; ++i) {
    out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
}

inline void
put16be(std::vector<std::uint8_t>& out, std::uint16_t v)
{
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void
put32be(std::vector<std::uint8_t>& out, std::uint32_t v)
{
  out.push_back(static_cast<std::uint8_t>(v >> 24));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

class Reader {
public:
  Reader(const std::uint8_t* p, std::size_t n)
    : m_p(p)
    , m_n(n)
  {
  }

  std::uint8_t
  u8()
  {
    need(1);
    return m_p[m_pos++];
  }

  std::uint16_t
  u16le()
  {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>(m_p[m_pos] | (m_p[m_pos + 1] << 8));
    m_pos += 2;
    return v;
  }

  std::uint32_t
  u32le()
  {
    need(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) {
      v = (v << 8) | m_p[m_pos + i];
    }
    m_pos += 4;
    return v;
  }

  std::uint64_t
  u64le()
  {
    need(8);
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) {
      v = (v << 8) | m_p[m_pos + i];
    }
    m_pos += 8;
    return v;
  }

  std::uint16_t
  u16be()
  {
    need(2);
    std::uint16_t v = static_cast<std::uint16_t>((m_p[m_pos] << 8) | m_p[m_pos + 1]);
    m_pos += 2;
    return v;
  }

  std::uint32_t
  u32be()
  {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v = (v << 8) | m_p[m_pos + i];
    }
    m_pos += 4;
    return v;
  }

  std::string
  bytes(std::size_t n)
  {
    need(n);
    std::string s(reinterpret_cast<const char*>(m_p + m_pos), n);
    m_pos += n;
    return s;
  }

  void
  skip(std::size_t n)
  {
    need(n);
    m_pos += n;
  }

  std::size_t
  remaining() const noexcept
  {
    return m_n - m_pos;
  }

private:
  void
  need(std::size_t n) const
  {
    if (m_pos + n > m_n) {
      throw ValidationError("wire decode: truncated packet");
    }
  }

  const std::uint8_t* m_p;
  std::size_t m_n;
  std::size_t m_pos = 0;
};

inline void
putName(std::vector<std::uint8_t>& out, const Name& name)
{
  for (std::size_t i = 0; i < name.size(); ++i) {
    const std::string& comp = name.at(i);
    if (comp.size() > 255) {
      throw ValidationError("name component exceeds 255 bytes");
    }
    out.push_back(static_cast<std::uint8_t>(comp.size()));
    out.insert(out.end(), comp.begin(), comp.end());
  }
}

inline Name
readName(Reader& r, std::size_t compCount)
{
  Name name;
  for (std::size_t i = 0; i < compCount; ++i) {
    std::size_t len = r.u8();
    if (len == 0) {
      throw ValidationError("wire decode: empty name component");
    }
    name.append(r.bytes(len));
  }
  return name;
}

} // namespace detail

inline std::vector<std::uint8_t>
encodePacket(const Packet& packet)
{
  using namespace detail;
  std::vector<std::uint8_t> out;
  out.reserve(wireSize(packet));
  if (std::holds_alternative<Interest>(packet)) {
    const Interest& i = std::get<Interest>(packet);
    if (i.name.empty()) {
      throw ValidationError("cannot encode interest with empty name");
    }
    out.push_back('N');
    out.push_back('I');
    out.push_back(1); // version
    out.push_back(0); // flags
    put32le(out, i.nonce);
    put64le(out, static_cast<std::uint64_t>(i.lifetime));
    put16le(out, static_cast<std::uint16_t>(i.name.encodedLength()));
    put16le(out, static_cast<std::uint16_t>(i.name.size()));
    out.insert(out.end(), 12, 0); // reserved, pads header to 32
    putName(out, i.name);
  }
  else {
    const Data& d = std::get<Data>(packet);
    if (d.name.empty()) {
      throw ValidationError("cannot encode data with empty name");
    }
    out.push_back('N');
    out.push_back('D');
    out.push_back(1); // version
    out.push_back(0); // flags
    put32le(out, d.payloadLength);
    put16le(out, static_cast<std::uint16_t>(d.name.encodedLength()));
    put16le(out, static_cast<std::uint16_t>(d.name.size()));
    out.insert(out.end(), 36, 0); // reserved, pads header to 48
    putName(out, d.name);
    out.insert(out.end(), d.payloadLength, 0); // zero-filled model payload
  }
  return out;
}

inline Packet
decodePacket(const std::vector<std::uint8_t>& bytes)
{
  using namespace detail;
  Reader r(bytes.data(), bytes.size());
  std::uint8_t m0 = r.u8();
  std::uint8_t m1 = r.u8();
  if (m0 != 'N' || (m1 != 'I' && m1 != 'D')) {
    throw ValidationError("wire decode: bad magic");
  }
  std::uint8_t version = r.u8();
  if (version != 1) {
    throw ValidationError("wire decode: unsupported version");
  }
  r.skip(1); // flags
  if (m1 == 'I') {
    Interest i;
    i.nonce = r.u32le();
    i.lifetime = static_cast<SimTime>(r.u64le());
    std::uint16_t nameLen = r.u16le();
    std::uint16_t compCount = r.u16le();
    r.skip(12);
    i.name = readName(r, compCount);
    if (i.name.encodedLength() != nameLen || r.remaining() != 0) {
      throw ValidationError("wire decode: interest length mismatch");
    }
    return i;
  }
  Data d;
  d.payloadLength = r.u32le();
  std::uint16_t nameLen = r.u16le();
  std::uint16_t compCount = r.u16le();
  r.skip(36);
  d.name = readName(r, compCount);
  if (d.name.encodedLength() != nameLen || r.remaining() != d.payloadLength) {
    throw ValidationError("wire decode: data length mismatch");
  }
  return d;
}

struct UdpDatagram {
  Ipv4Endpoint src;
  Ipv4Endpoint dst;
  std::vector<std::uint8_t> payload;
};

inline std::vector<std::uint8_t>
encapsulateUdpIpv4(const std::vector<std::uint8_t>& payload, Ipv4Endpoint src, Ipv4Endpoint dst)
{
  using namespace detail;
  std::vector<std::uint8_t> out;
  out.reserve(kUdpIpv4HeaderLength + payload.size());
  std::size_t total = 20 + 8 + payload.size();
  out.push_back(0x45); // IPv4, 5-word header
  out.push_back(0);    // DSCP
  put16be(out, static_cast<std::uint16_t>(total));
  put16be(out, 0);  // identification
  put16be(out, 0);  // flags + fragment offset (no fragmentation by construction)
  out.push_back(64); // TTL
  out.push_back(17); // protocol: UDP
  put16be(out, 0);  // header checksum (not modeled)
  put32be(out, src.ip);
  put32be(out, dst.ip);
  put16be(out, src.port);
  put16be(out, dst.port);
  put16be(out, static_cast<std::uint16_t>(8 + payload.size()));
  put16be(out, 0); // UDP checksum (not modeled)
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

inline UdpDatagram
decapsulateUdpIpv4(const std::vector<std::uint8_t>& bytes)
{
  using namespace detail;
  Reader r(bytes.data(), bytes.size());
  if (r.u8() != 0x45) {
    throw ValidationError("udp decap: not an IPv4/5-word header");
  }
  r.skip(1);
  std::uint16_t total = r.u16be();
  if (total != bytes.size()) {
    throw ValidationError("udp decap: total length mismatch");
  }
  r.skip(4); // id, flags/frag
  r.skip(1); // ttl
  if (r.u8() != 17) {
    throw ValidationError("udp decap: not UDP");
  }
  r.skip(2); // checksum
  UdpDatagram d;
  d.src.ip = r.u32be();
  d.dst.ip = r.u32be();
  d.src.port = r.u16be();
  d.dst.port = r.u16be();
  std::uint16_t udpLen = r.u16be();
  r.skip(2); // checksum
  if (udpLen != 8 + r.remaining()) {
    throw ValidationError("udp decap: UDP length mismatch");
  }
  d.payload.resize(r.remaining());
  for (auto& b : d.payload) {
    b = r.u8();
  }
  return d;
}

} // namespace vndn

#endif // VNDN_NET_WIRE_HPP
