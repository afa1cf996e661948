#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "secdt/ring.hpp"

namespace secdt::mpc3 {

// Ordered, reliable duplex message channel to one neighbor. One send() is one
// framed message; recv() returns exactly one message.
class Channel {
public:
    virtual ~Channel() = default;
    virtual void send(std::span<const u64> xs) = 0;
    virtual std::vector<u64> recv() = 0;
    // signal end-of-stream to the peer; a blocked recv() there then throws
    virtual void close() {}

    u64 bytes_sent = 0;
    u64 messages_sent = 0;
};

// Channels one party uses: to the next party (i+1) and the previous (i-1).
struct PartyChannels {
    std::unique_ptr<Channel> next;
    std::unique_ptr<Channel> prev;
};

// In-process mesh for the threaded simulator.
std::array<PartyChannels, 3> make_local_mesh();

// TCP transport. Wire format: 8-byte little-endian element count, then packed
// 8-byte little-endian ring elements.
// Party i listens on `listen`, accepts one connection from party i-1, and
// connects to party i+1 at `next_addr` (host:port), retrying during startup.
PartyChannels connect_ring(int party, const std::string& listen,
                           const std::string& next_addr);

} // namespace secdt::mpc3
