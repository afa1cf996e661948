#include "secdt/mpc3/transport.hpp"

#include <condition_variable>
#include <cstring>
#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

namespace secdt::mpc3 {

namespace {

class LocalQueue {
public:
    void push(std::vector<u64> msg) {
        {
            std::lock_guard lock(mu_);
            q_.push_back(std::move(msg));
        }
        cv_.notify_one();
    }
    std::vector<u64> pop() {
        std::unique_lock lock(mu_);
        cv_.wait(lock, [&] { return !q_.empty() || closed_; });
        if (q_.empty()) throw std::runtime_error("transport: channel closed");
        auto msg = std::move(q_.front());
        q_.pop_front();
        return msg;
    }
    void close() {
        {
            std::lock_guard lock(mu_);
            closed_ = true;
        }
        cv_.notify_all();
    }

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::deque<std::vector<u64>> q_;
    bool closed_ = false;
};

class LocalChannel : public Channel {
public:
    LocalChannel(std::shared_ptr<LocalQueue> out, std::shared_ptr<LocalQueue> in)
        : out_(std::move(out)), in_(std::move(in)) {}

    void send(std::span<const u64> xs) override {
        bytes_sent += 8 * (xs.size() + 1);
        messages_sent += 1;
        out_->push(std::vector<u64>(xs.begin(), xs.end()));
    }
    std::vector<u64> recv() override { return in_->pop(); }
    void close() override { out_->close(); }

private:
    std::shared_ptr<LocalQueue> out_;
    std::shared_ptr<LocalQueue> in_;
};

void write_all(int fd, const void* data, std::size_t len) {
    const char* p = static_cast<const char*>(data);
    while (len > 0) {
        ssize_t n = ::write(fd, p, len);
        if (n <= 0) throw std::runtime_error("transport: write failed");
        p += n;
        len -= std::size_t(n);
    }
}

void read_all(int fd, void* data, std::size_t len) {
    char* p = static_cast<char*>(data);
    while (len > 0) {
        ssize_t n = ::read(fd, p, len);
        if (n <= 0) throw std::runtime_error("transport: connection closed");
        p += n;
        len -= std::size_t(n);
    }
}

void put_le(u64 v, unsigned char* out) {
    for (int i = 0; i < 8; ++i) out[i] = (v >> (8 * i)) & 0xff;
}

u64 get_le(const unsigned char* in) {
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(in[i]) << (8 * i);
    return v;
}

class TcpChannel : public Channel {
public:
    explicit TcpChannel(int fd) : fd_(fd) {
        int one = 1;
        ::setsockopt(fd_, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    }
    ~TcpChannel() override {
        if (fd_ >= 0) ::close(fd_);
    }

    void send(std::span<const u64> xs) override {
        std::vector<unsigned char> buf(8 * (xs.size() + 1));
        put_le(xs.size(), buf.data());
        for (std::size_t i = 0; i < xs.size(); ++i)
            put_le(xs[i], buf.data() + 8 * (i + 1));
        write_all(fd_, buf.data(), buf.size());
        bytes_sent += buf.size();
        messages_sent += 1;
    }

    std::vector<u64> recv() override {
        unsigned char head[8];
        read_all(fd_, head, 8);
        u64 count = get_le(head);
        if (count > (u64(1) << 32))
            throw std::runtime_error("transport: oversized frame");
        std::vector<unsigned char> buf(8 * count);
        read_all(fd_, buf.data(), buf.size());
        std::vector<u64> out(count);
        for (u64 i = 0; i < count; ++i) out[i] = get_le(buf.data() + 8 * i);
        return out;
    }

    void close() override { ::shutdown(fd_, SHUT_WR); }

private:
    int fd_;
};

std::pair<std::string, std::string> split_hostport(const std::string& addr) {
    auto pos = addr.rfind(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("expected host:port, got " + addr);
    return {addr.substr(0, pos), addr.substr(pos + 1)};
}

int listen_on(const std::string& addr) {
    auto [host, port] = split_hostport(addr);
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    hints.ai_flags = AI_PASSIVE;
    addrinfo* res = nullptr;
    if (::getaddrinfo(host.empty() ? nullptr : host.c_str(), port.c_str(),
                      &hints, &res) != 0)
        throw std::runtime_error("transport: cannot resolve " + addr);
    int fd = ::socket(res->ai_family, res->ai_socktype, res->ai_protocol);
    if (fd < 0) {
        ::freeaddrinfo(res);
        throw std::runtime_error("transport: socket failed");
    }
    int one = 1;
    ::setsockopt(fd, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    if (::bind(fd, res->ai_addr, res->ai_addrlen) != 0 || ::listen(fd, 1) != 0) {
        ::freeaddrinfo(res);
        ::close(fd);
        throw std::runtime_error("transport: cannot listen on " + addr);
    }
    ::freeaddrinfo(res);
    return fd;
}

int connect_to(const std::string& addr) {
    auto [host, port] = split_hostport(addr);
    for (int attempt = 0; attempt < 600; ++attempt) {
        addrinfo hints{};
        hints.ai_family = AF_UNSPEC;
        hints.ai_socktype = SOCK_STREAM;
        addrinfo* res = nullptr;
        if (::getaddrinfo(host.c_str(), port.c_str(), &hints, &res) == 0) {
            int fd = ::socket(res->ai_family, res->ai_socktype,
                              res->ai_protocol);
            if (fd >= 0 &&
                ::connect(fd, res->ai_addr, res->ai_addrlen) == 0) {
                ::freeaddrinfo(res);
                return fd;
            }
            if (fd >= 0) ::close(fd);
            ::freeaddrinfo(res);
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
    }
    throw std::runtime_error("transport: cannot connect to " + addr);
}

} // namespace

std::array<PartyChannels, 3> make_local_mesh() {
    // one queue per directed edge
    std::shared_ptr<LocalQueue> to_next[3], to_prev[3];
    for (int i = 0; i < 3; ++i) {
        to_next[i] = std::make_shared<LocalQueue>();
        to_prev[i] = std::make_shared<LocalQueue>();
    }
    std::array<PartyChannels, 3> mesh;
    for (int i = 0; i < 3; ++i) {
        int next = (i + 1) % 3;
        int prev = (i + 2) % 3;
        mesh[i].next =
            std::make_unique<LocalChannel>(to_next[i], to_prev[next]);
        mesh[i].prev =
            std::make_unique<LocalChannel>(to_prev[i], to_next[prev]);
    }
    return mesh;
}

PartyChannels connect_ring(int party, const std::string& listen,
                           const std::string& next_addr) {
    if (party < 0 || party > 2)
        throw std::invalid_argument("party must be 0, 1, or 2");
    int lfd = listen_on(listen);

    // connect to the successor while accepting the predecessor
    int next_fd = -1;
    std::exception_ptr err;
    std::thread dialer([&] {
        try {
            next_fd = connect_to(next_addr);
            u64 hello = u64(party);
            write_all(next_fd, &hello, 8);
        } catch (...) {
            err = std::current_exception();
        }
    });

    int prev_fd = ::accept(lfd, nullptr, nullptr);
    dialer.join();
    ::close(lfd);
    if (err) std::rethrow_exception(err);
    if (prev_fd < 0) throw std::runtime_error("transport: accept failed");

    u64 hello = 0;
    read_all(prev_fd, &hello, 8);
    if (hello != u64((party + 2) % 3)) {
        ::close(prev_fd);
        ::close(next_fd);
        throw std::runtime_error("transport: unexpected peer identity");
    }

    PartyChannels out;
    out.next = std::make_unique<TcpChannel>(next_fd);
    out.prev = std::make_unique<TcpChannel>(prev_fd);
    return out;
}

} // namespace secdt::mpc3
