#include "secdt/mpc3/sim3.hpp"

#include <array>
#include <thread>

namespace secdt::mpc3 {

void run_sim3(RingConfig ring, u64 seed,
              const std::function<void(Abb& abb, int party)>& body) {
    auto mesh = make_local_mesh();
    std::array<std::exception_ptr, 3> errors{};
    std::array<std::thread, 3> threads;
    for (int p = 0; p < 3; ++p) {
        threads[p] = std::thread([&, p] {
            try {
                Mpc3Abb abb(ring, p, *mesh[p].next, *mesh[p].prev, seed);
                body(abb, p);
            } catch (...) {
                errors[p] = std::current_exception();
            }
            mesh[p].next->close();
            mesh[p].prev->close();
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace secdt::mpc3
