#include "graphspark/parallel.hpp"

#include <cstdlib>
#include <string>

namespace graphspark {

int default_thread_count() {
    if (const char* env = std::getenv("GRAPHSPARK_THREADS")) {
        try {
            int t = std::stoi(env);
            return t < 1 ? 1 : t;
        } catch (...) {
            return 1;
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace graphspark
