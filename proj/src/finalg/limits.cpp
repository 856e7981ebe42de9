#include "finalg/limits.hpp"

#include <cstdlib>
#include <string>

namespace finalg {

const Limits& Limits::defaults() {
    static const Limits instance = [] {
        Limits lim;
        if (const char* env = std::getenv("FINALG_MAX_GENERATED")) {
            try {
                long long v = std::stoll(env);
                if (v > 0) lim.max_generated = v;
            } catch (...) {
                // ignore malformed values, keep the default
            }
        }
        return lim;
    }();
    return instance;
}

}  // namespace finalg
