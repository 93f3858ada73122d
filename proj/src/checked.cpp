#include "floorsums/checked.hpp"
#include <cmath>

namespace fsum {

i64 isqrt_i64(i64 n) {
    if (n < 0) throw Error("isqrt of negative value");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::string i128_str(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // Careful: -INT128_MIN overflows, peel digits from the negative side.
    std::string s;
    i128 t = neg ? v : -v;
    while (t != 0) {
        int d = static_cast<int>(-(t % 10));
        s.push_back(static_cast<char>('0' + d));
        t /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

} // namespace fsum
