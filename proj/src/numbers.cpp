#include "pinnacle/numbers.hpp"

#include <mutex>

#include "pinnacle/errors.hpp"

namespace pinnacle {

Count pow2(int k) {
    if (k < 0) throw input_error("pow2: negative exponent");
    return Count(1) << k;
}

Count factorial(int n) {
    if (n < 0) throw input_error("factorial: negative argument");
    Count r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Count binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i; // exact at every step: r is C(n-k+i, i)
    }
    return r;
}

Count catalan(int d) {
    if (d < 0) throw input_error("catalan: negative argument");
    return binomial(2 * d, d) / (d + 1);
}

Count StirlingTable::at(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    while (static_cast<int>(rows_.size()) <= n) {
        int r = static_cast<int>(rows_.size());
        std::vector<Count> row(r + 1);
        if (r == 0) {
            row[0] = 1;
        } else {
            row[0] = 0;
            for (int j = 1; j <= r; ++j) {
                Count same = (j <= r - 1) ? rows_[r - 1][j] : Count(0);
                row[j] = Count(j) * same + rows_[r - 1][j - 1];
            }
        }
        rows_.push_back(std::move(row));
    }
    return rows_[n][k];
}

Count stirling2(int n, int k) {
    static StirlingTable table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return table.at(n, k);
}

} // namespace pinnacle
