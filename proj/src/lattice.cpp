#include "equiblow/lattice.hpp"

#include <numeric>

namespace equiblow {

namespace {

using ZMatrix = std::vector<std::vector<Integer>>;

ZMatrix widen(const IntMatrix& a, std::size_t cols) {
    ZMatrix z;
    for (const auto& r : a) {
        if (r.size() != cols) throw PreconditionError("integer matrix: ragged row");
        std::vector<Integer> row;
        for (long x : r) row.emplace_back(x);
        z.push_back(std::move(row));
    }
    return z;
}

IntMatrix narrow(const ZMatrix& z) {
    IntMatrix out;
    for (const auto& r : z) {
        IntRow row;
        for (const auto& x : r) {
            if (!x.fits_slong_p()) throw UnsupportedError("lattice entry exceeds machine integers");
            row.push_back(x.get_si());
        }
        out.push_back(std::move(row));
    }
    return out;
}

ZMatrix hermite(ZMatrix a, std::size_t cols) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        // Euclid down the column until a single nonzero entry remains.
        for (;;) {
            std::size_t best = a.size();
            for (std::size_t i = row; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                if (best == a.size() || abs(a[i][col]) < abs(a[best][col])) best = i;
            }
            if (best == a.size()) break;
            std::swap(a[row], a[best]);
            bool done = true;
            for (std::size_t i = row + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[row][j];
                if (a[i][col] != 0) done = false;
            }
            if (done) break;
        }
        if (row >= a.size() || a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (auto& x : a[row]) x = -x;
        for (std::size_t i = 0; i < row; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[i][col].get_mpz_t(), a[row][col].get_mpz_t());
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[row][j];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

}  // namespace

IntMatrix hermite_rows(const IntMatrix& rows, std::size_t cols) { return narrow(hermite(widen(rows, cols), cols)); }

IntMatrix integer_kernel(const IntMatrix& a, std::size_t cols) {
    // Row-reduce [a^T | I]; rows whose a^T part vanishes give the kernel,
    // and unimodularity of the transform makes that basis saturated.
    const std::size_t m = a.size();
    ZMatrix aug(cols, std::vector<Integer>(m + cols));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < m; ++i) aug[j][i] = a[i].at(j);
        aug[j][m + j] = 1;
    }
    ZMatrix h = hermite(aug, m + cols);
    ZMatrix kernel;
    for (const auto& r : h) {
        bool zero = true;
        for (std::size_t i = 0; i < m && zero; ++i) zero = r[i] == 0;
        if (zero) kernel.emplace_back(r.begin() + static_cast<long>(m), r.end());
    }
    return narrow(hermite(kernel, cols));
}

bool is_primitive(const IntMatrix& rows, std::size_t cols) {
    // Saturated iff the lattice equals the double kernel (its saturation).
    IntMatrix h = hermite_rows(rows, cols);
    IntMatrix sat = integer_kernel(integer_kernel(h, cols), cols);
    return h == sat;
}

}  // namespace equiblow
