#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace partpeaks {

// The family P_{n,k}: set partitions of [n] with exactly k blocks, handled
// throughout via their canonical restricted-growth strings.
struct PartitionClass {
    int n = 0;
    int k = 0;

    PartitionClass(int ground_size, int block_count) : n(ground_size), k(block_count) {
        if (n < 0 || k < 0 || k > n)
            throw std::invalid_argument("PartitionClass: need 0 <= k <= n");
    }
};

// Streams the restricted-growth strings of P_{n,k} (maximum letter exactly k)
// in lexicographic order.  State is O(n) no matter how many words the class
// contains, so arbitrarily large classes can be consumed one word at a time.
class RgsGenerator {
public:
    explicit RgsGenerator(PartitionClass cls) : RgsGenerator(cls, std::span<const int>{}) {}

    // Restricts the stream to words starting with the given letters.  The
    // prefix must satisfy the restricted-growth property; a prefix that no
    // word of the class extends yields an empty stream.
    RgsGenerator(PartitionClass cls, std::span<const int> prefix)
        : n_(cls.n), k_(cls.k), fixed_(prefix.size()), prefix_max_(cls.n + 1, 0) {
        if (fixed_ > static_cast<std::size_t>(n_))
            throw std::invalid_argument("RgsGenerator: prefix longer than the words");
        letters_.assign(prefix.begin(), prefix.end());
        letters_.resize(n_);
        int m = 0;
        for (std::size_t i = 0; i < fixed_; ++i) {
            const int ell = letters_[i];
            if (ell < 1 || ell > m + 1)
                throw std::invalid_argument("RgsGenerator: prefix violates restricted growth");
            m = std::max(m, ell);
            prefix_max_[i + 1] = m;
        }
        if (m > k_ || !fill_smallest(fixed_)) done_ = true;
    }

    bool done() const noexcept { return done_; }

    // The current word; valid until the next advance().
    const std::vector<int>& current() const {
        if (done_) throw std::logic_error("RgsGenerator: stream exhausted");
        return letters_;
    }

    void advance() {
        if (done_) return;
        for (std::size_t i = static_cast<std::size_t>(n_); i-- > fixed_;) {
            const int m = prefix_max_[i];
            const int cap = std::min(m + 1, k_);
            const int rest = n_ - 1 - static_cast<int>(i);
            for (int ell = letters_[i] + 1; ell <= cap; ++ell) {
                if (std::max(m, ell) + rest >= k_) {
                    letters_[i] = ell;
                    prefix_max_[i + 1] = std::max(m, ell);
                    const bool ok = fill_smallest(i + 1);
                    assert(ok);
                    (void)ok;
                    return;
                }
            }
        }
        done_ = true;
    }

private:
    int n_;
    int k_;
    std::size_t fixed_;
    bool done_ = false;
    std::vector<int> letters_;
    std::vector<int> prefix_max_;  // prefix_max_[i] = max of letters_[0..i-1]

    // Completes positions [from, n) with the lexicographically smallest
    // feasible letters; false when max letter exactly k is unreachable.
    bool fill_smallest(std::size_t from) {
        for (std::size_t i = from; i < static_cast<std::size_t>(n_); ++i) {
            const int m = prefix_max_[i];
            const int need = k_ - m;                     // letters the maximum must still grow by
            const int rem = n_ - static_cast<int>(i);    // positions left, this one included
            if (need > rem) return false;
            const int ell = (need == rem) ? m + 1 : 1;
            if (ell > k_) return false;
            letters_[i] = ell;
            prefix_max_[i + 1] = std::max(m, ell);
        }
        return prefix_max_[n_] == k_;
    }
};

// All depth-long prefixes extendable to a word of the class, lexicographically
// ordered; the per-prefix streams concatenate to exactly the unsplit stream.
// Depth is clamped to [0, n].
inline std::vector<std::vector<int>> split_prefixes(PartitionClass cls, int depth) {
    const int d = std::clamp(depth, 0, cls.n);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(d);
    auto rec = [&](auto&& self, int i, int m) -> void {
        if (i == d) {
            out.push_back(cur);
            return;
        }
        const int cap = std::min(m + 1, cls.k);
        const int rest = cls.n - 1 - i;
        for (int ell = 1; ell <= cap; ++ell)
            if (std::max(m, ell) + rest >= cls.k) {
                cur[i] = ell;
                self(self, i + 1, std::max(m, ell));
            }
    };
    if (cls.n > 0 && cls.k == 0) return out;  // empty class, no prefixes
    rec(rec, 0, 0);
    return out;
}

}  // namespace partpeaks
