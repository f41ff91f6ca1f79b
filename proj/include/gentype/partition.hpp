#ifndef GENTYPE_PARTITION_HPP
#define GENTYPE_PARTITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"

namespace gentype {

/// Integer partition stored as weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
        parts_.erase(std::remove(parts_.begin(), parts_.end(), std::size_t{0}), parts_.end());
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }
    Partition(std::initializer_list<std::size_t> parts) : Partition(std::vector<std::size_t>(parts)) {}

    const std::vector<std::size_t>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    std::size_t largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    std::size_t size() const { return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0}); }

    /// part size -> number of parts of that size
    std::map<std::size_t, std::size_t> multiplicities() const {
        std::map<std::size_t, std::size_t> m;
        for (auto p : parts_) ++m[p];
        return m;
    }

    Partition conjugate() const {
        std::vector<std::size_t> c(largest(), 0);
        for (auto p : parts_) {
            for (std::size_t i = 0; i < p; ++i) ++c[i];
        }
        return Partition(std::move(c));
    }

    /// d copies of every part (written d*lambda).
    Partition replicated(std::size_t d) const {
        std::vector<std::size_t> v;
        for (auto p : parts_) v.insert(v.end(), d, p);
        return Partition(std::move(v));
    }

    /// every part multiplied by k (written lambda x k).
    Partition times(std::size_t k) const {
        std::vector<std::size_t> v = parts_;
        for (auto& p : v) p *= k;
        return Partition(std::move(v));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<std::size_t> parts_;
};

/// F(lambda) = sum_{j,k} min(j,k) m_j m_k.
inline std::size_t F_min_sum(const Partition& p) {
    const auto m = p.multiplicities();
    std::size_t total = 0;
    for (const auto& [j, mj] : m) {
        for (const auto& [k, mk] : m) total += std::min(j, k) * mj * mk;
    }
    return total;
}

/// Sum of squares of the parts of the conjugate partition.
inline std::size_t F_conjugate_squares(const Partition& p) {
    const Partition conj = p.conjugate();
    std::size_t total = 0;
    for (auto c : conj.parts()) total += c * c;
    return total;
}

inline std::size_t F_of_partition(const Partition& p) {
    const std::size_t f = F_min_sum(p);
    if (f != F_conjugate_squares(p)) fail(ErrorKind::Internal, "F(lambda) formulas disagree on " + p.to_string());
    return f;
}

/// mu is dominated by lambda: every prefix sum of mu is at most lambda's.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) {
        fail(ErrorKind::SizeMismatch, "dominance needs partitions of equal size: " + mu.to_string() + " vs " +
                                          lambda.to_string());
    }
    std::size_t a = 0, b = 0;
    const std::size_t len = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.length() ? mu.parts()[i] : 0;
        b += i < lambda.length() ? lambda.parts()[i] : 0;
        if (a > b) return false;
    }
    return true;
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t rest, std::size_t maxp) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::size_t p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace gentype

#endif  // GENTYPE_PARTITION_HPP
