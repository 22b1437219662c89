#include "elsv/partitions.hpp"

#include "elsv/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace elsv {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            fail(ErrorCode::invalid_argument, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorCode::invalid_argument, "partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::column(int d) { return Partition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

Partition Partition::row(int d) { return d == 0 ? Partition() : Partition({d}); }

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    if (parts_.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

bool Partition::is_submultiset_of(const Partition& other) const {
    return std::includes(other.parts_.begin(), other.parts_.end(), parts_.begin(), parts_.end(),
                         std::greater<>());
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
    for (int p : parts_)
        ++m[static_cast<std::size_t>(p)];
    return m;
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out,
               int length) {
    if (remaining == 0) {
        if (length < 0 || static_cast<int>(prefix.size()) == length)
            out.emplace_back(prefix);
        return;
    }
    if (length >= 0) {
        int slots = length - static_cast<int>(prefix.size());
        if (slots <= 0 || remaining > slots * max_part || remaining < slots)
            return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out, length);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0)
        fail(ErrorCode::invalid_argument, "partitions_of: d must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate(d, d, prefix, out, -1);
    return out;
}

std::vector<Partition> partitions_of(int d, int length) {
    if (d < 0 || length < 0)
        fail(ErrorCode::invalid_argument, "partitions_of: d and length must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    if (d == 0) {
        if (length == 0)
            out.emplace_back();
        return out;
    }
    enumerate(d, d, prefix, out, length);
    return out;
}

std::vector<Partition> submultisets(const Partition& mu) {
    // Distinct values with multiplicities, largest first.
    std::vector<std::pair<int, int>> groups;
    for (int p : mu.parts()) {
        if (groups.empty() || groups.back().first != p)
            groups.emplace_back(p, 0);
        ++groups.back().second;
    }
    std::vector<Partition> out;
    std::vector<int> prefix;
    std::function<void(std::size_t)> rec = [&](std::size_t gi) {
        if (gi == groups.size()) {
            out.emplace_back(prefix);
            return;
        }
        auto [value, mult] = groups[gi];
        for (int k = 0; k <= mult; ++k) {
            rec(gi + 1);
            prefix.push_back(value);
        }
        prefix.resize(prefix.size() - static_cast<std::size_t>(mult) - 1);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt aut_size(const Partition& mu) {
    BigInt out = 1;
    for (int m : mu.multiplicities())
        out *= factorial(static_cast<unsigned>(m));
    return out;
}

BigInt z(const Partition& mu) {
    BigInt out = aut_size(mu);
    for (int p : mu.parts())
        out *= p;
    return out;
}

long kappa(const Partition& nu) {
    long k = 0;
    for (int i = 0; i < nu.length(); ++i) {
        long p = nu[static_cast<std::size_t>(i)];
        k += p * (p - 2 * (i + 1) + 1);
    }
    return k;
}

BigInt class_size(const Partition& mu) {
    BigInt out = factorial(static_cast<unsigned>(mu.size()));
    out /= z(mu);
    return out;
}

std::string to_string(const Partition& mu) {
    std::string out;
    for (std::size_t i = 0; i < mu.parts().size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(mu[i]);
    }
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    if (text.empty())
        return {};
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!tok.empty() && tok.front() == ' ')
            tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ')
            tok.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
            fail(ErrorCode::parse_error, "malformed partition '" + std::string(text) +
                                             "': parts must be positive integers separated by commas");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition::from_unsorted(std::move(parts));
}

} // namespace elsv
