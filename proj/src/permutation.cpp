#include "elsv/permutation.hpp"

#include "elsv/error.hpp"

#include <algorithm>

namespace elsv {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
            fail(ErrorCode::invalid_argument, "not a permutation");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        im[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int d, int a, int b) {
    auto p = identity(d);
    std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
    return p;
}

Permutation Permutation::canonical(const Partition& cycle_type) {
    std::vector<int> im;
    int start = 0;
    for (int len : cycle_type.parts()) {
        for (int k = 0; k < len; ++k)
            im.push_back(start + (k + 1) % len);
        start += len;
    }
    return Permutation(std::move(im));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        fail(ErrorCode::dimension_mismatch, "composing permutations of different degree");
    std::vector<int> im(q.images_.size());
    for (std::size_t x = 0; x < im.size(); ++x)
        im[x] = p.images_[static_cast<std::size_t>(q.images_[x])];
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < im.size(); ++x)
        im[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    Permutation out;
    out.images_ = std::move(im);
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lens;
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (seen[x])
            continue;
        int len = 0;
        for (std::size_t y = x; !seen[y]; y = static_cast<std::size_t>(images_[y])) {
            seen[y] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

int Permutation::cycle_count() const { return cycle_type().length(); }

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != static_cast<int>(x))
            return false;
    return true;
}

std::vector<std::pair<int, int>> transposition_pairs(int d) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            out.emplace_back(a, b);
    return out;
}

std::uint32_t rank(const Permutation& p) {
    const int d = p.degree();
    std::uint32_t r = 0;
    for (int i = 0; i < d; ++i) {
        std::uint32_t smaller = 0;
        for (int j = i + 1; j < d; ++j)
            if (p(j) < p(i))
                ++smaller;
        r = r * static_cast<std::uint32_t>(d - i) + smaller;
    }
    return r;
}

Permutation unrank(int d, std::uint32_t index) {
    std::vector<int> digits(static_cast<std::size_t>(d));
    for (int i = d - 1; i >= 0; --i) {
        auto base = static_cast<std::uint32_t>(d - i);
        digits[static_cast<std::size_t>(i)] = static_cast<int>(index % base);
        index /= base;
    }
    std::vector<int> pool(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        pool[static_cast<std::size_t>(i)] = i;
    std::vector<int> im;
    im.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto it = pool.begin() + digits[static_cast<std::size_t>(i)];
        im.push_back(*it);
        pool.erase(it);
    }
    return Permutation(std::move(im));
}

} // namespace elsv
