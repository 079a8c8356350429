#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace revenge {

// Permutation of {0, ..., degree-1}, stored as the image array.
// Values are immutable after construction.
class Permutation {
public:
    Permutation() = default;  // degree 0
    explicit Permutation(int degree) : images_(static_cast<std::size_t>(degree)) {
        std::iota(images_.begin(), images_.end(), 0);
    }

    static Permutation identity(int degree) { return Permutation(degree); }

    static Permutation from_images(std::vector<int> images) {
        const int n = static_cast<int>(images.size());
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("permutation images are not a bijection");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    // Convenience for tests and fixtures: disjointness is not required,
    // cycles are applied left to right.
    static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
        Permutation p(degree);
        for (const auto& cyc : cycles) {
            Permutation c(degree);
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                int from = cyc[k];
                int to = cyc[(k + 1) % cyc.size()];
                if (from < 0 || from >= degree || to < 0 || to >= degree)
                    throw std::invalid_argument("cycle point out of range");
                c.images_[static_cast<std::size_t>(from)] = to;
            }
            from_images(c.images_);  // validates
            p = p.then(c);
        }
        return p;
    }

    int degree() const { return static_cast<int>(images_.size()); }

    int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }

    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return false;
        return true;
    }

    // -1 when this is the identity.
    int min_moved_point() const {
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) return i;
        return -1;
    }

    int moved_count() const {
        int n = 0;
        for (int i = 0; i < degree(); ++i)
            if (images_[static_cast<std::size_t>(i)] != i) ++n;
        return n;
    }

    Permutation inverse() const {
        Permutation r;
        r.images_.resize(images_.size());
        for (int i = 0; i < degree(); ++i)
            r.images_[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
        return r;
    }

    // this first, then q.
    Permutation then(const Permutation& q) const {
        if (degree() != q.degree())
            throw std::invalid_argument("degree mismatch: " + std::to_string(degree()) +
                                        " vs " + std::to_string(q.degree()));
        Permutation r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            r.images_[i] = q.images_[static_cast<std::size_t>(images_[i])];
        return r;
    }

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> images_;
};

// compose(p, q) applies p first, then q.
inline Permutation compose(const Permutation& p, const Permutation& q) { return p.then(q); }

inline Permutation pow(const Permutation& p, long long exponent) {
    Permutation base = exponent < 0 ? p.inverse() : p;
    unsigned long long e =
        exponent < 0 ? static_cast<unsigned long long>(-(exponent + 1)) + 1ULL
                     : static_cast<unsigned long long>(exponent);
    Permutation r = Permutation::identity(p.degree());
    while (e > 0) {
        if (e & 1ULL) r = r.then(base);
        base = base.then(base);
        e >>= 1ULL;
    }
    return r;
}

// Disjoint cycles over moved points only; each starts at its minimum point,
// sorted by first point.
inline std::vector<std::vector<int>> cycles(const Permutation& p) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[static_cast<std::size_t>(i)] || p(i) == i) continue;
        std::vector<int> cyc;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            cyc.push_back(j);
            j = p(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

inline int sign(const Permutation& p) {
    int transpositions = 0;
    for (const auto& cyc : cycles(p)) transpositions += static_cast<int>(cyc.size()) - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

// Least k >= 1 with p^k = id: lcm of the cycle lengths.
inline std::uint64_t order(const Permutation& p) {
    std::uint64_t ord = 1;
    for (const auto& cyc : cycles(p)) ord = std::lcm(ord, static_cast<std::uint64_t>(cyc.size()));
    return ord;
}

inline std::vector<int> support(const Permutation& p) {
    std::vector<int> pts;
    for (int i = 0; i < p.degree(); ++i)
        if (p(i) != i) pts.push_back(i);
    return pts;
}

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int v : p.images()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace revenge
