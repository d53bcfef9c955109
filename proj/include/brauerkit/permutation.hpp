#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "brauerkit/error.hpp"

namespace brauerkit {

using Point = std::uint32_t;
using Index = std::uint32_t;

/// A bijection on {0, ..., degree-1}. Products compose right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (Point p : images_) {
            if (p >= images_.size() || seen[p])
                throw Error(Errc::DegreeMismatch, "images do not form a bijection");
            seen[p] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        std::vector<Point> im(degree);
        std::iota(im.begin(), im.end(), Point{0});
        return Permutation(std::move(im), Unchecked{});
    }

    /// Builds a permutation from disjoint-cycle notation such as "(0 1 2)(3 4)".
    /// Points missing from the text are fixed; "()" is the identity.
    static Permutation from_cycles(std::size_t degree, std::string_view text) {
        std::vector<Point> im(degree);
        std::iota(im.begin(), im.end(), Point{0});
        std::vector<bool> used(degree, false);
        std::size_t i = 0;
        auto skip_ws = [&] {
            while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
        };
        skip_ws();
        while (i < text.size()) {
            if (text[i] != '(')
                throw Error(Errc::ParseError, "expected '(' at offset " + std::to_string(i));
            ++i;
            std::vector<Point> cycle;
            for (;;) {
                skip_ws();
                if (i >= text.size())
                    throw Error(Errc::ParseError, "unterminated cycle");
                if (text[i] == ')') {
                    ++i;
                    break;
                }
                if (text[i] == ',') {
                    ++i;
                    continue;
                }
                if (text[i] < '0' || text[i] > '9')
                    throw Error(Errc::ParseError,
                                "unexpected character in cycle at offset " + std::to_string(i));
                std::size_t v = 0;
                while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + std::size_t(text[i++] - '0');
                if (v >= degree)
                    throw Error(Errc::DegreeMismatch,
                                "point " + std::to_string(v) + " outside degree " + std::to_string(degree));
                if (used[v]) throw Error(Errc::ParseError, "point " + std::to_string(v) + " repeated");
                used[v] = true;
                cycle.push_back(Point(v));
            }
            for (std::size_t k = 0; k < cycle.size(); ++k) im[cycle[k]] = cycle[(k + 1) % cycle.size()];
            skip_ws();
        }
        return Permutation(std::move(im), Unchecked{});
    }

    std::size_t degree() const noexcept { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    std::span<const Point> images() const noexcept { return images_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.degree() != b.degree()) throw Error(Errc::DegreeMismatch, "composing permutations of different degree");
        std::vector<Point> im(a.degree());
        for (std::size_t x = 0; x < im.size(); ++x) im[x] = a.images_[b.images_[x]];
        return Permutation(std::move(im), Unchecked{});
    }

    Permutation inverse() const {
        std::vector<Point> im(images_.size());
        for (std::size_t x = 0; x < im.size(); ++x) im[images_[x]] = Point(x);
        return Permutation(std::move(im), Unchecked{});
    }

    /// Disjoint cycle notation, fixed points omitted; identity renders as "()".
    std::string to_cycles() const {
        std::ostringstream os;
        std::vector<bool> seen(images_.size(), false);
        bool any = false;
        for (Point s = 0; s < images_.size(); ++s) {
            if (seen[s] || images_[s] == s) continue;
            any = true;
            os << '(';
            Point x = s;
            bool first = true;
            while (!seen[x]) {
                seen[x] = true;
                if (!first) os << ' ';
                os << x;
                first = false;
                x = images_[x];
            }
            os << ')';
        }
        if (!any) os << "()";
        return os.str();
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

    std::vector<Point> images_;
};

/// Dynamic bitset over the element indices of a group.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

    static ElementSet from_indices(std::size_t universe, std::span<const Index> idx) {
        ElementSet s(universe);
        for (Index i : idx) s.insert(i);
        return s;
    }

    std::size_t universe() const noexcept { return size_; }

    bool contains(Index i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void insert(Index i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += std::size_t(std::popcount(w));
        return c;
    }

    bool subset_of(const ElementSet& other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    ElementSet operator&(const ElementSet& o) const {
        ElementSet r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & o.words_[k];
        return r;
    }

    std::vector<Index> indices() const {
        std::vector<Index> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w) {
                out.push_back(Index(k * 64 + std::size_t(std::countr_zero(w))));
                w &= w - 1;
            }
        }
        return out;
    }

    /// Lexicographic comparison of the sorted index lists.
    friend bool key_less(const ElementSet& a, const ElementSet& b) noexcept {
        for (std::size_t k = 0; k < a.words_.size(); ++k) {
            auto diff = a.words_[k] ^ b.words_[k];
            if (!diff) continue;
            auto bit = std::uint64_t{1} << std::countr_zero(diff);
            if (a.words_[k] & bit) {
                // a has the smaller next element unless b has already ended.
                return b.has_bits_from(k, bit);
            }
            return !a.has_bits_from(k, bit);
        }
        return false;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    std::size_t hash() const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto w : words_) h = (h ^ std::size_t(w)) * 1099511628211ull;
        return h;
    }

private:
    bool has_bits_from(std::size_t k, std::uint64_t bit) const noexcept {
        if (words_[k] & ~(bit - 1)) return true;
        for (std::size_t j = k + 1; j < words_.size(); ++j)
            if (words_[j]) return true;
        return false;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

} // namespace brauerkit
