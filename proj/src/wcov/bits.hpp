#ifndef WCOV_BITS_HPP
#define WCOV_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace wcov {

// Fixed-size bitset with a runtime width. Used for adjacency rows in the
// clique/independent-set enumerator and for achievable-size sets in DPs.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    int lowest() const {  // -1 when empty
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i << 6) + std::countr_zero(w_[i]);
        return -1;
    }

    int highest() const {  // -1 when empty
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return int(i << 6) + 63 - std::countl_zero(w_[i]);
        return -1;
    }

    Bits& operator|=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    Bits and_not(const Bits& o) const {
        Bits r(*this);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    // this |= (o << k); widths must allow it (caller sized this accordingly).
    void or_shifted(const Bits& o, int k) {
        const int word = k >> 6, off = k & 63;
        for (size_t i = o.w_.size(); i-- > 0;) {
            uint64_t x = o.w_[i];
            if (!x) continue;
            size_t j = i + size_t(word);
            if (off == 0) {
                if (j < w_.size()) w_[j] |= x;
            } else {
                if (j < w_.size()) w_[j] |= x << off;
                if (j + 1 < w_.size()) w_[j + 1] |= x >> (64 - off);
            }
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t x = w_[i];
            while (x) {
                int b = std::countr_zero(x);
                f(int(i << 6) + b);
                x &= x - 1;
            }
        }
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace wcov

#endif
