#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "percograph/rng.hpp"

namespace percograph {

// Open-addressing hash set of packed edge keys (min(u,v) << 32 | max(u,v)).
// The switch chain does two membership probes per attempted switch and two
// erase/insert pairs per applied one, so this sits on the hottest path of
// every sampler run; a flat table with linear probing beats the node-based
// standard containers by a wide margin there.  Deletions leave tombstones,
// and the table rehashes once tombstones outnumber live keys.
class EdgeKeySet {
    static constexpr std::uint64_t kEmpty = ~0ULL;
    static constexpr std::uint64_t kTombstone = ~0ULL - 1;

public:
    EdgeKeySet() = default;

    static std::uint64_t pack(int u, int v) {
        const std::uint64_t lo = static_cast<std::uint32_t>(u < v ? u : v);
        const std::uint64_t hi = static_cast<std::uint32_t>(u < v ? v : u);
        return (lo << 32) | hi;
    }

    void reserve(std::size_t count) {
        std::size_t cap = 16;
        while (cap * 2 < count * 3) cap <<= 1; // load factor <= 2/3
        if (cap > capacity()) rehash(cap);
    }

    bool contains(std::uint64_t key) const {
        if (slots_.empty()) return false;
        std::size_t i = index_of(key);
        while (true) {
            const std::uint64_t s = slots_[i];
            if (s == key) return true;
            if (s == kEmpty) return false;
            i = (i + 1) & mask_;
        }
    }

    // Returns false if the key was already present.
    bool insert(std::uint64_t key) {
        if (slots_.empty() || (size_ + tombstones_ + 1) * 3 > capacity() * 2)
            rehash(capacity() ? capacity() * 2 : 16);
        std::size_t i = index_of(key);
        std::size_t target = SIZE_MAX;
        while (true) {
            const std::uint64_t s = slots_[i];
            if (s == key) return false;
            if (s == kTombstone && target == SIZE_MAX) target = i;
            if (s == kEmpty) {
                if (target == SIZE_MAX) target = i;
                else --tombstones_; // reusing a tombstone slot
                slots_[target] = key;
                ++size_;
                return true;
            }
            i = (i + 1) & mask_;
        }
    }

    // Returns false if the key was absent.
    bool erase(std::uint64_t key) {
        if (slots_.empty()) return false;
        std::size_t i = index_of(key);
        while (true) {
            const std::uint64_t s = slots_[i];
            if (s == key) {
                slots_[i] = kTombstone;
                --size_;
                ++tombstones_;
                if (tombstones_ > size_ + 16) rehash(preferred_capacity());
                return true;
            }
            if (s == kEmpty) return false;
            i = (i + 1) & mask_;
        }
    }

    std::size_t size() const { return size_; }
    std::size_t capacity() const { return slots_.size(); }
    void clear() { slots_.clear(); mask_ = 0; size_ = 0; tombstones_ = 0; }

private:
    std::size_t index_of(std::uint64_t key) const {
        return static_cast<std::size_t>(splitmix64(key)) & mask_;
    }

    std::size_t preferred_capacity() const {
        std::size_t cap = 16;
        while (cap * 2 < (size_ + 1) * 3) cap <<= 1;
        return cap;
    }

    void rehash(std::size_t new_capacity) {
        assert((new_capacity & (new_capacity - 1)) == 0);
        std::vector<std::uint64_t> old = std::move(slots_);
        slots_.assign(new_capacity, kEmpty);
        mask_ = new_capacity - 1;
        tombstones_ = 0;
        size_ = 0;
        for (std::uint64_t key : old)
            if (key != kEmpty && key != kTombstone) insert(key);
    }

    std::vector<std::uint64_t> slots_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
    std::size_t tombstones_ = 0;
};

} // namespace percograph
