#pragma once

#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>

namespace cyclight {

/// Incremental 64-bit FNV-1a, used for state hashes and trace identities.
class Fnv1a {
  public:
    void add_bytes(const void* data, std::size_t size) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < size; ++i) {
            hash_ ^= p[i];
            hash_ *= 0x00000100000001b3ull;
        }
    }

    template <typename T>
    void add(const T& value) {
        static_assert(std::is_trivially_copyable_v<T>);
        add_bytes(&value, sizeof(value));
    }

    void add(std::string_view s) { add_bytes(s.data(), s.size()); }

    std::uint64_t value() const { return hash_; }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

inline std::uint64_t fnv1a(std::string_view s) {
    Fnv1a h;
    h.add(s);
    return h.value();
}

std::string to_hex(std::uint64_t v);

}  // namespace cyclight
