#pragma once

#include <atomic>

namespace chowlab {

// Dense enumeration works over 2^n points; beyond the cap only sampling
// paths are allowed. The LP oracle has its own, smaller cap.
inline constexpr int kDefaultCap = 20;
inline constexpr int kDefaultLpCap = 10;

namespace detail {
inline std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{kDefaultCap};
    return cap;
}
inline std::atomic<int>& lp_cap_storage() {
    static std::atomic<int> cap{kDefaultLpCap};
    return cap;
}
}  // namespace detail

inline int enumeration_cap() { return detail::cap_storage().load(); }
inline void set_enumeration_cap(int cap) { detail::cap_storage().store(cap); }

inline int lp_cap() { return detail::lp_cap_storage().load(); }
inline void set_lp_cap(int cap) { detail::lp_cap_storage().store(cap); }

}  // namespace chowlab
