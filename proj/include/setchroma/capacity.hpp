#pragma once

#include <cstdint>
#include <string_view>

namespace setchroma {

/// Bell(12): the largest set-partition enumeration allowed by default.
inline constexpr std::uint64_t kDefaultLatticeCapacity = 4213597;

/// 2^24 states for brute-force oracles and gain-graph enumeration.
inline constexpr std::uint64_t kDefaultEnumerationCapacity = std::uint64_t{1} << 24;

inline constexpr const char* kCapacityEnvVar = "SETCHROMA_CAPACITY";

/// Returns the state budget: the value of SETCHROMA_CAPACITY when set,
/// otherwise `fallback`. A malformed override throws DomainError.
std::uint64_t capacity_limit(std::uint64_t fallback);

/// Throws CapacityError if `states` exceeds capacity_limit(fallback).
void require_capacity(long double states, std::uint64_t fallback, std::string_view what);

}  // namespace setchroma
