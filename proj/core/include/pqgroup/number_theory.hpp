#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pqgroup::nt {

bool is_prime(std::uint64_t n) noexcept;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) noexcept;

// Euler's totient, by trial division.
std::uint64_t totient(std::uint64_t n) noexcept;

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace pqgroup::nt
