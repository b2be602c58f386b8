//---------------------------------*-C++-*-----------------------------------//
//! \file mobsense/random.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mobsense
{
//---------------------------------------------------------------------------//
//! Random engine used by every stochastic operation.
using Rng = std::mt19937_64;

//---------------------------------------------------------------------------//
//! SplitMix64 finalizer: a bijective 64-bit avalanche mix.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

//---------------------------------------------------------------------------//
/*!
 * Derive a stream seed from a master seed and a tuple of counters.
 *
 * Each counter is folded in with a SplitMix64 round, so the result depends
 * only on (master, counters...) and never on evaluation order of the callers.
 * Different counter tuples give statistically unrelated engine seeds.
 */
constexpr std::uint64_t
derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> counters)
{
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t c : counters)
    {
        h = splitmix64(h ^ splitmix64(c + 0x632be59bd9b4e019ULL));
    }
    return h;
}

//! Construct an engine for the stream identified by (master, counters...).
inline Rng
make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> counters)
{
    return Rng{derive_seed(master, counters)};
}

//---------------------------------------------------------------------------//
}  // namespace mobsense
