/*******************************************************************************
 * @file:   definitions.h
 * @brief:  Basic identifier and weight types shared by all modules.
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace nodesep {
using NodeID = std::int32_t;
using EdgeID = std::int64_t;
using BlockID = std::int32_t;
using NodeWeight = std::int64_t;
using EdgeWeight = std::int64_t;

/// Pseudo random source used throughout the library; every randomized routine
/// takes one by reference so that a fixed seed yields identical results.
using Random = std::mt19937_64;

constexpr NodeID kInvalidNode = std::numeric_limits<NodeID>::max();
} // namespace nodesep
