/*******************************************************************************
 * @file:   convergence.h
 * @brief:  Convergence curves: running minima, time normalization and the
 *          event based geometric mean over instances.
 ******************************************************************************/
#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodesep/island/island.h"

namespace nodesep {
struct CurvePoint {
  double t = 0.0;
  double size = 0.0;

  friend bool operator==(const CurvePoint &, const CurvePoint &) = default;
};

/// Running minimum of the sizes. Throws InvalidArgument if not sorted by t.
std::vector<CurvePoint> min_prefix(std::span<const CurvePoint> sequence);

/// Divides every timestamp by t_instance. Throws InvalidArgument unless
/// t_instance > 0.
std::vector<CurvePoint> normalize(std::span<const CurvePoint> sequence, double t_instance);

/// Merges all sequences by time; each event replaces its instance's value and
/// emits the geometric mean over all instances. Before its first event an
/// instance contributes its first value. Throws InvalidArgument on empty or
/// unsorted sequences and on non-positive sizes.
std::vector<CurvePoint> event_geomean(const std::map<std::string, std::vector<CurvePoint>> &per_instance);

/// Element-wise arithmetic mean of (t, size) over repetitions, truncated to
/// the shortest repetition.
std::vector<CurvePoint> average_repetitions(const std::vector<std::vector<CurvePoint>> &repetitions);

/// (t, size) of every event, in time order.
std::vector<CurvePoint> event_sequence(std::span<const Event> events);
} // namespace nodesep
