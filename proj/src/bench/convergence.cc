/*******************************************************************************
 * @file:   convergence.cc
 * @brief:  Convergence curves: running minima, time normalization and the
 *          event based geometric mean over instances.
 ******************************************************************************/
#include "nodesep/bench/convergence.h"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "nodesep/errors.h"

namespace nodesep {
namespace {
void require_sorted(std::span<const CurvePoint> sequence) {
  for (std::size_t i = 1; i < sequence.size(); ++i) {
    if (sequence[i].t < sequence[i - 1].t) {
      throw InvalidArgument("sequence is not sorted by time");
    }
  }
}

double geometric_mean(std::span<const double> values) {
  if (values.size() == 1) {
    return values.front();
  }
  long double product = 1.0L;
  for (const double value : values) {
    product *= value;
  }
  return static_cast<double>(std::pow(product, 1.0L / static_cast<long double>(values.size())));
}
} // namespace

std::vector<CurvePoint> min_prefix(std::span<const CurvePoint> sequence) {
  require_sorted(sequence);
  std::vector<CurvePoint> result(sequence.begin(), sequence.end());
  for (std::size_t i = 1; i < result.size(); ++i) {
    result[i].size = std::min(result[i].size, result[i - 1].size);
  }
  return result;
}

std::vector<CurvePoint> normalize(std::span<const CurvePoint> sequence, const double t_instance) {
  if (!(t_instance > 0.0)) {
    throw InvalidArgument("normalization time must be positive");
  }
  std::vector<CurvePoint> result(sequence.begin(), sequence.end());
  for (CurvePoint &point : result) {
    point.t /= t_instance;
  }
  return result;
}

std::vector<CurvePoint> event_geomean(const std::map<std::string, std::vector<CurvePoint>> &per_instance) {
  struct Labelled {
    double t;
    std::size_t instance;
    std::size_t index;
    double size;
  };

  std::vector<double> current;
  std::vector<Labelled> merged;
  for (const auto &[name, sequence] : per_instance) {
    if (sequence.empty()) {
      throw InvalidArgument("instance " + name + " has no events");
    }
    require_sorted(sequence);
    const std::size_t instance = current.size();
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      if (!(sequence[i].size > 0.0)) {
        throw InvalidArgument("instance " + name + " has a non-positive size");
      }
      merged.push_back({sequence[i].t, instance, i, sequence[i].size});
    }
    current.push_back(sequence.front().size);
  }
  std::sort(merged.begin(), merged.end(), [](const Labelled &a, const Labelled &b) {
    return std::tie(a.t, a.instance, a.index) < std::tie(b.t, b.instance, b.index);
  });

  std::vector<CurvePoint> curve;
  curve.reserve(merged.size());
  for (const Labelled &event : merged) {
    current[event.instance] = event.size;
    curve.push_back({event.t, geometric_mean(current)});
  }
  return curve;
}

std::vector<CurvePoint> average_repetitions(const std::vector<std::vector<CurvePoint>> &repetitions) {
  if (repetitions.empty()) {
    return {};
  }
  std::size_t length = repetitions.front().size();
  for (const auto &repetition : repetitions) {
    length = std::min(length, repetition.size());
  }
  std::vector<CurvePoint> result(length);
  for (std::size_t i = 0; i < length; ++i) {
    for (const auto &repetition : repetitions) {
      result[i].t += repetition[i].t;
      result[i].size += repetition[i].size;
    }
    result[i].t /= static_cast<double>(repetitions.size());
    result[i].size /= static_cast<double>(repetitions.size());
  }
  return result;
}

std::vector<CurvePoint> event_sequence(std::span<const Event> events) {
  std::vector<CurvePoint> sequence;
  sequence.reserve(events.size());
  for (const Event &event : events) {
    sequence.push_back({event.t, static_cast<double>(event.size)});
  }
  std::stable_sort(sequence.begin(), sequence.end(),
                   [](const CurvePoint &a, const CurvePoint &b) { return a.t < b.t; });
  return sequence;
}
} // namespace nodesep
