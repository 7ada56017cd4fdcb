/*******************************************************************************
 * @file:   island.h
 * @brief:  Island model: asynchronous workers exchanging their best
 *          individuals by randomized rumor spreading.
 ******************************************************************************/
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nodesep/evolution/evolution.h"

namespace nodesep {
enum class EventKind { kCreate, kCombine, kMutate, kRecv };

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view name);

struct Event {
  double t = 0.0;
  NodeWeight size = 0;
  int pe = 0;
  EventKind kind = EventKind::kCreate;
};

/// One JSON object per line: {"t":..,"size":..,"pe":..,"kind":".."}.
void write_event_log(std::span<const Event> events, std::ostream &out);
std::vector<Event> read_event_log(std::istream &in);

struct Message {
  int sender = 0;
  Individual payload;
  double timestamp = 0.0;
};

class Mailbox {
public:
  virtual ~Mailbox() = default;
  virtual void send(int to, Message message) = 0;
  /// Removes and returns all pending messages of `pe` in arrival order.
  virtual std::vector<Message> drain(int pe) = 0;
};

/// Unbounded in-process queues, one per worker.
class InProcessMailbox : public Mailbox {
public:
  explicit InProcessMailbox(int pes);
  void send(int to, Message message) override;
  std::vector<Message> drain(int pe) override;

private:
  struct Inbox {
    std::mutex mutex;
    std::deque<Message> queue;
  };
  std::vector<std::unique_ptr<Inbox>> _inboxes;
};

/// Evolutionary operators used by a worker; stubbed in tests.
class Operators {
public:
  virtual ~Operators() = default;
  virtual Individual create(Random &rng) = 0;
  virtual Individual combine(const Individual &p, const Individual &c, Random &rng) = 0;
  virtual Individual mutate(const Individual &p, Random &rng) = 0;
  /// Checked on every received payload.
  [[nodiscard]] virtual bool feasible(const Individual &individual) const = 0;
};

class MultilevelOperators : public Operators {
public:
  MultilevelOperators(const Graph &graph, BlockID k, double epsilon, EvolutionConfig config);
  Individual create(Random &rng) override;
  Individual combine(const Individual &p, const Individual &c, Random &rng) override;
  Individual mutate(const Individual &p, Random &rng) override;
  [[nodiscard]] bool feasible(const Individual &individual) const override;

private:
  const Graph &_graph;
  BlockID _k;
  double _epsilon;
  EvolutionConfig _config;
};

/// ceil(log2(p)), 0 for p <= 1.
int rumor_rounds(int pes);

/// Per worker protocol state. A communication step consists of rumor_rounds(p)
/// rounds; each round first inserts incoming individuals, then sends the local
/// best to a uniformly chosen worker that has not received it yet. Improving
/// the local best makes all workers eligible again.
class PeState {
public:
  PeState(int pe_id, int pes, std::uint64_t seed, std::size_t capacity);

  [[nodiscard]] int pe_id() const { return _pe_id; }
  [[nodiscard]] int pes() const { return _pes; }
  [[nodiscard]] Population &population() { return _population; }
  [[nodiscard]] const Population &population() const { return _population; }
  [[nodiscard]] Random &rng() { return _rng; }
  [[nodiscard]] const std::vector<std::uint8_t> &best_sent_to() const { return _best_sent_to; }
  [[nodiscard]] int rounds_remaining() const { return _rounds_remaining; }

  /// Inserts received individuals (each must satisfy `feasible`, otherwise
  /// std::logic_error) and returns how many arrived.
  std::size_t receive(std::vector<Message> messages, const Operators &operators, double now,
                      std::vector<Event> *events);

  /// Picks the next target, or -1 if every other worker has the current best
  /// or no rounds remain. Records the target.
  int next_target();

  /// Full communication step.
  void communicate(Mailbox &mailbox, const Operators &operators, double now, std::vector<Event> *events);

  /// Resets the sent set if the local best improved since the last call.
  void track_best();

private:
  int _pe_id;
  int _pes;
  Population _population;
  Random _rng;
  std::vector<std::uint8_t> _best_sent_to;
  int _rounds_remaining = 0;
  NodeWeight _best_fitness = -1;
};

struct IslandConfig {
  int pes = 1;
  double time_limit = 10.0;
  /// f: the first time_limit / f seconds are spent creating individuals.
  double fraction = 10.0;
  std::uint64_t seed = 0;
  /// Only create individuals and never communicate (independent repetitions).
  bool repetitions = false;
  /// Single-threaded round-robin execution on a virtual clock; every operation
  /// advances the worker's clock by a fixed cost.
  bool deterministic = false;
  double create_cost = 1.0;
  double combine_cost = 0.5;
  double mutate_cost = 0.5;
  double communicate_cost = 0.0;
  EvolutionConfig evolution;
};

struct IslandResult {
  SeparatorSolution best;
  /// Sorted by time.
  std::vector<Event> events;
  std::vector<std::string> warnings;
  std::int64_t operations = 0;
};

/// Runs p workers until the time limit and returns the best individual seen.
IslandResult run_islands(const Graph &graph, BlockID k, double epsilon, const IslandConfig &config);

/// Same with custom operators; the operators object is shared by all workers
/// and must be thread-safe unless the run is deterministic.
IslandResult run_islands(Operators &operators, const IslandConfig &config);
} // namespace nodesep
