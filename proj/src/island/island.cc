/*******************************************************************************
 * @file:   island.cc
 * @brief:  Island model: asynchronous workers exchanging their best
 *          individuals by randomized rumor spreading.
 ******************************************************************************/
#include "nodesep/island/island.h"

#include <algorithm>
#include <chrono>
#include <exception>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "nodesep/errors.h"

namespace nodesep {
std::string_view to_string(const EventKind kind) {
  switch (kind) {
  case EventKind::kCreate:
    return "create";
  case EventKind::kCombine:
    return "combine";
  case EventKind::kMutate:
    return "mutate";
  case EventKind::kRecv:
    return "recv";
  }
  return "create";
}

EventKind parse_event_kind(const std::string_view name) {
  for (const EventKind kind : {EventKind::kCreate, EventKind::kCombine, EventKind::kMutate, EventKind::kRecv}) {
    if (to_string(kind) == name) {
      return kind;
    }
  }
  throw InvalidArgument("unknown event kind: " + std::string(name));
}

void write_event_log(std::span<const Event> events, std::ostream &out) {
  for (const Event &event : events) {
    const nlohmann::json record = {
        {"t", event.t}, {"size", event.size}, {"pe", event.pe}, {"kind", std::string(to_string(event.kind))}};
    out << record.dump() << '\n';
  }
}

std::vector<Event> read_event_log(std::istream &in) {
  std::vector<Event> events;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    try {
      const nlohmann::json record = nlohmann::json::parse(line);
      events.push_back({record.at("t").get<double>(), record.at("size").get<NodeWeight>(),
                        record.at("pe").get<int>(), parse_event_kind(record.at("kind").get<std::string>())});
    } catch (const nlohmann::json::exception &e) {
      throw InvalidArgument("event log line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return events;
}

InProcessMailbox::InProcessMailbox(const int pes) {
  for (int pe = 0; pe < pes; ++pe) {
    _inboxes.push_back(std::make_unique<Inbox>());
  }
}

void InProcessMailbox::send(const int to, Message message) {
  Inbox &inbox = *_inboxes.at(to);
  const std::lock_guard lock(inbox.mutex);
  inbox.queue.push_back(std::move(message));
}

std::vector<Message> InProcessMailbox::drain(const int pe) {
  Inbox &inbox = *_inboxes.at(pe);
  const std::lock_guard lock(inbox.mutex);
  std::vector<Message> messages(std::make_move_iterator(inbox.queue.begin()),
                                std::make_move_iterator(inbox.queue.end()));
  inbox.queue.clear();
  return messages;
}

MultilevelOperators::MultilevelOperators(const Graph &graph, const BlockID k, const double epsilon,
                                         EvolutionConfig config)
    : _graph(graph), _k(k), _epsilon(epsilon), _config(std::move(config)) {}

Individual MultilevelOperators::create(Random &rng) {
  return Individual(solve(_graph, _k, _epsilon, _config.multilevel, rng));
}

Individual MultilevelOperators::combine(const Individual &p, const Individual &c, Random &rng) {
  return nodesep::combine(_graph, p, c, _config, rng);
}

Individual MultilevelOperators::mutate(const Individual &p, Random &rng) {
  return nodesep::mutate(_graph, p, _config, rng);
}

bool MultilevelOperators::feasible(const Individual &individual) const {
  return individual.solution.n() == _graph.n() && individual.fitness == individual.solution.separator_weight() &&
         is_feasible(_graph, individual.solution);
}

int rumor_rounds(const int pes) {
  int rounds = 0;
  while ((1 << rounds) < pes) {
    ++rounds;
  }
  return rounds;
}

PeState::PeState(const int pe_id, const int pes, const std::uint64_t seed, const std::size_t capacity)
    : _pe_id(pe_id),
      _pes(pes),
      _population(capacity),
      _rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(pe_id + 1))),
      _best_sent_to(pes, 0) {}

std::size_t PeState::receive(std::vector<Message> messages, const Operators &operators, const double now,
                             std::vector<Event> *events) {
  for (Message &message : messages) {
    if (!operators.feasible(message.payload)) {
      throw std::logic_error("received an infeasible individual");
    }
    if (events != nullptr) {
      events->push_back({now, message.payload.fitness, _pe_id, EventKind::kRecv});
    }
    insert_with_eviction(_population, std::move(message.payload), _rng);
  }
  return messages.size();
}

void PeState::track_best() {
  if (_population.empty()) {
    return;
  }
  const NodeWeight best = _population.best().fitness;
  if (_best_fitness < 0 || best < _best_fitness) {
    std::fill(_best_sent_to.begin(), _best_sent_to.end(), 0);
    _best_fitness = best;
  }
}

int PeState::next_target() {
  if (_rounds_remaining <= 0) {
    return -1;
  }
  std::vector<int> eligible;
  for (int pe = 0; pe < _pes; ++pe) {
    if (pe != _pe_id && !_best_sent_to[pe]) {
      eligible.push_back(pe);
    }
  }
  if (eligible.empty()) {
    return -1;
  }
  const int target = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(_rng)];
  _best_sent_to[target] = 1;
  --_rounds_remaining;
  return target;
}

void PeState::communicate(Mailbox &mailbox, const Operators &operators, const double now,
                          std::vector<Event> *events) {
  _rounds_remaining = rumor_rounds(_pes);
  while (_rounds_remaining > 0) {
    receive(mailbox.drain(_pe_id), operators, now, events);
    track_best();
    if (_population.empty()) {
      return;
    }
    const int target = next_target();
    if (target < 0) {
      return;
    }
    mailbox.send(target, Message{_pe_id, _population.best(), now});
  }
}

namespace {
class Worker {
public:
  Worker(const int pe, Operators &operators, Mailbox &mailbox, const IslandConfig &config)
      : _state(pe, config.pes, config.seed, std::numeric_limits<std::size_t>::max()),
        _operators(operators),
        _mailbox(mailbox),
        _config(config) {}

  [[nodiscard]] const PeState &state() const { return _state; }
  [[nodiscard]] std::vector<Event> &events() { return _events; }
  [[nodiscard]] std::int64_t operations() const { return _operations; }
  [[nodiscard]] bool initialized() const { return _initialized; }

  void initialize(const double t_one, const double now, Individual first) {
    _initialized = true;
    const std::size_t capacity = _config.repetitions
                                     ? 1
                                     : estimate_population_size(std::max(t_one, 1e-9), _config.time_limit,
                                                                _config.fraction);
    _state.population().set_capacity(capacity);
    _events.push_back({now, first.fitness, _state.pe_id(), EventKind::kCreate});
    _state.population().add(std::move(first));
    ++_operations;
  }

  Individual create_first() { return _operators.create(_state.rng()); }

  /// One main loop iteration; `clock` reports the worker's current time.
  /// Returns the kind of operation performed.
  template <typename Clock> EventKind step(Clock &&clock, const std::function<void(EventKind)> &advance) {
    Random &rng = _state.rng();
    EventKind kind;
    Individual offspring;
    if (_config.repetitions || clock() < _config.time_limit / _config.fraction) {
      kind = EventKind::kCreate;
      offspring = _operators.create(rng);
    } else if (std::bernoulli_distribution(_config.evolution.mutation_probability)(rng)) {
      kind = EventKind::kMutate;
      offspring = _operators.mutate(tournament_select(_state.population(), rng), rng);
    } else {
      kind = EventKind::kCombine;
      const Individual &p = tournament_select(_state.population(), rng);
      const Individual &c = tournament_select(_state.population(), rng);
      offspring = _operators.combine(p, c, rng);
    }
    advance(kind);
    _events.push_back({clock(), offspring.fitness, _state.pe_id(), kind});
    insert_with_eviction(_state.population(), std::move(offspring), rng);
    ++_operations;
    if (!_config.repetitions && _config.pes > 1) {
      _state.communicate(_mailbox, _operators, clock(), &_events);
      advance(EventKind::kRecv);
    }
    return kind;
  }

private:
  PeState _state;
  Operators &_operators;
  Mailbox &_mailbox;
  const IslandConfig &_config;
  std::vector<Event> _events;
  std::int64_t _operations = 0;
  bool _initialized = false;
};

double operation_cost(const IslandConfig &config, const EventKind kind) {
  switch (kind) {
  case EventKind::kCreate:
    return config.create_cost;
  case EventKind::kCombine:
    return config.combine_cost;
  case EventKind::kMutate:
    return config.mutate_cost;
  case EventKind::kRecv:
    return config.communicate_cost;
  }
  return 0.0;
}

void run_deterministic(std::vector<std::unique_ptr<Worker>> &workers, const IslandConfig &config,
                       std::vector<std::string> &warnings) {
  std::vector<double> clocks(workers.size(), 0.0);
  while (true) {
    std::size_t next = workers.size();
    for (std::size_t pe = 0; pe < workers.size(); ++pe) {
      const bool active = !workers[pe]->initialized() || clocks[pe] < config.time_limit;
      if (active && (next == workers.size() || clocks[pe] < clocks[next])) {
        next = pe;
      }
    }
    if (next == workers.size()) {
      return;
    }
    Worker &worker = *workers[next];
    double &clock = clocks[next];
    if (!worker.initialized()) {
      Individual first = worker.create_first();
      clock += config.create_cost;
      worker.initialize(config.create_cost, clock, std::move(first));
      if (clock >= config.time_limit) {
        warnings.push_back("time limit too small: worker " + std::to_string(next) +
                           " created only one individual");
      }
      continue;
    }
    worker.step([&] { return clock; }, [&](const EventKind kind) { clock += operation_cost(config, kind); });
  }
}

void run_threaded(std::vector<std::unique_ptr<Worker>> &workers, const IslandConfig &config,
                  std::vector<std::string> &warnings) {
  using SteadyClock = std::chrono::steady_clock;
  const auto start = SteadyClock::now();
  auto elapsed = [start] { return std::chrono::duration<double>(SteadyClock::now() - start).count(); };

  std::vector<std::exception_ptr> errors(workers.size());
  std::vector<std::uint8_t> starved(workers.size(), 0);
  std::vector<std::thread> threads;
  for (std::size_t pe = 0; pe < workers.size(); ++pe) {
    threads.emplace_back([&, pe] {
      try {
        Worker &worker = *workers[pe];
        const double before = elapsed();
        Individual first = worker.create_first();
        const double now = elapsed();
        worker.initialize(now - before, now, std::move(first));
        starved[pe] = now >= config.time_limit;
        while (elapsed() < config.time_limit) {
          worker.step(elapsed, [](EventKind) {});
        }
      } catch (...) {
        errors[pe] = std::current_exception();
      }
    });
  }
  for (std::thread &thread : threads) {
    thread.join();
  }
  for (const std::exception_ptr &error : errors) {
    if (error) {
      std::rethrow_exception(error);
    }
  }
  for (std::size_t pe = 0; pe < workers.size(); ++pe) {
    if (starved[pe]) {
      warnings.push_back("time limit too small: worker " + std::to_string(pe) + " created only one individual");
    }
  }
}
} // namespace

IslandResult run_islands(Operators &operators, const IslandConfig &config) {
  if (config.pes < 1) {
    throw InvalidArgument("at least one worker is required");
  }
  if (!(config.time_limit > 0.0)) {
    throw InvalidArgument("time limit must be positive");
  }
  if (config.fraction < 1.0) {
    throw InvalidArgument("fraction must be at least 1");
  }

  InProcessMailbox mailbox(config.pes);
  std::vector<std::unique_ptr<Worker>> workers;
  for (int pe = 0; pe < config.pes; ++pe) {
    workers.push_back(std::make_unique<Worker>(pe, operators, mailbox, config));
  }

  IslandResult result;
  if (config.deterministic) {
    run_deterministic(workers, config, result.warnings);
  } else {
    run_threaded(workers, config, result.warnings);
  }

  const Individual *best = nullptr;
  for (const auto &worker : workers) {
    const Population &population = worker->state().population();
    if (!population.empty() && (best == nullptr || population.best().fitness < best->fitness)) {
      best = &population.best();
    }
    result.events.insert(result.events.end(), worker->events().begin(), worker->events().end());
    result.operations += worker->operations();
  }
  result.best = best->solution;
  std::stable_sort(result.events.begin(), result.events.end(),
                   [](const Event &a, const Event &b) { return a.t < b.t; });
  return result;
}

IslandResult run_islands(const Graph &graph, const BlockID k, const double epsilon, const IslandConfig &config) {
  MultilevelOperators operators(graph, k, epsilon, config.evolution);
  return run_islands(operators, config);
}
} // namespace nodesep
