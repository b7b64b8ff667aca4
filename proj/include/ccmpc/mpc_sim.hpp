#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccmpc {

// Logical MPC(0) cost model. Machine placement of a record is a fixed hash of
// its reduce key modulo `machines`.
struct CostModel {
  std::uint32_t machines = 1;
  // Records one machine may receive per round; 0 means derive it as
  // budget_factor * (n + m) / machines from the input size.
  std::uint64_t per_machine_receive_budget = 0;
  double budget_factor = 8.0;
  std::uint32_t record_size_bytes = 16;
  bool strict = false;

  std::uint32_t rounds_per_lc_label = 2;
  std::uint32_t rounds_per_contraction = 2;
  std::uint32_t rounds_per_mtl_detect = 1;
  std::uint32_t rounds_per_mtl_select = 2;

  void validate() const;
  std::uint64_t resolved_budget(std::uint64_t n, std::uint64_t m) const;
};

std::uint32_t machine_of(std::uint64_t key, std::uint32_t machines);

struct RoundEntry {
  std::uint64_t round_index = 0;
  std::string kind;
  std::uint64_t records_sent = 0;
  std::uint64_t max_records_into_one_machine = 0;  // strict mode only
  std::uint64_t dht_puts = 0;
  std::uint64_t dht_gets = 0;
};

struct LedgerTotals {
  std::uint64_t rounds = 0;
  std::uint64_t records_sent = 0;
  std::uint64_t dht_puts = 0;
  std::uint64_t dht_gets = 0;
  friend bool operator==(const LedgerTotals&, const LedgerTotals&) = default;
};

// Records emitted in one communication round. route() attributes records to
// the machine owning `key`; loads are only tracked in strict mode.
class Pass {
 public:
  Pass(const CostModel& model, std::string_view kind);

  void route(std::uint64_t key, std::uint64_t count = 1) {
    records_ += count;
    if (strict_ && count != 0) loads_[machine_of(key, machines_)] += count;
  }
  void add_dht(std::uint64_t puts, std::uint64_t gets) {
    puts_ += puts;
    gets_ += gets;
  }

  std::string_view kind() const { return kind_; }
  std::uint64_t records() const { return records_; }
  std::uint64_t max_load() const;
  std::uint64_t dht_puts() const { return puts_; }
  std::uint64_t dht_gets() const { return gets_; }

 private:
  std::string kind_;
  bool strict_;
  std::uint32_t machines_;
  std::uint64_t records_ = 0;
  std::uint64_t puts_ = 0;
  std::uint64_t gets_ = 0;
  std::vector<std::uint64_t> loads_;
};

class RoundLedger {
 public:
  RoundLedger() = default;
  // `budget` is enforced only when nonzero and `strict`.
  RoundLedger(bool strict, std::uint64_t budget, std::uint32_t machines = 1)
      : strict_(strict), budget_(budget), machines_(machines ? machines : 1) {}

  // Appends one round. Throws SpaceViolation when a strict budget is exceeded.
  const RoundEntry& charge(const Pass& pass);
  // Unrouted round of `records`, assumed spread evenly over the machines.
  const RoundEntry& charge(std::uint64_t records, std::string_view kind);

  const std::vector<RoundEntry>& entries() const { return entries_; }
  const LedgerTotals& totals() const { return totals_; }
  std::uint64_t budget() const { return budget_; }
  bool strict() const { return strict_; }

 private:
  const RoundEntry& Append(RoundEntry e);

  bool strict_ = false;
  std::uint64_t budget_ = 0;
  std::uint32_t machines_ = 1;
  std::vector<RoundEntry> entries_;
  LedgerTotals totals_;
};

// Free-function spelling of RoundLedger::charge.
inline const RoundEntry& charge_pass(RoundLedger& ledger, std::uint64_t records,
                                     std::string_view kind) {
  return ledger.charge(records, kind);
}

// Key-value store with a round barrier: values put in round t become visible
// to gets from round t + 1 on. Reading a key written in the current round is a
// VisibilityViolation.
class DhtHandle {
 public:
  using Key = std::uint64_t;
  using Value = std::uint64_t;

  void put_batch(std::span<const std::pair<Key, Value>> pairs);
  void put(Key k, Value v);
  std::vector<std::optional<Value>> get_batch(std::span<const Key> keys);
  std::optional<Value> get(Key k);

  // Commits pending puts and resets per-round counters.
  void advance_round();

  void reserve(std::size_t n) { store_.reserve(n); }
  std::uint64_t round() const { return round_; }
  std::uint64_t puts_this_round() const { return puts_this_round_; }
  std::uint64_t gets_this_round() const { return gets_this_round_; }
  std::uint64_t total_puts() const { return total_puts_; }
  std::uint64_t total_gets() const { return total_gets_; }
  std::size_t size() const { return store_.size(); }

 private:
  std::unordered_map<Key, Value> store_;
  std::unordered_map<Key, Value> pending_;
  std::uint64_t round_ = 0;
  std::uint64_t puts_this_round_ = 0;
  std::uint64_t gets_this_round_ = 0;
  std::uint64_t total_puts_ = 0;
  std::uint64_t total_gets_ = 0;
};

}  // namespace ccmpc
