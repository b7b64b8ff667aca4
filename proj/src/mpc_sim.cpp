#include "ccmpc/mpc_sim.hpp"

#include <algorithm>
#include <cmath>

#include "ccmpc/errors.hpp"
#include "ccmpc/priority.hpp"

namespace ccmpc {

void CostModel::validate() const {
  if (machines == 0) throw ConfigError("machines must be positive");
  if (record_size_bytes == 0) throw ConfigError("record size must be positive");
  if (!(budget_factor > 0)) throw ConfigError("budget factor must be positive");
  if (rounds_per_lc_label == 0 || rounds_per_contraction == 0 ||
      rounds_per_mtl_detect == 0 || rounds_per_mtl_select == 0) {
    throw ConfigError("per-step round charges must be positive");
  }
}

std::uint64_t CostModel::resolved_budget(std::uint64_t n,
                                         std::uint64_t m) const {
  if (per_machine_receive_budget != 0) return per_machine_receive_budget;
  const double b = budget_factor * static_cast<double>(n + m) /
                   static_cast<double>(machines);
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(b)));
}

std::uint32_t machine_of(std::uint64_t key, std::uint32_t machines) {
  return static_cast<std::uint32_t>(mix64(key ^ 0x6d616368696e65ULL) % machines);
}

Pass::Pass(const CostModel& model, std::string_view kind)
    : kind_(kind), strict_(model.strict), machines_(model.machines) {
  if (strict_) loads_.assign(machines_, 0);
}

std::uint64_t Pass::max_load() const {
  return loads_.empty() ? 0 : *std::max_element(loads_.begin(), loads_.end());
}

const RoundEntry& RoundLedger::charge(const Pass& pass) {
  RoundEntry e;
  e.kind = std::string(pass.kind());
  e.records_sent = pass.records();
  e.max_records_into_one_machine = pass.max_load();
  e.dht_puts = pass.dht_puts();
  e.dht_gets = pass.dht_gets();
  if (strict_ && budget_ != 0 && e.max_records_into_one_machine > budget_) {
    throw SpaceViolation(
        entries_.size(),
        e.kind + " sends " + std::to_string(e.max_records_into_one_machine) +
            " records into one machine, budget " + std::to_string(budget_));
  }
  return Append(std::move(e));
}

const RoundEntry& RoundLedger::charge(std::uint64_t records,
                                      std::string_view kind) {
  // Keyless records are taken to be spread evenly over the machines.
  RoundEntry e;
  e.kind = std::string(kind);
  e.records_sent = records;
  if (strict_) {
    e.max_records_into_one_machine = (records + machines_ - 1) / machines_;
    if (budget_ != 0 && e.max_records_into_one_machine > budget_) {
      throw SpaceViolation(entries_.size(),
                           e.kind + " exceeds per-machine budget " +
                               std::to_string(budget_));
    }
  }
  return Append(std::move(e));
}

const RoundEntry& RoundLedger::Append(RoundEntry e) {
  e.round_index = entries_.size();
  totals_.rounds += 1;
  totals_.records_sent += e.records_sent;
  totals_.dht_puts += e.dht_puts;
  totals_.dht_gets += e.dht_gets;
  entries_.push_back(std::move(e));
  return entries_.back();
}

void DhtHandle::put(Key k, Value v) {
  pending_[k] = v;
  ++puts_this_round_;
  ++total_puts_;
}

void DhtHandle::put_batch(std::span<const std::pair<Key, Value>> pairs) {
  pending_.reserve(pending_.size() + pairs.size());
  for (auto [k, v] : pairs) put(k, v);
}

std::optional<DhtHandle::Value> DhtHandle::get(Key k) {
  if (pending_.contains(k)) {
    throw VisibilityViolation("key " + std::to_string(k) +
                              " was written in the current round " +
                              std::to_string(round_));
  }
  ++gets_this_round_;
  ++total_gets_;
  auto it = store_.find(k);
  if (it == store_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::optional<DhtHandle::Value>> DhtHandle::get_batch(
    std::span<const Key> keys) {
  std::vector<std::optional<Value>> out;
  out.reserve(keys.size());
  for (Key k : keys) out.push_back(get(k));
  return out;
}

void DhtHandle::advance_round() {
  for (auto& [k, v] : pending_) store_[k] = v;
  pending_.clear();
  ++round_;
  puts_this_round_ = 0;
  gets_this_round_ = 0;
}

}  // namespace ccmpc
