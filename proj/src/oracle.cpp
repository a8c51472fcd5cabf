#include "ptm/oracle.hpp"

#include <algorithm>

#include "ptm/algebra.hpp"
#include "ptm/order.hpp"

namespace ptm {

LinearizationCursor::LinearizationCursor(const Trace& trace)
    : successors_(trace.size()), pending_(trace.size(), 0), chosen_(trace.size(), 0) {
  const auto preds = immediate_predecessors(trace);
  for (EventId f = 0; f < trace.size(); ++f) {
    pending_[f] = preds[f].size();
    for (auto e : preds[f]) successors_[e].push_back(f);
  }
  order_.reserve(trace.size());
}

std::size_t LinearizationCursor::run(const std::function<bool(const std::vector<EventId>&)>& visit,
                                     std::size_t limit) {
  visited_ = 0;
  stop_ = false;
  truncated_ = false;
  if (limit > 0) descend(visit, limit);
  else truncated_ = true;
  return visited_;
}

bool LinearizationCursor::descend(const std::function<bool(const std::vector<EventId>&)>& visit,
                                  std::size_t limit) {
  if (order_.size() == chosen_.size()) {
    ++visited_;
    if (!visit(order_)) stop_ = true;
    return !stop_;
  }
  for (EventId e = 0; e < chosen_.size(); ++e) {
    if (chosen_[e] || pending_[e] != 0) continue;
    if (visited_ == limit) {
      truncated_ = true;
      stop_ = true;
      return false;
    }
    chosen_[e] = 1;
    order_.push_back(e);
    for (auto s : successors_[e]) --pending_[s];
    descend(visit, limit);
    for (auto s : successors_[e]) ++pending_[s];
    order_.pop_back();
    chosen_[e] = 0;
    if (stop_) return false;
  }
  return true;
}

Linearizations all_linearizations(const Trace& trace, std::size_t limit) {
  Linearizations out;
  LinearizationCursor cursor(trace);
  cursor.run(
      [&](const std::vector<EventId>& order) {
        out.orders.push_back(order);
        return true;
      },
      limit);
  out.truncated = cursor.truncated();
  return out;
}

OracleVerdict predictive_membership_bruteforce(const Trace& trace, const Spec& spec, std::size_t limit) {
  const auto in_language = [&](const Word& w) {
    return std::visit([&](const auto& s) { return word_membership(s, w); }, spec);
  };
  OracleVerdict verdict;
  LinearizationCursor cursor(trace);
  Word w(trace.size());
  verdict.examined = cursor.run(
      [&](const std::vector<EventId>& order) {
        for (std::size_t i = 0; i < order.size(); ++i) w[i] = trace.label(order[i]);
        verdict.member = in_language(w);
        return !verdict.member;
      },
      limit);
  verdict.truncated = cursor.truncated() && !verdict.member;
  return verdict;
}

namespace {

bool ov_search(const OvSets& sets, std::size_t i, std::vector<char>& alive) {
  if (i == sets.size()) {
    for (auto a : alive)
      if (a) return false;
    return true;
  }
  for (const auto& v : sets[i]) {
    std::vector<char> next(alive.size());
    for (std::size_t j = 0; j < alive.size(); ++j) next[j] = alive[j] && j < v.size() && v[j];
    if (ov_search(sets, i + 1, next)) return true;
  }
  return false;
}

}  // namespace

bool ov_bruteforce(const OvSets& sets) {
  if (sets.empty()) return false;
  std::size_t d = 0;
  for (const auto& s : sets)
    for (const auto& v : s) d = std::max(d, v.size());
  std::vector<char> alive(d, 1);
  return ov_search(sets, 0, alive);
}

}  // namespace ptm
