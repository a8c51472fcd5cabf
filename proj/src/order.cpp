#include "ptm/order.hpp"

#include <string>

#include "ptm/error.hpp"

namespace ptm {

std::vector<EventId> PredecessorIndex::observe(const Event& e) {
  std::vector<EventId> preds;
  for (auto a : alphabet_->dependent_list(e.label))
    if (last_[a]) preds.push_back(*last_[a]);
  last_[e.label] = e.id;
  return preds;
}

std::vector<std::vector<EventId>> immediate_predecessors(const Trace& trace) {
  PredecessorIndex index(trace.alphabet());
  std::vector<std::vector<EventId>> preds(trace.size());
  for (EventId i = 0; i < trace.size(); ++i) preds[i] = index.observe(trace.event(i));
  return preds;
}

bool happens_before(const Trace& trace, EventId e, EventId f) {
  if (e >= trace.size() || f >= trace.size())
    throw Error(ErrorCode::out_of_range, "event id out of range (trace has " + std::to_string(trace.size()) + " events)");
  if (e == f) return true;
  if (e > f) return false;
  const auto preds = immediate_predecessors(trace.prefix(f + 1));
  // Forward closure from e over events up to f.
  std::vector<char> reached(f + 1, 0);
  reached[e] = 1;
  for (EventId y = e + 1; y <= f; ++y)
    for (auto x : preds[y])
      if (reached[x]) {
        reached[y] = 1;
        break;
      }
  return reached[f] != 0;
}

AfterSet after_set_new(LabelId f, const ConcurrentAlphabet& alphabet) {
  AfterSet a(alphabet.size());
  a.set(f);
  return a;
}

bool vc_leq(const VectorClock& u, const VectorClock& v) {
  if (u.dimension() != v.dimension())
    throw Error(ErrorCode::clock_mismatch, "vector clocks over different component sets (" +
                                               std::to_string(u.dimension()) + " vs " +
                                               std::to_string(v.dimension()) + ")");
  return u.leq(v);
}

VcStream::VcStream(const ConcurrentAlphabet& alphabet)
    : alphabet_(&alphabet), per_thread_(alphabet.program_order_dependent()), component_(alphabet.size()) {
  std::size_t dim = per_thread_ ? alphabet.thread_count() : alphabet.size();
  for (LabelId l = 0; l < alphabet.size(); ++l) component_[l] = per_thread_ ? alphabet.thread_of(l) : l;
  component_clocks_.assign(dim, VectorClock(dim));
  label_clocks_.assign(alphabet.size(), VectorClock(dim));
}

const VectorClock& VcStream::step(LabelId l) {
  auto& clock = component_clocks_[component_[l]];
  clock[component_[l]] += 1;
  for (auto dep : alphabet_->dependent_list(l)) clock.join(label_clocks_[dep]);
  label_clocks_[l] = clock;
  return label_clocks_[l];
}

std::vector<VectorClock> vc_stream(const Trace& trace) {
  VcStream stream(trace.alphabet());
  std::vector<VectorClock> out;
  out.reserve(trace.size());
  for (auto l : trace.label_ids()) out.push_back(stream.step(l));
  return out;
}

}  // namespace ptm
