#ifndef PTM_IO_HPP
#define PTM_IO_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ptm/alphabet.hpp"
#include "ptm/nfa.hpp"
#include "ptm/oracle.hpp"
#include "ptm/pattern.hpp"
#include "ptm/trace.hpp"

namespace ptm {

// Traces: one `<thread> <op>` event per line, `#` starts a comment, blank
// lines are skipped. Labels are interned into the given alphabet, so unknown
// labels fail for explicit alphabets.
Trace parse_trace(std::istream& in, ConcurrentAlphabet alphabet);
Trace parse_trace_text(std::string_view text, ConcurrentAlphabet alphabet);
Trace parse_trace_file(const std::string& path, ConcurrentAlphabet alphabet);
void write_trace(std::ostream& out, const Trace& trace);

// Alphabets, JSON: {"mode":"thread-partition","conflicts":[[op,op],...]} or
// {"mode":"explicit-independent"|"explicit-dependent","pairs":[[[t,op],[t,op]],...]}.
ConcurrentAlphabet parse_alphabet_text(std::string_view json);
/// A missing path (or nonexistent file) yields the default thread-partition
/// alphabet without conflicts.
ConcurrentAlphabet parse_alphabet_file(const std::optional<std::string>& path);
std::string alphabet_to_json(const ConcurrentAlphabet& alphabet);

// Specs, JSON: generalized patterns as {"union":[{"pattern":[pos,...]},
// {"epsilon":true}, {"empty":true}]} with each position a [t,op] label or a
// list of them; automata as {"states":N,"initial":[..],"accepting":[..],
// "transitions":[{"from":i,"on":{"label":[t,op]}|{"oneof":[..]}|{"any":true},"to":j}]}.
Spec parse_spec_text(std::string_view json);
Spec parse_spec_file(const std::string& path);
std::string pattern_to_json(const GeneralizedPattern& g);
std::string nfa_to_json(const Nfa& nfa);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ptm

#endif  // PTM_IO_HPP
