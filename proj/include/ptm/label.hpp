#ifndef PTM_LABEL_HPP
#define PTM_LABEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace ptm {

/// An event label <thread, op>. Both components are opaque tokens.
struct Label {
  std::string thread;
  std::string op;

  friend auto operator<=>(const Label&, const Label&) = default;
  friend bool operator==(const Label&, const Label&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Label& l) {
  return os << '<' << l.thread << ',' << l.op << '>';
}

using Word = std::vector<Label>;

using LabelId = std::uint32_t;
using ThreadId = std::uint32_t;

}  // namespace ptm

template <>
struct std::hash<ptm::Label> {
  std::size_t operator()(const ptm::Label& l) const noexcept {
    const auto h1 = std::hash<std::string>{}(l.thread);
    const auto h2 = std::hash<std::string>{}(l.op);
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
  }
};

#endif  // PTM_LABEL_HPP
