#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pearl {

/// The four shift-invariant Clifford gate kinds a pearl-necklace encoder is built from.
enum class GateKind { CNOT, CPHASE, H, P };

constexpr bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CPHASE;
}

constexpr std::string_view kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT: return "CNOT";
    case GateKind::CPHASE: return "CPHASE";
    case GateKind::H: return "H";
    case GateKind::P: return "P";
  }
  return "?";
}

inline std::optional<GateKind> kind_from_name(std::string_view name) {
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "CPHASE") return GateKind::CPHASE;
  if (name == "H") return GateKind::H;
  if (name == "P") return GateKind::P;
  return std::nullopt;
}

inline constexpr GateKind kAllKinds[] = {GateKind::CNOT, GateKind::CPHASE, GateKind::H,
                                         GateKind::P};

/// Raised when an encoder is structurally invalid (bad qubit index, source == target, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text parser; carries the 1-based line number of the offending directive.
class ParseError : public ValidationError {
 public:
  ParseError(int line, const std::string& what)
      : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// One infinitely repeated gate. Qubit indices are 1-based. For two-qubit kinds the
/// source sits `degree` frames away from the target (source frame = target frame + degree);
/// single-qubit kinds have source == 0 and degree == 0.
struct GateString {
  GateKind kind = GateKind::H;
  int source = 0;
  int target = 1;
  int degree = 0;

  static GateString cnot(int source, int target, int degree) {
    return {GateKind::CNOT, source, target, degree};
  }
  static GateString cphase(int source, int target, int degree) {
    return {GateKind::CPHASE, source, target, degree};
  }
  static GateString h(int target) { return {GateKind::H, 0, target, 0}; }
  static GateString p(int target) { return {GateKind::P, 0, target, 0}; }

  bool two_qubit() const { return is_two_qubit(kind); }

  friend bool operator==(const GateString&, const GateString&) = default;
};

inline void validate(const GateString& gate, int frame_size) {
  auto in_range = [frame_size](int q) { return q >= 1 && q <= frame_size; };
  if (!in_range(gate.target)) {
    throw ValidationError("target qubit " + std::to_string(gate.target) +
                          " outside [1, " + std::to_string(frame_size) + "]");
  }
  if (gate.two_qubit()) {
    if (!in_range(gate.source)) {
      throw ValidationError("source qubit " + std::to_string(gate.source) +
                            " outside [1, " + std::to_string(frame_size) + "]");
    }
    if (gate.source == gate.target) {
      throw ValidationError("source and target are both qubit " +
                            std::to_string(gate.source));
    }
  } else if (gate.source != 0 || gate.degree != 0) {
    throw ValidationError(std::string(kind_name(gate.kind)) +
                          " string must not carry a source or a degree");
  }
}

/// Frame width plus the left-to-right succession of gate strings. Immutable once built.
class PearlNecklace {
 public:
  PearlNecklace(int frame_size, std::vector<GateString> strings)
      : frame_size_(frame_size), strings_(std::move(strings)) {
    if (frame_size_ < 1) throw ValidationError("frame size must be at least 1");
    if (strings_.empty()) throw ValidationError("encoder has no gate strings");
    for (const auto& gate : strings_) validate(gate, frame_size_);
  }

  int frame_size() const { return frame_size_; }
  std::size_t size() const { return strings_.size(); }
  const std::vector<GateString>& strings() const { return strings_; }

  /// 1-based access, matching the numbering used throughout the algorithm.
  const GateString& at(std::size_t j) const {
    if (j < 1 || j > strings_.size()) throw std::out_of_range("gate string index out of range");
    return strings_[j - 1];
  }

  friend bool operator==(const PearlNecklace&, const PearlNecklace&) = default;

 private:
  int frame_size_;
  std::vector<GateString> strings_;
};

/// Partition of 1..N by kind and degree sign. Each member list is ascending.
struct IndexSets {
  std::vector<std::size_t> cnot_plus;
  std::vector<std::size_t> cnot_minus;
  std::vector<std::size_t> cphase_plus;
  std::vector<std::size_t> cphase_minus;
  std::vector<std::size_t> hadamard;
  std::vector<std::size_t> phase;

  friend bool operator==(const IndexSets&, const IndexSets&) = default;
};

inline IndexSets classify_indices(const PearlNecklace& necklace) {
  IndexSets sets;
  for (std::size_t j = 1; j <= necklace.size(); ++j) {
    const auto& gate = necklace.at(j);
    switch (gate.kind) {
      case GateKind::CNOT:
        (gate.degree >= 0 ? sets.cnot_plus : sets.cnot_minus).push_back(j);
        break;
      case GateKind::CPHASE:
        (gate.degree >= 0 ? sets.cphase_plus : sets.cphase_minus).push_back(j);
        break;
      case GateKind::H: sets.hadamard.push_back(j); break;
      case GateKind::P: sets.phase.push_back(j); break;
    }
  }
  return sets;
}

/// True for the I⁺ two-qubit strings (degree >= 0), which feed the END vertex with their degree.
inline bool in_plus_set(const GateString& gate) { return gate.two_qubit() && gate.degree >= 0; }
/// True for the I⁻ two-qubit strings, which start no earlier than frame |degree|.
inline bool in_minus_set(const GateString& gate) { return gate.two_qubit() && gate.degree < 0; }

namespace detail {

inline std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r'))
      ++pos;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r')
      ++end;
    if (end > pos) tokens.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return tokens;
}

}  // namespace detail

/// Parses the line-oriented encoder format:
///
///     frame <n>
///     CNOT <source> <target> <degree>
///     CPHASE <source> <target> <degree>
///     H <target>
///     P <target>
///
/// `#` starts a comment; blank lines are ignored. `frame` must precede every gate line.
inline PearlNecklace parse_necklace(std::string_view text) {
  std::optional<int> frame_size;
  std::vector<GateString> strings;
  int line_no = 0;
  std::size_t pos = 0;
  bool last_line = text.empty();
  while (!last_line) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) {
      eol = text.size();
      last_line = true;
    }
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    auto integer = [&](std::string_view token, const char* what) {
      auto value = detail::parse_int(token);
      if (!value) {
        throw ParseError(line_no, std::string("expected integer ") + what + ", got '" +
                                      std::string(token) + "'");
      }
      return *value;
    };

    if (tokens[0] == "frame") {
      if (frame_size) throw ParseError(line_no, "duplicate frame directive");
      if (tokens.size() != 2) throw ParseError(line_no, "usage: frame <n>");
      int n = integer(tokens[1], "frame size");
      if (n < 1) throw ParseError(line_no, "frame size must be at least 1");
      frame_size = n;
      continue;
    }

    auto kind = kind_from_name(tokens[0]);
    if (!kind) throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    if (!frame_size) throw ParseError(line_no, "frame directive must come before gate lines");

    GateString gate;
    gate.kind = *kind;
    if (is_two_qubit(*kind)) {
      if (tokens.size() != 4) {
        throw ParseError(line_no, std::string("usage: ") + std::string(kind_name(*kind)) +
                                      " <source> <target> <degree>");
      }
      gate.source = integer(tokens[1], "source");
      gate.target = integer(tokens[2], "target");
      gate.degree = integer(tokens[3], "degree");
    } else {
      if (tokens.size() == 3) {
        throw ParseError(line_no, std::string(kind_name(*kind)) + " takes no degree");
      }
      if (tokens.size() != 2) {
        throw ParseError(line_no, std::string("usage: ") + std::string(kind_name(*kind)) +
                                      " <target>");
      }
      gate.target = integer(tokens[1], "target");
    }
    try {
      validate(gate, *frame_size);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    strings.push_back(gate);
  }
  if (!frame_size) throw ValidationError("missing frame directive");
  return PearlNecklace(*frame_size, std::move(strings));
}

/// Gate string in the D-polynomial notation, e.g. "CNOT(3,2D^1)" or "H(1)".
inline std::string describe(const GateString& gate) {
  std::ostringstream out;
  out << kind_name(gate.kind) << '(';
  if (gate.two_qubit()) {
    out << gate.source << ',' << gate.target << "D^" << gate.degree;
  } else {
    out << gate.target;
  }
  out << ')';
  return out.str();
}

/// Inverse of parse_necklace.
inline std::string render_necklace(const PearlNecklace& necklace) {
  std::ostringstream out;
  out << "frame " << necklace.frame_size() << '\n';
  for (const auto& gate : necklace.strings()) {
    out << kind_name(gate.kind);
    if (gate.two_qubit()) {
      out << ' ' << gate.source << ' ' << gate.target << ' ' << gate.degree;
    } else {
      out << ' ' << gate.target;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace pearl
