#include "cnct/text_format.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cnct {
namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-blank lines with comments stripped, split on whitespace.
std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    std::istringstream fields(text);
    Line line{number, {}};
    for (std::string token; fields >> token;) line.tokens.push_back(std::move(token));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw FormatError(ErrorKind::Parse, line, message);
}

long long to_integer(const std::string& token, int line) {
  long long value = 0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line, "expected an integer, got '" + token + "'");
  return value;
}

// Expects `keyword <int>` and returns the integer.
long long header_value(const Line& line, const std::string& keyword) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
    fail(line.number, "expected '" + keyword + " <int>'");
  }
  return to_integer(line.tokens[1], line.number);
}

GroundSet read_ground(const std::vector<Line>& lines) {
  if (lines.empty()) fail(0, "missing 'n <int>' header");
  const long long n = header_value(lines[0], "n");
  if (n < 1 || n > GroundSet::kMaxSize) {
    throw FormatError(ErrorKind::InvalidGround, lines[0].number,
                      "ground set size must lie in [1, 16], got " + std::to_string(n));
  }
  return GroundSet(static_cast<int>(n));
}

void write_indices(std::ostream& out, Subset s) {
  bool first = true;
  for_each_index(s, [&](int i) {
    if (!first) out << ' ';
    out << i;
    first = false;
  });
  out << '\n';
}

}  // namespace

ConnectivityStructure read_structure(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  const GroundSet ground = read_ground(lines);
  std::vector<Subset> generators;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::uint32_t bits = 0;
    for (const std::string& token : lines[l].tokens) {
      const long long i = to_integer(token, lines[l].number);
      if (i < 1 || i > ground.size()) {
        throw FormatError(ErrorKind::OutOfRange, lines[l].number,
                          "index " + std::to_string(i) + " outside 1.." +
                              std::to_string(ground.size()));
      }
      const std::uint32_t bit = std::uint32_t{1} << (i - 1);
      if (bits & bit) fail(lines[l].number, "index " + std::to_string(i) + " repeated");
      bits |= bit;
    }
    generators.emplace_back(bits);
  }
  return generate(ground, generators);
}

void write_structure(std::ostream& out, const ConnectivityStructure& k) {
  out << "n " << k.ground().size() << '\n';
  for (Subset s : k.members()) {
    if (s.size() >= 2) write_indices(out, s);
  }
}

RandomFamily read_family(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  const GroundSet ground = read_ground(lines);
  if (lines.size() < 3) fail(0, "missing 'omega' or 'p' line");
  const long long m = header_value(lines[1], "omega");
  if (m < 1) fail(lines[1].number, "omega must be positive");

  const Line& p_line = lines[2];
  if (p_line.tokens.empty() || p_line.tokens[0] != "p") {
    fail(p_line.number, "expected 'p <probabilities>'");
  }
  if (p_line.tokens.size() != static_cast<std::size_t>(m) + 1) {
    throw FormatError(ErrorKind::LengthMismatch, p_line.number,
                      "expected " + std::to_string(m) + " probabilities, got " +
                          std::to_string(p_line.tokens.size() - 1));
  }
  ProbabilitySpace space;
  for (std::size_t t = 1; t < p_line.tokens.size(); ++t) {
    try {
      space.probs.push_back(Rational::parse(p_line.tokens[t]));
    } catch (const Error& e) {
      throw FormatError(e.kind(), p_line.number, e.what());
    }
  }

  if (lines.size() != 3 + static_cast<std::size_t>(ground.size())) {
    throw FormatError(ErrorKind::LengthMismatch, lines.back().number,
                      "expected " + std::to_string(ground.size()) + " 'x' lines, got " +
                          std::to_string(lines.size() - 3));
  }
  std::vector<RandomVariable> vars;
  for (std::size_t l = 3; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.tokens[0] != "x") fail(line.number, "expected 'x <value codes>'");
    if (line.tokens.size() != static_cast<std::size_t>(m) + 1) {
      throw FormatError(ErrorKind::LengthMismatch, line.number,
                        "expected " + std::to_string(m) + " value codes, got " +
                            std::to_string(line.tokens.size() - 1));
    }
    RandomVariable var;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      const long long v = to_integer(line.tokens[t], line.number);
      if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
        fail(line.number, "value code " + line.tokens[t] + " out of range");
      }
      var.values.push_back(static_cast<std::uint32_t>(v));
    }
    vars.push_back(std::move(var));
  }
  try {
    return validate_family(ground, std::move(space), std::move(vars));
  } catch (const Error& e) {
    // Only the probability rules can still fail here.
    throw FormatError(e.kind(), p_line.number, e.what());
  }
}

void write_family(std::ostream& out, const RandomFamily& phi) {
  out << "n " << phi.ground().size() << '\n';
  out << "omega " << phi.outcome_count() << '\n';
  out << 'p';
  for (const Rational& p : phi.space().probs) out << ' ' << p;
  out << '\n';
  for (const RandomVariable& var : phi.variables()) {
    out << 'x';
    for (std::uint32_t v : var.values) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace cnct
