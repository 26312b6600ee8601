#include "algdeg/problem_file.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "algdeg/errors.hpp"
#include "algdeg/poly_text.hpp"

namespace algdeg {

namespace {

struct Entry {
  enum Kind { objective, constraint } kind;
  std::string padded;  // keyword blanked out so columns match the source line
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Largest k among identifiers of the form xk.
std::size_t max_x_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x' || (i > 0 && std::isalnum(static_cast<unsigned char>(text[i - 1])))) continue;
    std::size_t j = i + 1;
    std::size_t k = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && k < 1000) {
      k = k * 10 + static_cast<std::size_t>(text[j] - '0');
      ++j;
    }
    if (j > i + 1 && (j == text.size() || !std::isalnum(static_cast<unsigned char>(text[j])))) best = std::max(best, k);
  }
  return best;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text, const PrimeField& field) {
  std::vector<Entry> entries;
  std::optional<std::size_t> declared;
  std::size_t line_no = 0;
  std::size_t inferred = 0;
  std::size_t objective_count = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string_view body = trim(line);
    if (body.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'objective:', 'constraint:' or 'variables:'", line_no, 1);
    const std::string_view key = trim(std::string_view(line).substr(0, colon));
    std::string padded = std::string(colon + 1, ' ') + line.substr(colon + 1);
    if (key == "variables") {
      std::string_view value = trim(std::string_view(line).substr(colon + 1));
      std::size_t n = 0;
      if (value.empty()) throw ParseError("missing variable count", line_no, colon + 2);
      for (char c : value) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("variable count must be an integer", line_no, colon + 2);
        n = n * 10 + static_cast<std::size_t>(c - '0');
        if (n > kMaxVars) throw ParseError("too many variables", line_no, colon + 2);
      }
      declared = n;
    } else if (key == "objective" || key == "constraint") {
      const bool is_objective = key == "objective";
      if (is_objective && ++objective_count > 1) throw ParseError("duplicate objective", line_no, 1);
      inferred = std::max(inferred, max_x_index(padded));
      entries.push_back({is_objective ? Entry::objective : Entry::constraint, std::move(padded), line_no});
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no, 1);
    }
  }
  if (objective_count == 0) throw ParseError("missing objective", line_no == 0 ? 1 : line_no, 1);

  std::size_t n = declared.value_or(std::min(inferred, kMaxVars));
  if (n == 0) n = 1;
  auto ring = Ring::make(n, field);
  const VariableNames names = default_names(n);
  std::optional<Polynomial> objective;
  std::vector<Polynomial> constraints;
  for (const auto& e : entries) {
    Polynomial f = parse_polynomial(e.padded, ring, names, e.line);
    if (e.kind == Entry::objective) {
      objective = std::move(f);
    } else {
      if (f.is_constant()) throw ParseError("constraint has degree 0", e.line, 1);
      constraints.push_back(std::move(f));
    }
  }
  return ProblemSpec{ring, std::move(*objective), std::move(constraints)};
}

ProblemSpec parse_problem_file(const std::filesystem::path& path, const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), field);
}

std::string serialize_problem(const ProblemSpec& spec) {
  const VariableNames names = default_names(spec.n());
  std::ostringstream out;
  out << "variables: " << spec.n() << '\n';
  out << "objective: " << to_string(spec.objective, names) << '\n';
  for (const auto& c : spec.constraints) out << "constraint: " << to_string(c, names) << '\n';
  return out.str();
}

}  // namespace algdeg
