#include "qder/reference.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "qder/derivations.hpp"
#include "qder/quandle.hpp"

namespace qder {

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view s) : s_(s) {}

  LinearForm parse() {
    auto f = expr();
    if (pos_ != s_.size()) fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  bool digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  long number() {
    long v = 0;
    if (!digit()) fail("expected a number");
    while (digit()) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }

  static void add(LinearForm& into, const LinearForm& f, long scale) {
    for (auto [k, v] : f) {
      into[k] += scale * v;
      if (into[k] == 0) into.erase(k);
    }
  }

  LinearForm expr() {
    LinearForm out;
    long sign = 1;
    if (at('+') || at('-')) sign = s_[pos_++] == '-' ? -1 : 1;
    add(out, term(), sign);
    while (at('+') || at('-')) {
      sign = s_[pos_++] == '-' ? -1 : 1;
      add(out, term(), sign);
    }
    return out;
  }

  LinearForm term() {
    long scale = 1;
    bool had_number = false;
    if (digit()) {
      scale = number();
      had_number = true;
      if (at('*')) ++pos_;
    }
    if (at('a')) {
      ++pos_;
      auto idx = number();
      if (idx < 1) fail("parameter indices start at 1");
      return {{static_cast<std::size_t>(idx), scale}};
    }
    if (at('(')) {
      ++pos_;
      auto inner = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      LinearForm out;
      add(out, inner, scale);
      return out;
    }
    if (had_number && scale == 0) return {};
    fail("expected a parameter, '(' or 0");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

LinearForm parse_linear_form(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw std::invalid_argument("empty linear form");
  return FormParser(compact).parse();
}

std::size_t ReferenceEntry::parameter_count() const {
  std::size_t m = 0;
  for (const auto& row : entries)
    for (const auto& f : row)
      if (!f.empty()) m = std::max(m, f.rbegin()->first);
  return m;
}

SubspaceBasis ReferenceEntry::subspace() const {
  std::vector<Vector> gens;
  for (std::size_t p = 1; p <= parameter_count(); ++p) {
    auto v = zero_vector(field, n * n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t x = 0; x < n; ++x) {
        auto it = entries[u][x].find(p);
        if (it != entries[u][x].end()) v[u * n + x] = Scalar::from_int(field, it->second);
      }
    gens.push_back(std::move(v));
  }
  return SubspaceBasis::span(field, n * n, gens);
}

ReferenceEntry parse_reference(std::string_view text, std::string file_name) {
  ReferenceEntry e;
  e.file = std::move(file_name);
  std::string layout;
  std::map<std::string, std::vector<std::vector<LinearForm>>> blocks;
  std::string current_block;

  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument(e.file + ":" + std::to_string(line_no) + ": " + what);
  };
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon != std::string::npos && std::isalpha(static_cast<unsigned char>(line[0]))) {
      auto key = trim(line.substr(0, colon));
      auto value = trim(line.substr(colon + 1));
      if (key == "label") e.label = value;
      else if (key == "quandle") e.quandle = value;
      else if (key == "field") e.field = FieldSpec::parse(value);
      else if (key == "layout") layout = value;
      else if (key == "matrix" || key == "U" || key == "V") current_block = key;
      else fail("unknown key '" + key + "'");
      continue;
    }
    if (current_block.empty()) fail("matrix row outside a matrix block");
    std::vector<LinearForm> row;
    try {
      for (const auto& tok : split_ws(line)) row.push_back(parse_linear_form(tok));
    } catch (const std::invalid_argument& ex) {
      fail(ex.what());
    }
    blocks[current_block].push_back(std::move(row));
  }
  if (e.label.empty() || e.quandle.empty()) fail("missing label or quandle");
  e.n = quandle_from_source(e.quandle).order();
  const auto n = e.n;

  auto square = [&](const std::vector<std::vector<LinearForm>>& m, std::size_t size, const std::string& what) {
    if (m.size() != size) fail(what + " must have " + std::to_string(size) + " rows");
    for (const auto& r : m)
      if (r.size() != size) fail(what + " rows must have " + std::to_string(size) + " entries");
  };
  auto negate = [](LinearForm f) {
    for (auto& [k, v] : f) v = -v;
    return f;
  };

  if (layout == "zero") {
    e.entries.assign(n, std::vector<LinearForm>(n));
  } else if (layout == "full") {
    square(blocks["matrix"], n, "matrix");
    e.entries = blocks["matrix"];
  } else if (layout == "uv") {
    if (n % 4 != 0) fail("uv layout needs an order divisible by 4");
    const auto k = n / 4;
    const auto& u = blocks["U"];
    const auto& v = blocks["V"];
    square(u, k, "U");
    square(v, k, "V");
    static const int pattern[4][4] = {{1, 2, -1, -2}, {-2, 1, 2, -1}, {-1, -2, 1, 2}, {2, -1, -2, 1}};
    e.entries.assign(n, std::vector<LinearForm>(n));
    for (std::size_t bi = 0; bi < 4; ++bi)
      for (std::size_t bj = 0; bj < 4; ++bj) {
        int p = pattern[bi][bj];
        const auto& src = std::abs(p) == 1 ? u : v;
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c)
            e.entries[bi * k + r][bj * k + c] = p > 0 ? src[r][c] : negate(src[r][c]);
      }
  } else {
    fail("layout must be full, uv or zero");
  }
  return e;
}

const std::vector<ReferenceEntry>& reference_entries() {
  static const std::vector<ReferenceEntry> entries = [] {
    std::vector<ReferenceEntry> out;
    for (const auto& f : detail::embedded_reference_files()) out.push_back(parse_reference(f.content, f.name));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.file < b.file; });
    return out;
  }();
  return entries;
}

const ReferenceEntry& reference_entry(std::string_view label) {
  for (const auto& e : reference_entries())
    if (e.label == label) return e;
  throw std::invalid_argument("no reference entry labelled '" + std::string(label) + "'");
}

std::string to_string(SubspaceRelation r) {
  switch (r) {
    case SubspaceRelation::Equal: return "equal";
    case SubspaceRelation::ReferenceInsideSolver: return "reference strictly inside solver";
    case SubspaceRelation::SolverInsideReference: return "solver strictly inside reference";
    case SubspaceRelation::Incomparable: return "incomparable";
  }
  return "?";
}

ReferenceCheck check_reference(const ReferenceEntry& entry) {
  auto q = quandle_from_source(entry.quandle);
  auto solver = derivation_space(q, entry.field).flat;
  auto ref = entry.subspace();
  SubspaceRelation rel;
  if (solver == ref) rel = SubspaceRelation::Equal;
  else if (is_subspace_of(ref, solver)) rel = SubspaceRelation::ReferenceInsideSolver;
  else if (is_subspace_of(solver, ref)) rel = SubspaceRelation::SolverInsideReference;
  else rel = SubspaceRelation::Incomparable;
  return {entry.label, solver.dim(), ref.dim(), entry.parameter_count(), rel};
}

}  // namespace qder
