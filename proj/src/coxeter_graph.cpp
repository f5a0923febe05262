#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "boolkl/coxeter.hpp"
#include "boolkl/errors.hpp"

namespace boolkl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::LabelBelow3: return "LabelBelow3";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::NotTreeOrCycle: return "NotTreeOrCycle";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::NoRoot: return "NoRoot";
    case ErrorKind::NotBelow: return "NotBelow";
    case ErrorKind::NotInQuotient: return "NotInQuotient";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::ParabolicSubgroupTooLarge: return "ParabolicSubgroupTooLarge";
    case ErrorKind::NotTreeDiagram: return "NotTreeDiagram";
    case ErrorKind::NotCycleDiagram: return "NotCycleDiagram";
    case ErrorKind::InvalidWindow: return "InvalidWindow";
    case ErrorKind::NotBooleanWindow: return "NotBooleanWindow";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::WrongVariant: return "WrongVariant";
    case ErrorKind::UnsupportedGraphShape: return "UnsupportedGraphShape";
    case ErrorKind::NotLeftmost: return "NotLeftmost";
    case ErrorKind::DegenerateExponent: return "DegenerateExponent";
    case ErrorKind::TooManyPairs: return "TooManyPairs";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Generator g : w) {
    h ^= static_cast<std::size_t>(g);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t' || piece.front() == '\r'))
      piece.remove_prefix(1);
    while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t' || piece.back() == '\r'))
      piece.remove_suffix(1);
    if (!piece.empty()) out.push_back(piece);
    start = end + 1;
  }
  return out;
}

std::optional<int> parse_int(std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

}  // namespace

Word parse_word(std::string_view text) {
  Word w;
  for (std::string_view token : split(text, ' ')) {
    if (token == "e" || token == "ε") continue;
    auto value = parse_int(token);
    if (!value || *value < 0) throw Error(ErrorKind::InvalidWord, "bad generator '" + std::string(token) + "'");
    w.push_back(*value);
  }
  return w;
}

GeneratorSet::GeneratorSet(std::initializer_list<Generator> members) {
  for (Generator g : members) insert(g);
}

int GeneratorSet::size() const { return std::popcount(bits_); }

std::vector<Generator> GeneratorSet::members() const {
  std::vector<Generator> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

std::string GeneratorSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Generator g : members()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

GeneratorSet parse_generator_set(std::string_view text) {
  GeneratorSet J;
  for (std::string_view token : split(text, ',')) {
    auto value = parse_int(token);
    if (!value || *value < 0 || *value > CoxeterGraph::kMaxRank)
      throw Error(ErrorKind::InvalidWord, "bad generator '" + std::string(token) + "' in set");
    J.insert(*value);
  }
  return J;
}

CoxeterGraph::CoxeterGraph(int rank)
    : rank_(rank),
      labels_(static_cast<std::size_t>(rank + 1) * static_cast<std::size_t>(rank + 1), 2),
      adjacency_(static_cast<std::size_t>(rank + 1)) {
  if (rank < 1 || rank > kMaxRank)
    throw Error(ErrorKind::MalformedLine, "rank must lie in [1, " + std::to_string(kMaxRank) + "]");
  for (Generator i = 0; i <= rank; ++i) labels_[index(i, i)] = 1;
}

void CoxeterGraph::check_generator(Generator g) const {
  if (g < 1 || g > rank_)
    throw Error(ErrorKind::MalformedLine, "generator " + std::to_string(g) + " outside [1, " + std::to_string(rank_) + "]");
}

void CoxeterGraph::add_edge(Generator i, Generator j, int m) {
  check_generator(i);
  check_generator(j);
  if (i == j) throw Error(ErrorKind::MalformedLine, "self-loop on generator " + std::to_string(i));
  if (m != kInfinity && m < 3)
    throw Error(ErrorKind::LabelBelow3, "edge " + std::to_string(i) + "-" + std::to_string(j) + " has label " + std::to_string(m));
  if (label(i, j) != 2)
    throw Error(ErrorKind::DuplicateEdge, "edge " + std::to_string(i) + "-" + std::to_string(j) + " given twice");
  labels_[index(i, j)] = m;
  labels_[index(j, i)] = m;
  adjacency_[static_cast<std::size_t>(i)].push_back(j);
  adjacency_[static_cast<std::size_t>(j)].push_back(i);
  std::sort(adjacency_[static_cast<std::size_t>(i)].begin(), adjacency_[static_cast<std::size_t>(i)].end());
  std::sort(adjacency_[static_cast<std::size_t>(j)].begin(), adjacency_[static_cast<std::size_t>(j)].end());
  edges_.push_back({std::min(i, j), std::max(i, j), m});
}

void CoxeterGraph::set_root(Generator r) {
  check_generator(r);
  root_ = r;
}

GeneratorSet CoxeterGraph::all_generators() const {
  GeneratorSet s;
  for (Generator g = 1; g <= rank_; ++g) s.insert(g);
  return s;
}

bool CoxeterGraph::connected() const {
  std::vector<bool> seen(static_cast<std::size_t>(rank_ + 1), false);
  std::vector<Generator> stack{1};
  seen[1] = true;
  int count = 0;
  while (!stack.empty()) {
    Generator g = stack.back();
    stack.pop_back();
    ++count;
    for (Generator h : neighbors(g)) {
      if (!seen[static_cast<std::size_t>(h)]) {
        seen[static_cast<std::size_t>(h)] = true;
        stack.push_back(h);
      }
    }
  }
  return count == rank_;
}

GraphShape CoxeterGraph::shape() const {
  if (!connected()) return GraphShape::Other;
  const auto edge_count = static_cast<int>(edges_.size());
  if (edge_count == rank_ - 1) return GraphShape::Tree;
  if (edge_count == rank_ && rank_ >= 3 &&
      std::all_of(adjacency_.begin() + 1, adjacency_.end(), [](const auto& adj) { return adj.size() == 2; }))
    return GraphShape::Cycle;
  return GraphShape::Other;
}

CoxeterGraph parse_graph(std::string_view text, std::optional<GraphMode> required) {
  std::optional<CoxeterGraph> graph;
  std::optional<Generator> root;
  GraphMode mode = GraphMode::Auto;
  int line_no = 0;
  for (std::string_view raw : split(text, '\n')) {
    ++line_no;
    std::string_view line = raw.substr(0, raw.find('#'));
    auto tokens = split(line, ' ');
    if (tokens.empty()) continue;
    auto bad = [&](const std::string& why) {
      return Error(ErrorKind::MalformedLine, "line " + std::to_string(line_no) + ": " + why);
    };
    const std::string_view directive = tokens[0];
    if (directive == "n") {
      if (graph) throw bad("duplicate 'n' directive");
      if (tokens.size() != 2) throw bad("expected 'n <count>'");
      auto n = parse_int(tokens[1]);
      if (!n) throw bad("bad count");
      graph.emplace(*n);
      continue;
    }
    if (!graph) throw bad("'n <count>' must come first");
    if (directive == "edge") {
      if (tokens.size() != 4) throw bad("expected 'edge <i> <j> <m>'");
      auto i = parse_int(tokens[1]);
      auto j = parse_int(tokens[2]);
      std::optional<int> m = tokens[3] == "inf" ? std::optional<int>(CoxeterGraph::kInfinity) : parse_int(tokens[3]);
      if (!i || !j || !m) throw bad("non-numeric edge field");
      graph->add_edge(*i, *j, *m);
    } else if (directive == "root") {
      if (tokens.size() != 2) throw bad("expected 'root <i>'");
      auto r = parse_int(tokens[1]);
      if (!r) throw bad("bad root");
      root = *r;
    } else if (directive == "mode") {
      if (tokens.size() != 2) throw bad("expected 'mode tree|cycle'");
      if (tokens[1] == "tree") {
        mode = GraphMode::Tree;
      } else if (tokens[1] == "cycle") {
        mode = GraphMode::Cycle;
      } else {
        throw bad("unknown mode '" + std::string(tokens[1]) + "'");
      }
    } else {
      throw bad("unknown directive '" + std::string(directive) + "'");
    }
  }
  if (!graph) throw Error(ErrorKind::MalformedLine, "missing 'n <count>' directive");
  if (root) graph->set_root(*root);
  if (required) mode = *required;
  if (!graph->connected()) throw Error(ErrorKind::DisconnectedGraph, "Coxeter graph is not connected");
  const GraphShape shape = graph->shape();
  if (mode == GraphMode::Tree && shape != GraphShape::Tree)
    throw Error(ErrorKind::NotTreeOrCycle, "tree mode requested but the graph is not a tree");
  if (mode == GraphMode::Cycle && shape != GraphShape::Cycle)
    throw Error(ErrorKind::NotTreeOrCycle, "cycle mode requested but the graph is not a cycle");
  return *graph;
}

namespace graphs {

CoxeterGraph type_A(int n) {
  CoxeterGraph g(n);
  for (Generator i = 1; i < n; ++i) g.add_edge(i, i + 1, 3);
  g.set_root(n);
  return g;
}

CoxeterGraph type_B(int n) {
  CoxeterGraph g(n);
  if (n >= 2) g.add_edge(1, 2, 4);
  for (Generator i = 2; i < n; ++i) g.add_edge(i, i + 1, 3);
  g.set_root(n);
  return g;
}

CoxeterGraph type_D(int n) {
  CoxeterGraph g(n);
  g.add_edge(1, 3, 3);
  g.add_edge(2, 3, 3);
  for (Generator i = 3; i < n; ++i) g.add_edge(i, i + 1, 3);
  g.set_root(n);
  return g;
}

CoxeterGraph affine_A(int n) {
  CoxeterGraph g(n + 1);
  for (Generator i = 1; i <= n; ++i) g.add_edge(i, i + 1, 3);
  g.add_edge(n + 1, 1, 3);
  g.set_root(n + 1);
  return g;
}

}  // namespace graphs
}  // namespace boolkl
