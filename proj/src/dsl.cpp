#include "p4spec/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4spec/constructions.hpp"
#include "p4spec/formats.hpp"

namespace p4spec {

namespace {

struct Arg;

// Untyped syntax tree; meaning is assigned by evaluate().
struct Node {
  std::size_t pos = 0;
  std::string name;                 // identifier, empty for integer literals
  std::optional<long long> integer;  // set for integer literals
  bool call = false;                 // name(...) rather than a bare name
  std::vector<Arg> args;
};

struct Arg {
  std::optional<std::string> key;
  std::size_t key_pos = 0;
  Node value;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node root = expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "' after expression");
    }
    return root;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] static void fail_at(std::size_t pos, const std::string& what) {
    throw ParseError("dsl: offset " + std::to_string(pos) + ": " + what, pos);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "', found '" + text_[pos_] + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Node expr() {
    skip_space();
    Node node;
    node.pos = pos_;
    if (pos_ >= text_.size()) {
      fail("expected an expression before end of input");
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
      long long value = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc()) {
        fail("malformed integer");
      }
      pos_ += static_cast<std::size_t>(ptr - first);
      node.integer = value;
      return node;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      fail("unexpected '" + std::string(1, c) + "'");
    }
    node.name = identifier();
    if (accept('(')) {
      node.call = true;
      if (!accept(')')) {
        do {
          node.args.push_back(argument());
        } while (accept(','));
        expect(')');
      }
    }
    return node;
  }

  Arg argument() {
    skip_space();
    const std::size_t save = pos_;
    Arg arg;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::string key = identifier();
      if (accept('=')) {
        arg.key = std::move(key);
        arg.key_pos = save;
      } else {
        pos_ = save;
      }
    }
    arg.value = expr();
    return arg;
  }
};

[[noreturn]] void fail_at(std::size_t pos, const std::string& what) {
  throw ParseError("dsl: offset " + std::to_string(pos) + ": " + what, pos);
}

// Binds positional and keyword arguments to an ordered parameter list.
std::vector<const Node*> bind(const Node& call, std::initializer_list<std::string_view> params,
                              std::size_t required) {
  std::vector<const Node*> bound(params.size(), nullptr);
  std::size_t next = 0;
  for (const auto& arg : call.args) {
    std::size_t slot = 0;
    if (arg.key) {
      auto it = std::find(params.begin(), params.end(), *arg.key);
      if (it == params.end()) {
        fail_at(arg.key_pos, call.name + ": unknown argument '" + *arg.key + "'");
      }
      slot = static_cast<std::size_t>(it - params.begin());
    } else {
      slot = next;
      if (slot >= params.size()) {
        fail_at(arg.value.pos, call.name + ": too many arguments");
      }
    }
    if (bound[slot] != nullptr) {
      fail_at(arg.key ? arg.key_pos : arg.value.pos,
              call.name + ": argument '" + std::string(*(params.begin() + slot)) + "' given twice");
    }
    bound[slot] = &arg.value;
    next = slot + 1;
  }
  for (std::size_t i = 0; i < required; ++i) {
    if (bound[i] == nullptr) {
      fail_at(call.pos, call.name + ": missing argument '" + std::string(*(params.begin() + i)) + "'");
    }
  }
  return bound;
}

int integer_of(const Node& node, const std::string& what) {
  if (!node.integer) {
    fail_at(node.pos, what + " must be an integer");
  }
  if (*node.integer < 0 || *node.integer > max_vertices()) {
    fail_at(node.pos, what + " " + std::to_string(*node.integer) + " is out of range 0.." +
                          std::to_string(max_vertices()));
  }
  return static_cast<int>(*node.integer);
}

std::string word_of(const Node& node, const std::string& what) {
  if (node.integer || node.call) {
    fail_at(node.pos, what + " must be a name");
  }
  return node.name;
}

Graph evaluate(const Node& node);

Graph evaluate_head(const Node* node) {
  if (node == nullptr || (!node->call && !node->integer && node->name == "none")) {
    return Graph{};
  }
  return evaluate(*node);
}

std::optional<Graph> atom(const Node& node) {
  const std::string& s = node.name;
  if (auto fam = parse_family_id(s); fam && *fam != FamilyId::P4) {
    return family(*fam);
  }
  if (s.size() < 2 || std::string("KEPC").find(s[0]) == std::string::npos) {
    return std::nullopt;
  }
  int n = 0;
  const char* first = s.data() + 1;
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) {
    return std::nullopt;
  }
  if (n > max_vertices()) {
    fail_at(node.pos, s + ": " + std::to_string(n) + " vertices exceeds the configured maximum of " +
                          std::to_string(max_vertices()));
  }
  switch (s[0]) {
    case 'K': return complete_graph(n);
    case 'E': return empty_graph(n);
    case 'P': return path_graph(n);
    default: return cycle_graph(n);
  }
}

Graph evaluate_call(const Node& node) {
  const std::string& f = node.name;
  if (f == "spider") {
    auto a = bind(node, {"kind", "k", "head"}, 2);
    const std::string kind = word_of(*a[0], "spider kind");
    if (kind != "thin" && kind != "thick") {
      fail_at(a[0]->pos, "spider kind must be 'thin' or 'thick', got '" + kind + "'");
    }
    const int k = integer_of(*a[1], "spider k");
    if (k < 2) {
      fail_at(a[1]->pos, "spider k must be at least 2");
    }
    const Graph head = evaluate_head(a[2]);
    if (2 * static_cast<long long>(k) + head.order() > max_vertices()) {
      fail_at(node.pos, "spider has more than " + std::to_string(max_vertices()) + " vertices");
    }
    return kind == "thin" ? thin_spider(k, head) : thick_spider(k, head);
  }
  if (f == "family") {
    auto a = bind(node, {"id"}, 1);
    const std::string id = word_of(*a[0], "family id");
    auto fam = parse_family_id(id);
    if (!fam) {
      fail_at(a[0]->pos, "unknown family '" + id + "' (expected P4 or F0..F6)");
    }
    return family(*fam);
  }
  if (f == "caseiv") {
    auto a = bind(node, {"kind", "head"}, 2);
    const std::string id = word_of(*a[0], "caseiv kind");
    auto kind = parse_case_iv_kind(id);
    if (!kind) {
      fail_at(a[0]->pos, "caseiv kind must be one of P4, F3, F4, F5, F6, got '" + id + "'");
    }
    const Graph head = evaluate_head(a[1]);
    if (head.order() < 1) {
      fail_at(a[1]->pos, "caseiv needs a head with at least one vertex");
    }
    return case_iv_graph(*kind, head);
  }
  if (f == "complement") {
    auto a = bind(node, {"graph"}, 1);
    return complement(evaluate(*a[0]));
  }
  if (f == "union" || f == "join") {
    if (node.args.empty()) {
      fail_at(node.pos, f + " needs at least one operand");
    }
    Graph acc;
    bool first = true;
    for (const auto& arg : node.args) {
      if (arg.key) {
        fail_at(arg.key_pos, f + " takes no named arguments");
      }
      Graph next = evaluate(arg.value);
      if (!first && static_cast<long long>(acc.order()) + next.order() > max_vertices()) {
        fail_at(arg.value.pos, f + " result has more than " + std::to_string(max_vertices()) + " vertices");
      }
      acc = first ? std::move(next) : (f == "union" ? disjoint_union(acc, next) : join(acc, next));
      first = false;
    }
    return acc;
  }
  static const std::pair<std::string_view, StandardFamily> standard_names[] = {
      {"path", StandardFamily::path},
      {"cycle", StandardFamily::cycle},
      {"complete", StandardFamily::complete},
      {"empty", StandardFamily::empty},
  };
  for (const auto& [name, fam] : standard_names) {
    if (f == name) {
      auto a = bind(node, {"n"}, 1);
      const int n = integer_of(*a[0], f + " size");
      const int min_n = fam == StandardFamily::cycle ? 3 : 1;
      if (n < min_n) {
        fail_at(a[0]->pos, f + " needs n >= " + std::to_string(min_n));
      }
      return standard(fam, n);
    }
  }
  fail_at(node.pos, "unknown constructor '" + f + "'");
}

Graph evaluate(const Node& node) {
  if (node.integer) {
    fail_at(node.pos, "expected a graph, found an integer");
  }
  if (node.call) {
    return evaluate_call(node);
  }
  if (auto g = atom(node)) {
    return *std::move(g);
  }
  fail_at(node.pos, "unknown graph '" + node.name + "'");
}

}  // namespace

Graph parse_dsl(std::string_view text) {
  const Node root = Parser(text).parse();
  try {
    return evaluate(root);
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("dsl: ") + e.what(), root.pos);
  } catch (const std::length_error& e) {
    throw ParseError(std::string("dsl: ") + e.what(), root.pos);
  }
}

}  // namespace p4spec
