#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "defsem/error.hpp"
#include "defsem/io.hpp"

namespace defsem {

namespace {

ArgId checked_name(std::string_view token, std::size_t line) {
  const bool ok = !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
  if (!ok || token == "EMPTY") {
    throw Error(ErrorKind::invalid_name,
                "line " + std::to_string(line) + ": '" + std::string(token) + "'");
  }
  return ArgId(token);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

ArgumentGraph assemble(std::vector<ArgId> args, std::vector<std::pair<Attack, std::size_t>> attacks) {
  std::vector<ArgId> sorted = args;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorKind::duplicate_argument, dup->name());
  }
  std::vector<Attack> plain;
  for (auto& [att, line] : attacks) {
    for (const ArgId* end : {&att.from, &att.to}) {
      if (!std::binary_search(sorted.begin(), sorted.end(), *end)) {
        throw Error(ErrorKind::undeclared_endpoint,
                    "line " + std::to_string(line) + ": '" + end->name() + "'");
      }
    }
    plain.push_back(std::move(att));
  }
  return ArgumentGraph(std::move(args), std::move(plain));
}

}  // namespace

ArgumentGraph parse_tgf(std::string_view text) {
  std::vector<ArgId> args;
  std::vector<std::pair<Attack, std::size_t>> attacks;
  bool in_edges = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (!in_edges) {
      if (tokens.size() == 1 && tokens[0] == "#") {
        in_edges = true;
      } else {
        args.push_back(checked_name(tokens[0], line_no));
      }
      continue;
    }
    if (tokens.size() < 2) {
      throw Error(ErrorKind::syntax_error,
                  "line " + std::to_string(line_no) + ": expected 'source target'");
    }
    attacks.emplace_back(Attack{checked_name(tokens[0], line_no), checked_name(tokens[1], line_no)},
                         line_no);
  }
  if (!in_edges) throw Error(ErrorKind::missing_separator, "no '#' line separating nodes from edges");
  return assemble(std::move(args), std::move(attacks));
}

ArgumentGraph parse_apx(std::string_view text) {
  std::vector<ArgId> args;
  std::vector<std::pair<Attack, std::size_t>> attacks;
  std::size_t pos = 0;
  std::size_t line = 1;

  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      if (text[pos] == '\n') ++line;
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> Error {
    return Error(ErrorKind::syntax_error, "line " + std::to_string(line) + ": " + what);
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };
  auto word = [&] {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) throw fail("expected identifier");
    return text.substr(start, pos - start);
  };

  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    const std::size_t fact_line = line;
    const auto head = word();
    expect('(');
    if (head == "arg") {
      args.push_back(checked_name(word(), fact_line));
    } else if (head == "att") {
      auto from = checked_name(word(), fact_line);
      expect(',');
      auto to = checked_name(word(), fact_line);
      attacks.emplace_back(Attack{std::move(from), std::move(to)}, fact_line);
    } else {
      throw fail("unknown fact '" + std::string(head) + "'");
    }
    expect(')');
    expect('.');
  }
  return assemble(std::move(args), std::move(attacks));
}

ArgumentGraph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::tgf ? parse_tgf(text) : parse_apx(text);
}

std::string to_tgf(const ArgumentGraph& g) {
  std::ostringstream out;
  for (const auto& a : g.arguments()) out << a.name() << '\n';
  out << "#\n";
  for (const auto& att : g.attacks()) out << att.from.name() << ' ' << att.to.name() << '\n';
  return out.str();
}

std::string to_apx(const ArgumentGraph& g) {
  std::ostringstream out;
  for (const auto& a : g.arguments()) out << "arg(" << a.name() << ").\n";
  for (const auto& att : g.attacks()) {
    out << "att(" << att.from.name() << ',' << att.to.name() << ").\n";
  }
  return out.str();
}

std::string to_dot(const ArgumentGraph& g) {
  std::ostringstream out;
  out << "digraph AF {\n";
  for (const auto& a : g.arguments()) out << "  \"" << a.name() << "\";\n";
  for (const auto& att : g.attacks()) {
    out << "  \"" << att.from.name() << "\" -> \"" << att.to.name() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const DefenseGraph& dg) {
  std::ostringstream out;
  out << "digraph DG {\n";
  const auto nodes = dg.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << to_string(nodes[i]) << "\", shape="
        << (nodes[i].kind == NodeKind::defense ? "ellipse" : "box") << "];\n";
  }
  for (const auto& [from, to] : dg.edges()) out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

namespace {

template <class Range, class Fn>
std::string braced(const Range& r, Fn&& render) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : r) {
    if (!first) out += ',';
    out += render(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string format_set(const ArgSet& s) {
  return braced(s, [](const ArgId& a) { return a.name(); });
}

std::string format_set(const DefenseExtension& d) {
  return braced(d, [](const DefenseNode& n) { return to_string(n); });
}

std::string format_set(const ReasonSet& r) {
  return braced(r.members(), [](const DefenderSlot& s) { return to_string(s); });
}

std::string format_witness(const Witness& w) {
  struct Visitor {
    std::string operator()(const ExtensionWitness& x) const {
      return "extension " + format_set(x.extension) + " only in " +
             (x.present_in == 1 ? "first" : "second");
    }
    std::string operator()(const DefenseExtensionWitness& x) const {
      return "defense extension " + format_set(x.extension) + " only in " +
             (x.present_in == 1 ? "first" : "second");
    }
    std::string operator()(const KernelWitness& x) const {
      std::string out = "kernels differ:";
      auto attacks = [](const std::vector<Attack>& v) {
        return braced(v, [](const Attack& a) { return a.from.name() + "->" + a.to.name(); });
      };
      if (!x.arguments_only_in_first.empty()) out += " arguments only in first " + format_set(x.arguments_only_in_first) + ";";
      if (!x.arguments_only_in_second.empty()) out += " arguments only in second " + format_set(x.arguments_only_in_second) + ";";
      if (!x.attacks_only_in_first.empty()) out += " attacks only in first " + attacks(x.attacks_only_in_first) + ";";
      if (!x.attacks_only_in_second.empty()) out += " attacks only in second " + attacks(x.attacks_only_in_second) + ";";
      if (out.back() == ';') out.pop_back();
      return out;
    }
    std::string operator()(const ReasonWitness& x) const {
      auto bag = [](const ReasonBag& b) {
        return braced(b, [](const ReasonSet& r) { return format_set(r); });
      };
      return "root reasons of " + x.argument.name() + " differ: " + bag(x.first) + " vs " +
             bag(x.second);
    }
    std::string operator()(const ReasonProfileWitness& x) const {
      std::string args, sets;
      for (const auto& a : x.arguments) args += (args.empty() ? "" : ",") + a.name();
      for (const auto& r : x.profile) sets += (sets.empty() ? "" : ",") + format_set(r);
      return "root reasons of (" + args + ") = (" + sets + ") occur " +
             std::to_string(x.in_first) + " time(s) in first, " + std::to_string(x.in_second) +
             " in second";
    }
    std::string operator()(const ArgumentSetWitness& x) const {
      if (x.missing_from_full.empty()) {
        return "summary arguments are not a proper non-empty subset of the full graph's";
      }
      return "arguments missing from full graph " + format_set(x.missing_from_full);
    }
  };
  return std::visit(Visitor{}, w);
}

}  // namespace defsem
