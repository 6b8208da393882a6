#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "defsem/error.hpp"
#include "defsem/io.hpp"

namespace defsem::cli {

namespace {

constexpr int exit_domain = 1;
constexpr int exit_usage = 2;
constexpr int exit_negative = 3;

const std::vector<std::string> semantics_tokens = {"complete", "grounded", "preferred", "stable",
                                                   "co", "gr", "pr", "st"};

struct Input {
  std::string path;
  std::string format;  // empty: detect
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

ArgumentGraph load(const Input& input, std::istream& in) {
  const std::string text = slurp(input.path, in);
  GraphFormat format = GraphFormat::tgf;
  if (input.format == "apx") {
    format = GraphFormat::apx;
  } else if (input.format.empty()) {
    if (ends_with(input.path, ".apx")) {
      format = GraphFormat::apx;
    } else if (!ends_with(input.path, ".tgf") && text.find("arg(") != std::string::npos) {
      format = GraphFormat::apx;
    }
  }
  return parse_graph(text, format);
}

ArgSet parse_list(const std::string& csv) {
  std::vector<ArgId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.emplace_back(item);
  }
  return ArgSet(std::move(out));
}

int report_verdict(const EquivalenceVerdict& v, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << verdict_to_json(v);
  } else if (v.result) {
    out << (v.kind == EquivalenceKind::summarization ? "is-summarization" : "equivalent") << '\n';
  } else {
    out << (v.kind == EquivalenceKind::summarization ? "not a summarization" : "not equivalent")
        << '\n';
    if (v.witness) out << "witness: " << format_witness(*v.witness) << '\n';
  }
  return v.result ? 0 : exit_negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Defense semantics toolkit for abstract argumentation", "defsem"};
  app.require_subcommand(1);

  Input input;
  Input second;
  std::string semantics = "complete";
  std::string format;
  std::string arg_name;
  std::string reason_kind = "root";
  std::string equiv_kind;
  std::string restrict_to;

  auto add_input = [&](CLI::App* cmd, Input& target, const std::string& name) {
    cmd->add_option(name, target.path, "input graph (.tgf/.apx, '-' for stdin)")->required();
  };
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--input-format", input.format, "override input format")
        ->check(CLI::IsMember({"tgf", "apx"}));
  };
  auto add_semantics = [&](CLI::App* cmd) {
    cmd->add_option("-s,--semantics", semantics, "complete|grounded|preferred|stable")
        ->check(CLI::IsMember(semantics_tokens));
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("-f,--format", format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* ext = app.add_subcommand("extensions", "argument extensions");
  add_input(ext, input, "file");
  add_common(ext);
  add_semantics(ext);
  add_format(ext, {"text", "json"});

  auto* dgc = app.add_subcommand("defense-graph", "defense graph");
  add_input(dgc, input, "file");
  add_common(dgc);
  add_format(dgc, {"dot", "json"});

  auto* dext = app.add_subcommand("defense-extensions", "extensions of defenses");
  add_input(dext, input, "file");
  add_common(dext);
  add_semantics(dext);
  add_format(dext, {"text", "json"});

  auto* rsn = app.add_subcommand("reasons", "direct or root reasons for one argument");
  add_input(rsn, input, "file");
  add_common(rsn);
  add_semantics(rsn);
  add_format(rsn, {"text", "json"});
  rsn->add_option("--arg", arg_name, "argument name")->required();
  rsn->add_option("--kind", reason_kind, "direct|root")->check(CLI::IsMember({"direct", "root"}));

  auto* eqv = app.add_subcommand("equiv", "equivalence between two graphs");
  add_input(eqv, input, "file1");
  add_input(eqv, second, "file2");
  add_common(eqv);
  add_semantics(eqv);
  add_format(eqv, {"text", "json"});
  eqv->add_option("--kind", equiv_kind, "standard|strong|defense|root")
      ->required()
      ->check(CLI::IsMember({"standard", "strong", "defense", "root"}));
  eqv->add_option("--restrict", restrict_to, "comma-separated arguments (root only)");

  auto* sum = app.add_subcommand("summarize-check", "is the first graph a summarization of the second");
  add_input(sum, input, "summary");
  add_input(sum, second, "full");
  add_common(sum);
  add_semantics(sum);
  add_format(sum, {"text", "json"});

  auto* chk = app.add_subcommand("check", "correspondence, decomposition and kernel checks");
  add_input(chk, input, "file");
  add_common(chk);
  add_semantics(chk);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_usage;
  }
  second.format = input.format;

  try {
    const Semantics sem = parse_semantics(semantics);
    if (*ext) {
      const auto exts = extensions(load(input, in), sem);
      if (format == "json") {
        out << extensions_to_json(sem, exts);
      } else {
        for (const auto& e : exts) out << format_set(e) << '\n';
      }
    } else if (*dgc) {
      const auto dg = build_defense_graph(load(input, in));
      out << (format == "json" ? defense_graph_to_json(dg) : to_dot(dg));
    } else if (*dext) {
      const auto exts = defense_extensions(build_defense_graph(load(input, in)), sem);
      if (format == "json") {
        out << defense_extensions_to_json(sem, exts);
      } else {
        for (const auto& d : exts) out << format_set(d) << '\n';
      }
    } else if (*rsn) {
      const ArgId a(arg_name);
      const auto kind = parse_reason_kind(reason_kind);
      const auto bag = reasons(load(input, in), a, kind, sem);
      if (format == "json") {
        out << reasons_to_json(a, kind, sem, bag);
      } else {
        for (const auto& r : bag) out << format_set(r) << '\n';
      }
    } else if (*eqv) {
      const auto g1 = load(input, in);
      const auto g2 = load(second, in);
      EquivalenceVerdict v;
      switch (parse_equivalence_kind(equiv_kind)) {
        case EquivalenceKind::standard: v = standard_equivalent(g1, g2, sem); break;
        case EquivalenceKind::strong_co: v = strong_equivalent_co(g1, g2); break;
        case EquivalenceKind::defense: v = defense_equivalent(g1, g2, sem); break;
        default: {
          const ArgSet b = restrict_to.empty()
                               ? set_intersection(g1.argument_set(), g2.argument_set())
                               : parse_list(restrict_to);
          v = root_equivalent(g1, g2, b, sem);
        }
      }
      return report_verdict(v, format, out);
    } else if (*sum) {
      const auto small = load(input, in);
      const auto big = load(second, in);
      return report_verdict(is_summarization(small, big, sem), format, out);
    } else if (*chk) {
      const auto g = load(input, in);
      const auto report = correspondence_check(g, sem);
      const auto kernel = c_kernel(g);
      const auto dco = defense_extensions(build_defense_graph(g), Semantics::complete);
      const std::string tag = " (" + std::string(to_string(sem)) + ")";
      const std::vector<std::pair<std::string, bool>> rows = {
          {"d-map" + tag, report.d_map_holds},
          {"def-map" + tag, report.def_map_holds},
          {"decomposition", prop1_decompose(g).all() == g.argument_set()},
          {"kernel-defense", defense_extensions(build_defense_graph(kernel), Semantics::complete) == dco},
          {"kernel-complete", complete_extensions(kernel) == complete_extensions(g)},
      };
      bool all = true;
      for (const auto& [name, ok] : rows) {
        out << (ok ? "PASS " : "FAIL ") << name << '\n';
        all = all && ok;
      }
      if (report.d_map_witness) out << "witness d-map: " << format_set(*report.d_map_witness) << '\n';
      if (report.def_map_witness) out << "witness def-map: " << format_set(*report.def_map_witness) << '\n';
      return all ? 0 : exit_negative;
    }
  } catch (const std::exception& e) {
    err << "defsem: " << e.what() << '\n';
    return exit_domain;
  }
  return 0;
}

}  // namespace defsem::cli
