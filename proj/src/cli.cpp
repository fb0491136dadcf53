#include "relaxed/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "relaxed/cardinal.hpp"
#include "relaxed/collapse.hpp"
#include "relaxed/error.hpp"
#include "relaxed/hf.hpp"
#include "relaxed/io.hpp"
#include "relaxed/ordinal.hpp"
#include "relaxed/pairing.hpp"
#include "relaxed/well_order.hpp"
#include "relaxed/zfc.hpp"

namespace relaxed::cli {

namespace {

using io::json;

constexpr std::size_t kBracesBitLimit = 64;

std::string read_source(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw Error("cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& arg) {
  try {
    return json::parse(read_source(arg));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

// Set arguments are braces text or a decimal / 0x code.
hf::HFCode read_set(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && arg[first] == '{') return hf::encode(arg);
  return hf::parse_code(arg);
}

std::size_t powerset_bound() {
  if (const char* env = std::getenv("RELAXED_POWERSET_BOUND")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw Error(std::string("RELAXED_POWERSET_BOUND must be a natural number, got '") + env + "'");
    }
  }
  return hf::kDefaultPowersetBound;
}

std::string ordering_name(std::strong_ordering o) {
  if (o < 0) return "less";
  if (o > 0) return "greater";
  return "equal";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Context {
  std::ostream& out;
  bool json_output = false;

  void emit_set(const hf::HFCode& c) const {
    if (json_output) {
      json j = {{"code", c.str()}};
      if (c.bit_length() <= kBracesBitLimit) j["braces"] = hf::decode(c);
      out << j.dump() << "\n";
    } else if (c.bit_length() <= kBracesBitLimit) {
      out << c.str() << "  " << hf::decode(c) << "\n";
    } else {
      out << c.str() << "\n";
    }
  }

  void emit(const std::string& plain, const json& structured) const {
    out << (json_output ? structured.dump() : plain) << "\n";
  }
};

void add_hf(CLI::App& app, Context& ctx) {
  auto* hf_cmd = app.add_subcommand("hf", "hereditarily finite sets as bit-membership codes");
  hf_cmd->require_subcommand(1);

  auto add_set_op = [&](const char* name, const char* help, auto op) {
    auto* cmd = hf_cmd->add_subcommand(name, help);
    auto arg = std::make_shared<std::string>();
    cmd->add_option("set", *arg, "braces text or decimal/0x code")->required();
    cmd->callback([&ctx, arg, op] { ctx.emit_set(op(read_set(*arg))); });
  };

  {
    auto* cmd = hf_cmd->add_subcommand("eval", "code of a braces term (or numeric code)");
    auto arg = std::make_shared<std::string>();
    cmd->add_option("term", *arg)->required();
    cmd->callback([&ctx, arg] {
      const auto c = read_set(*arg);
      json j = {{"code", c.str()}};
      if (c.bit_length() <= kBracesBitLimit) j["braces"] = hf::decode(c);
      ctx.emit(c.str(), j);
    });
  }
  {
    auto* cmd = hf_cmd->add_subcommand("encode", "braces text to code");
    auto arg = std::make_shared<std::string>();
    cmd->add_option("braces", *arg)->required();
    cmd->callback([&ctx, arg] {
      const auto e = hf::encode_with_notes(*arg);
      json j = {{"code", e.code.str()}, {"duplicates_collapsed", e.duplicates}};
      std::string plain = e.code.str();
      if (e.duplicates) plain += "  (note: " + std::to_string(e.duplicates) + " duplicate member(s) collapsed)";
      ctx.emit(plain, j);
    });
  }
  {
    auto* cmd = hf_cmd->add_subcommand("decode", "code to braces text");
    auto arg = std::make_shared<std::string>();
    cmd->add_option("code", *arg)->required();
    cmd->callback([&ctx, arg] {
      const auto c = hf::parse_code(*arg);
      const auto text = hf::decode(c);
      ctx.emit(text, json{{"code", c.str()}, {"braces", text}});
    });
  }
  add_set_op("union", "union of the members", [](const hf::HFCode& a) { return hf::set_union_axiom(a); });
  add_set_op("powerset", "powerset (RELAXED_POWERSET_BOUND caps the popcount)",
             [](const hf::HFCode& a) { return hf::powerset(a, powerset_bound()); });
  add_set_op("closure", "transitive closure", [](const hf::HFCode& a) { return hf::transitive_closure(a); });
  add_set_op("choice", "least non-member", [](const hf::HFCode& a) { return hf::choice_fn(a); });
  add_set_op("foundation", "least member disjoint from the set",
             [](const hf::HFCode& a) { return hf::foundation_witness(a); });
  {
    auto* cmd = hf_cmd->add_subcommand("stage", "von Neumann stage");
    auto arg = std::make_shared<std::string>();
    cmd->add_option("set", *arg)->required();
    cmd->callback([&ctx, arg] {
      const auto s = hf::stage(read_set(*arg));
      ctx.emit(std::to_string(s), json{{"stage", s}});
    });
  }
  {
    auto* cmd = hf_cmd->add_subcommand("mem", "is m a member of n");
    auto n = std::make_shared<std::string>();
    auto m = std::make_shared<std::string>();
    cmd->add_option("n", *n)->required();
    cmd->add_option("m", *m)->required();
    cmd->callback([&ctx, n, m] {
      const bool r = hf::mem(read_set(*n), read_set(*m));
      ctx.emit(yes_no(r), json{{"member", r}});
    });
  }
}

void add_ordinal(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("ordinal", "ordinal notations below epsilon_0");
  cmd->require_subcommand(1);
  using ordinal::Ordinal;

  {
    auto* c = cmd->add_subcommand("cmp", "compare two ordinals");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->add_option("b", *b)->required();
    c->callback([&ctx, a, b] {
      const auto r = ordering_name(ordinal::cmp(ordinal::parse(*a), ordinal::parse(*b)));
      ctx.emit(r, json{{"order", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("succ", "successor");
    auto a = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->callback([&ctx, a] {
      const auto r = ordinal::to_string(ordinal::succ(ordinal::parse(*a)));
      ctx.emit(r, json{{"ordinal", r}, {"limit", false}});
    });
  }
  {
    auto* c = cmd->add_subcommand("sup", "supremum of a finite family");
    auto xs = std::make_shared<std::vector<std::string>>();
    c->add_option("ordinals", *xs)->required();
    c->callback([&ctx, xs] {
      std::vector<Ordinal> family;
      for (const auto& x : *xs) family.push_back(ordinal::parse(x));
      const auto r = ordinal::to_string(ordinal::sup(family));
      ctx.emit(r, json{{"ordinal", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("cofinality", "zero, one or omega");
    auto a = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->callback([&ctx, a] {
      const auto r = ordinal::to_string(ordinal::cofinality(ordinal::parse(*a)));
      ctx.emit(r, json{{"cofinality", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("pair", "index of (a, b) in the canonical order on N x N");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->add_option("b", *b)->required();
    c->callback([&ctx, a, b] {
      const auto r = ordinal::pair_index(ordinal::parse(*a), ordinal::parse(*b));
      ctx.emit(std::to_string(r), json{{"index", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("unpair", "inverse of pair");
    auto n = std::make_shared<std::string>();
    c->add_option("n", *n)->required();
    c->callback([&ctx, n] {
      const auto v = ordinal::parse(*n).finite_value();
      if (!v) throw DomainError("unpair: finite fragment only");
      const auto [a, b] = ordinal::unpair(*v);
      ctx.emit(std::to_string(a) + " " + std::to_string(b), json{{"first", a}, {"second", b}});
    });
  }
  {
    auto* c = cmd->add_subcommand("classify", "order type of a finite well-order (JSON label list)");
    auto w = std::make_shared<std::string>();
    c->add_option("order", *w)->required();
    c->callback([&ctx, w] {
      const auto r = ordinal::to_string(ordinal::classify_finite(io::well_order_from_json(read_json(*w))));
      ctx.emit(r, json{{"ordinal", r}});
    });
  }
}

void add_cardinal(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("cardinal", "finite and Beth cardinals (fin:<n>, beth:<ordinal>)");
  cmd->require_subcommand(1);

  auto binary = [&](const char* name, const char* help, auto op) {
    auto* c = cmd->add_subcommand(name, help);
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->add_option("b", *b)->required();
    c->callback([&ctx, a, b, op] {
      const auto r = cardinal::to_string(op(cardinal::parse(*a), cardinal::parse(*b)));
      ctx.emit(r, json{{"cardinal", r}});
    });
  };
  {
    auto* c = cmd->add_subcommand("cmp", "compare two cardinals");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->add_option("b", *b)->required();
    c->callback([&ctx, a, b] {
      const auto r = ordering_name(cardinal::card_cmp(cardinal::parse(*a), cardinal::parse(*b)));
      ctx.emit(r, json{{"order", r}});
    });
  }
  binary("product", "cardinality of a product", [](const auto& x, const auto& y) { return cardinal::card_product(x, y); });
  binary("union", "cardinality of a (disjoint) union",
         [](const auto& x, const auto& y) { return cardinal::card_union(x, y); });
  {
    auto* c = cmd->add_subcommand("beth", "Beth(index)");
    auto a = std::make_shared<std::string>();
    c->add_option("index", *a)->required();
    c->callback([&ctx, a] {
      const auto r = cardinal::to_string(cardinal::beth(ordinal::parse(*a)));
      ctx.emit(r, json{{"cardinal", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("rank", "least index whose Beth value exceeds the cardinal");
    auto a = std::make_shared<std::string>();
    c->add_option("cardinal", *a)->required();
    c->callback([&ctx, a] {
      const auto r = ordinal::to_string(cardinal::rank_of_cardinal(cardinal::parse(*a)));
      ctx.emit(r, json{{"rank", r}});
    });
  }
  {
    auto* c = cmd->add_subcommand("stronglimit", "is the cardinal a strong limit");
    auto a = std::make_shared<std::string>();
    c->add_option("cardinal", *a)->required();
    c->callback([&ctx, a] {
      const bool r = cardinal::is_strong_limit(cardinal::parse(*a));
      ctx.emit(yes_no(r), json{{"strong_limit", r}});
    });
  }
}

wf::WFGraph read_graph(const std::string& arg) {
  const bool inline_text = arg.find(':') != std::string::npos && !std::ifstream(arg);
  const auto text = inline_text ? arg : read_source(arg);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return io::graph_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
  }
  return wf::parse_graph_text(text);
}

void add_collapse(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("collapse", "collapse a well-founded graph into HF codes");
  auto arg = std::make_shared<std::string>();
  cmd->add_option("graph", *arg, "text (name: children...) or JSON pairing; file, inline or -")->required();
  cmd->callback([&ctx, arg] {
    const auto g = read_graph(*arg);
    const auto codes = wf::collapse(g);
    if (ctx.json_output) {
      ctx.out << io::collapse_to_json(g, codes, kBracesBitLimit).dump() << "\n";
      return;
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
      ctx.out << g.vertices().label(v) << ": " << codes[v].str();
      if (codes[v].bit_length() <= kBracesBitLimit) ctx.out << "  " << hf::decode(codes[v]);
      ctx.out << "\n";
    }
  });
}

zfc::ModelDesc read_model(const std::string& arg) {
  if (arg.rfind("vk:", 0) == 0) {
    const std::string desc = arg.substr(3);
    const auto slash = desc.find('/');
    auto number = [&](const std::string& s, std::size_t offset) -> std::size_t {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError("expected vk:<k> or vk:<k>/<stage>", 3 + offset);
      }
      return static_cast<std::size_t>(std::stoul(s));
    };
    const auto k = number(desc.substr(0, slash), 0);
    std::optional<std::size_t> scope;
    if (slash != std::string::npos) scope = number(desc.substr(slash + 1), slash + 1);
    return zfc::vk_model(k, scope);
  }
  return zfc::ModelDesc::from_pairing(io::pairing_from_json(read_json(arg)));
}

void add_zfc(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("zfc", "audit a finite membership model");
  cmd->require_subcommand(1);
  auto* check = cmd->add_subcommand("check", "check every axiom");
  auto model = std::make_shared<std::string>();
  auto opts = std::make_shared<zfc::CheckOptions>();
  check->add_option("model", *model, "vk:<k>[/<stage>] or JSON pairing (file, inline or -)")->required();
  check->add_flag("!--lenient", opts->strict_extensionality, "extensionality by mutual inclusion of rows");
  check->add_option("--separation-bound", opts->separation_row_bound, "largest row checked exhaustively");
  check->add_option("--samples", opts->replacement_samples, "replacement maps sampled per element");
  check->add_option("--seed", opts->seed, "replacement sampling seed");
  check->callback([&ctx, model, opts] {
    const auto m = read_model(*model);
    const auto reports = zfc::check_all(m, *opts);
    if (ctx.json_output) {
      ctx.out << io::to_json(reports).dump() << "\n";
      return;
    }
    for (const auto& r : reports) {
      std::string line = zfc::to_string(r.axiom);
      line.resize(16, ' ');
      std::string verdict = zfc::verdict_text(r);
      verdict.resize(18, ' ');
      line += verdict;
      if (r.verdict == zfc::Verdict::fail && r.witness) {
        std::string who;
        for (const auto& e : r.witness->elements) who += (who.empty() ? "" : ",") + e;
        line += "witness " + (who.empty() ? std::string("-") : who) + ": " + r.witness->detail;
      } else if (!r.note.empty()) {
        line += r.note;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      ctx.out << line << "\n";
    }
  });
}

void add_cb(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("cb", "bijection from injections A -> B and B -> A");
  auto arg = std::make_shared<std::string>();
  cmd->add_option("injections", *arg, R"(JSON {"A":[..],"B":[..],"f":{..},"g":{..}})")->required();
  cmd->callback([&ctx, arg] {
    const auto [f, g] = io::injections_from_json(read_json(*arg));
    const auto h = pairing::cantor_bernstein(f, g);
    if (ctx.json_output) {
      ctx.out << io::to_json(h).dump() << "\n";
      return;
    }
    for (std::size_t a = 0; a < h.image.size(); ++a) ctx.out << h.from.label(a) << " -> " << h.to.label(h.image[a]) << "\n";
  });
}

wo::RecursionCondition<std::size_t> builtin_rule(const std::string& rule) {
  if (rule == "count") {
    return [](const wo::PartialMap<std::size_t>& f, const std::string&) { return std::optional(f.size()); };
  }
  if (rule == "undefined") {
    return [](const wo::PartialMap<std::size_t>&, const std::string&) { return std::optional<std::size_t>{}; };
  }
  if (rule.rfind("count-below:", 0) == 0) {
    const auto digits = rule.substr(12);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("expected count-below:<k>", 12);
    }
    const auto k = static_cast<std::size_t>(std::stoul(digits));
    return [k](const wo::PartialMap<std::size_t>& f, const std::string&) {
      return f.size() < k ? std::optional(f.size()) : std::nullopt;
    };
  }
  throw ParseError("unknown rule '" + rule + "' (count, count-below:<k>, undefined)", 0);
}

void add_wo(CLI::App& app, Context& ctx) {
  auto* cmd = app.add_subcommand("wo", "finite well-orders and recursion");
  cmd->require_subcommand(1);
  {
    auto* c = cmd->add_subcommand("recurse", "maximal recursive function for a built-in rule");
    auto order = std::make_shared<std::string>();
    auto rule = std::make_shared<std::string>("count");
    c->add_option("order", *order, "JSON label list, least first")->required();
    c->add_option("--rule", *rule, "count | count-below:<k> | undefined");
    c->callback([&ctx, order, rule] {
      const auto w = io::well_order_from_json(read_json(*order));
      const auto f = wo::recurse(w, builtin_rule(*rule));
      json j = json::object();
      std::string plain;
      for (const auto& label : w.ranked()) {
        auto it = f.find(label);
        if (it == f.end()) break;
        j[label] = it->second;
        plain += label + " -> " + std::to_string(it->second) + "\n";
      }
      if (ctx.json_output) ctx.out << j.dump() << "\n";
      else ctx.out << plain;
    });
  }
  {
    auto* c = cmd->add_subcommand("iso", "maximal order-isomorphism between two well-orders");
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    c->add_option("a", *a)->required();
    c->add_option("b", *b)->required();
    c->callback([&ctx, a, b] {
      const auto wa = io::well_order_from_json(read_json(*a));
      const auto wb = io::well_order_from_json(read_json(*b));
      const auto f = wo::max_order_iso(wa, wb);
      json j = json::object();
      std::string plain;
      for (const auto& label : wa.ranked()) {
        auto it = f.find(label);
        if (it == f.end()) break;
        j[label] = it->second;
        plain += label + " -> " + it->second + "\n";
      }
      if (ctx.json_output) ctx.out << j.dump() << "\n";
      else ctx.out << plain;
    });
  }
  {
    auto* c = cmd->add_subcommand("fromchoice", "well-order a domain from a choice table");
    auto d = std::make_shared<std::string>();
    auto t = std::make_shared<std::string>();
    c->add_option("domain", *d, "JSON label list")->required();
    c->add_option("table", *t, R"(JSON {"": "a", "a": "b", ...})")->required();
    c->callback([&ctx, d, t] {
      const pairing::FinDomain dom(read_json(*d).get<std::vector<std::string>>());
      const auto table = io::choice_table_from_json(read_json(*t));
      const auto w = wo::well_order_from_choice(dom, table);
      std::string plain;
      for (const auto& l : w.ranked()) plain += (plain.empty() ? "" : " < ") + l;
      ctx.emit(plain, io::to_json(w));
    });
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out};
  CLI::App app{"relaxed: hereditarily finite sets, ordinal notations, collapse and ZFC audits", "relaxed"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", ctx.json_output, "machine-readable output");

  add_hf(app, ctx);
  add_ordinal(app, ctx);
  add_cardinal(app, ctx);
  add_collapse(app, ctx);
  add_zfc(app, ctx);
  add_cb(app, ctx);
  add_wo(app, ctx);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("relaxed");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace relaxed::cli
