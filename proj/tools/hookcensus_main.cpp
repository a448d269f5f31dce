// Command-line front end: census counts, stack-sorting fertility, hook
// configuration listings and renderings, oracle cross-checks, and batch
// tables. Exit codes: 0 success, 1 usage or parse error, 2 verification
// mismatch, 3 I/O error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookcensus/batch.hpp"
#include "hookcensus/formulas.hpp"
#include "hookcensus/json_io.hpp"
#include "hookcensus/render.hpp"

using namespace hookcensus;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Permutation parse_perm_arg(const std::string& text) {
  std::string err;
  auto p = Permutation::try_parse(text, &err);
  if (!p) throw UsageError(err);
  return *p;
}

std::set<int> parse_int_set(const std::string& text, const std::string& what) {
  std::set<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      out.insert(std::stoi(cur));
    } catch (const std::exception&) {
      throw UsageError("bad " + what + " element '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

TreeFamily parse_family(const std::string& text) {
  if (text == "n") return TreeFamily::ntree();
  if (text.rfind("s:", 0) == 0) {
    std::set<int> S = parse_int_set(text.substr(2), "family set");
    if (!S.count(0)) throw UsageError("family s:<set> must contain 0");
    return TreeFamily::stree(std::move(S));
  }
  if (text.rfind("dary:", 0) == 0) {
    int d = 0;
    try {
      d = std::stoi(text.substr(5));
    } catch (const std::exception&) {
      throw UsageError("bad arity in '" + text + "'");
    }
    if (d < 1) throw UsageError("family dary:<d> needs d >= 1");
    return TreeFamily::dary(d);
  }
  throw UsageError("bad family '" + text + "' (expected n, s:<set>, or dary:<d>)");
}

// "R=<set>,p=<int>": bare numerals after R= extend the set until p= appears.
std::pair<std::set<int>, int> parse_refine(const std::string& text) {
  std::set<int> R;
  std::optional<int> p;
  bool in_r = false;
  std::string cur;
  std::vector<std::string> tokens;
  for (char c : text) {
    if (c == ',') {
      tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  tokens.push_back(cur);
  for (const std::string& tok : tokens) {
    try {
      if (tok.rfind("R=", 0) == 0) {
        in_r = true;
        if (tok.size() > 2) R.insert(std::stoi(tok.substr(2)));
      } else if (tok.rfind("p=", 0) == 0) {
        in_r = false;
        p = std::stoi(tok.substr(2));
      } else if (in_r) {
        R.insert(std::stoi(tok));
      } else {
        throw UsageError("unexpected refine token '" + tok + "'");
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad refine token '" + tok + "'");
    }
  }
  if (!p) throw UsageError("refine needs p=<int>");
  return {std::move(R), *p};
}

std::string set_to_string(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

void validate_refine(const TreeFamily& fam, const std::set<int>& R) {
  switch (fam.kind) {
    case TreeFamily::Kind::NTree:
      for (int x : R) {
        if (x < 0) throw UsageError("refine set must be nonnegative");
      }
      return;
    case TreeFamily::Kind::STree:
      for (int x : R) {
        if (!fam.child_counts.count(x)) {
          throw UsageError("refine set " + set_to_string(R) + " is not a subset of the family set");
        }
      }
      return;
    case TreeFamily::Kind::Dary:
      for (int x : R) {
        if (x < 0 || x > fam.arity) {
          throw UsageError("refine set " + set_to_string(R) + " is not within {0,...,d}");
        }
      }
      return;
  }
}

int run_fertility(const std::string& perm_text, bool by_valleys, bool by_descents, bool json) {
  Permutation pi = parse_perm_arg(perm_text);
  if (by_valleys && by_descents) throw UsageError("choose one of --by-valleys / --by-descents");
  if (!by_valleys && !by_descents) {
    BigCount f = fertility(pi);
    if (json) {
      nlohmann::json j;
      j["pi"] = pi.entries();
      j["value"] = f.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << f.str() << "\n";
    }
    return 0;
  }
  const int n = pi.size();
  const int hi = by_valleys ? (n + 1) / 2 : std::max(0, n - 1);
  std::vector<std::pair<int, BigCount>> rows;
  for (int s = 0; s <= hi; ++s) {
    BigCount v = by_valleys ? fertility_by_valleys(pi, s) : fertility_by_descents(pi, s);
    if (v != 0) rows.push_back({s, std::move(v)});
  }
  if (json) {
    nlohmann::json j;
    j["pi"] = pi.entries();
    j["by"] = by_valleys ? "valleys" : "descents";
    j["rows"] = nlohmann::json::array();
    for (const auto& [s, v] : rows) j["rows"].push_back({s, v.str()});
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [s, v] : rows) std::cout << s << "\t" << v.str() << "\n";
  }
  return 0;
}

int run_count(const std::string& perm_text, const std::string& family_text,
              const std::string& refine_text, bool json) {
  Permutation pi = parse_perm_arg(perm_text);
  CensusQuery query;
  query.family = parse_family(family_text);
  if (!refine_text.empty()) {
    auto [R, p] = parse_refine(refine_text);
    validate_refine(query.family, R);
    query.refine = {std::move(R), p};
  }
  BigCount value = count_census(pi, query);
  if (json) {
    nlohmann::json j;
    j["pi"] = pi.entries();
    j["family"] = family_text;
    if (query.refine) {
      j["refine"]["R"] = std::vector<int>(query.refine->first.begin(), query.refine->first.end());
      j["refine"]["p"] = query.refine->second;
    }
    j["value"] = value.str();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << value.str() << "\n";
  }
  return 0;
}

int run_hooks(const std::string& perm_text, const std::string& filter_text,
              const std::string& render_mode, const std::string& out_path, bool json) {
  Permutation pi = parse_perm_arg(perm_text);
  std::vector<HookConfiguration> configs = enumerate_configs(pi);
  if (!filter_text.empty()) {
    if (filter_text.rfind("S=", 0) != 0) throw UsageError("filter must look like S=<set>");
    ConfigFilter filter;
    filter.allowed_w = parse_int_set(filter_text.substr(2), "filter set");
    if (!filter.allowed_w->count(0)) throw UsageError("filter set must contain 0");
    configs = filter_configs(std::move(configs), filter);
  }
  std::vector<std::pair<HookConfiguration, ColoredDiagram>> items;
  items.reserve(configs.size());
  for (const auto& c : configs) items.push_back({c, color(c)});

  if (json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [config, diagram] : items) arr.push_back(diagram_to_json(config, diagram));
    std::cout << arr.dump() << "\n";
  } else {
    std::cout << items.size() << (items.size() == 1 ? " configuration" : " configurations")
              << "\n";
    int idx = 0;
    for (const auto& [config, diagram] : items) {
      std::cout << "#" << ++idx << " hooks:";
      if (config.hooks.empty()) std::cout << " (none)";
      for (const Hook& h : config.hooks) {
        std::cout << " (" << h.sw << "," << h.ne << ")";
      }
      std::cout << "  q = (";
      for (size_t t = 0; t < diagram.q.size(); ++t) {
        std::cout << (t ? "," : "") << diagram.q[t];
      }
      std::cout << ")  theta = {";
      for (size_t t = 0; t < diagram.theta.size(); ++t) {
        std::cout << (t ? "," : "") << diagram.theta[t];
      }
      std::cout << "}\n";
    }
  }

  if (!render_mode.empty()) {
    std::string rendered;
    if (render_mode == "svg") {
      rendered = render_svg(items);
    } else if (render_mode == "ascii") {
      for (const auto& [config, diagram] : items) rendered += render_ascii(config, diagram) + "\n";
    } else {
      throw UsageError("render mode must be svg or ascii");
    }
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::trunc | std::ios::binary);
      if (!out) throw IoError("cannot open " + out_path);
      out << rendered;
      if (!out) throw IoError("write failed: " + out_path);
    }
  }
  return 0;
}

int run_check_cmd(int n, const std::string& suite) {
  CheckReport report;
  try {
    report = run_check(n, suite);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  if (report.pass()) {
    std::cout << "PASS (" << report.compared << " permutations compared)\n";
    return 0;
  }
  std::cout << "FAIL (" << report.mismatches.size() << " mismatches over " << report.compared
            << " permutations)\n";
  for (const auto& line : report.mismatches) std::cout << "  " << line << "\n";
  return 2;
}

int run_table(int n, const std::string& stat, const std::string& out_path,
              const std::string& cache_path) {
  if (stat != "fertility") throw UsageError("only --stat fertility is supported");
  if (n < 1) throw UsageError("table needs n >= 1");
  std::optional<std::string> cache;
  if (!cache_path.empty()) cache = cache_path;
  try {
    write_fertility_table(n, out_path, cache);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hook configuration census and stack-sorting fertility toolkit"};
  app.require_subcommand(1);

  std::string perm_text, family_text, refine_text, filter_text, render_mode, out_path,
      cache_path, suite = "all", stat = "fertility";
  bool by_valleys = false, by_descents = false, json = false;
  int n = 0;

  auto* fert = app.add_subcommand("fertility", "number of stack-sorting preimages");
  fert->add_option("perm", perm_text, "permutation in one-line notation")->required();
  fert->add_flag("--by-valleys", by_valleys, "distribution over valley counts");
  fert->add_flag("--by-descents", by_descents, "distribution over descent counts");
  fert->add_flag("--json", json, "JSON output");

  auto* count = app.add_subcommand("count", "decreasing trees with the given postorder");
  count->add_option("perm", perm_text)->required();
  count->add_option("--family", family_text, "n, s:<set>, or dary:<d>")->required();
  count->add_option("--refine", refine_text,
                    "R=<set>,p=<int>: exactly p vertices with child count in R");
  count->add_flag("--json", json);

  auto* hooks = app.add_subcommand("hooks", "list or draw the valid hook configurations");
  hooks->add_option("perm", perm_text)->required();
  hooks->add_option("--filter", filter_text, "S=<set>: keep multiplicities inside the set");
  hooks->add_option("--render", render_mode, "svg or ascii");
  hooks->add_option("--out", out_path, "output path for the rendering");
  hooks->add_flag("--json", json);

  auto* check = app.add_subcommand("check", "formula-versus-oracle sweep over all of S_n");
  check->add_option("--n", n, "permutation size")->required();
  check->add_option("--suite", suite, "fertility, census, hooks, or all");

  auto* table = app.add_subcommand("table", "CSV of a statistic over all of S_n");
  table->add_option("--n", n)->required();
  table->add_option("--stat", stat, "statistic (fertility)");
  table->add_option("--out", out_path, "CSV path")->required();
  table->add_option("--cache", cache_path, "JSON-lines value cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (fert->parsed()) return run_fertility(perm_text, by_valleys, by_descents, json);
    if (count->parsed()) return run_count(perm_text, family_text, refine_text, json);
    if (hooks->parsed()) return run_hooks(perm_text, filter_text, render_mode, out_path, json);
    if (check->parsed()) return run_check_cmd(n, suite);
    if (table->parsed()) return run_table(n, stat, out_path, cache_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
