// lsc — command-line front end for the lambdascale library. Uses only the
// public C interface so it doubles as a smoke test of the shared library.

#include <cctype>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lambdascale.h"

namespace {

const char* k_usage =
    "usage: lsc <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  parse <expr> [--dot FILE]\n"
    "      print the canonical form; optionally write a Graphviz rendering\n"
    "  reduce <expr> [--budget N] [--trace FILE]\n"
    "      normalize under a step budget (default 1000); print result and\n"
    "      status (normal | budget-exhausted)\n"
    "  equiv <expr1> <expr2> [--budget N] [--trace FILE]\n"
    "      search for a proof of convertibility (budget default 5000);\n"
    "      exit 0 when proved, 2 when unknown\n"
    "  translate <rel-expr> [--base EXPR] [--scale S] [--simplified]\n"
    "      translate a relative term against the observation context\n"
    "      (defaults: --base a --scale e); --simplified uses the one-binder\n"
    "      shortcut form and requires an abstraction\n"
    "  check irq|lambda|relative [--seed S] [--count N] [--depth D]\n"
    "        [--budget B] [--base EXPR] [--scale S]\n"
    "      run a generated instance suite (defaults: seed 0, count 50,\n"
    "      depth 4, budget 5000); one report line per instance; exit 0 iff\n"
    "      every instance was proved, else 2\n"
    "  repl\n"
    "      interactive loop over the same commands, plus\n"
    "      'let <name> = <expr>' textual macros and 'quit'\n"
    "\n"
    "exit codes: 0 success/proved, 1 usage or input error, 2 not proved\n";

int usage_error(const std::string& msg) {
  std::cerr << "lsc: " << msg << "\n" << k_usage;
  return 1;
}

int api_error(lsc_status s) {
  std::cerr << "lsc: " << lsc_status_name(s) << ": " << lsc_last_error()
            << "\n";
  return 1;
}

// Owned-string helper so every char* from the library is released.
std::string take_string(char* s) {
  std::string out = s == nullptr ? "" : s;
  lsc_string_free(s);
  return out;
}

struct TermHandle {
  lsc_term* t = nullptr;
  ~TermHandle() { lsc_term_free(t); }
  TermHandle() = default;
  TermHandle(const TermHandle&) = delete;
  TermHandle& operator=(const TermHandle&) = delete;
};

struct ParsedArgs {
  std::vector<std::string> positional;
  std::map<std::string, std::string> values;
  std::set<std::string> flags;
};

// Generic option scan: names in value_opts take one argument, names in
// flag_opts stand alone. Anything else starting with "--" is an error.
std::optional<ParsedArgs> scan_args(const std::vector<std::string>& args,
                                    const std::set<std::string>& value_opts,
                                    const std::set<std::string>& flag_opts,
                                    std::string* err) {
  ParsedArgs out;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) == 0) {
      if (flag_opts.contains(a)) {
        out.flags.insert(a);
      } else if (value_opts.contains(a)) {
        if (i + 1 >= args.size()) {
          *err = "option " + a + " needs a value";
          return std::nullopt;
        }
        out.values[a] = args[++i];
      } else {
        *err = "unknown option " + a;
        return std::nullopt;
      }
    } else {
      out.positional.push_back(a);
    }
  }
  return out;
}

bool parse_long(const std::string& s, long* out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, *out);
  return ec == std::errc() && p == e;
}

bool parse_u64(const std::string& s, std::uint64_t* out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, *out);
  return ec == std::errc() && p == e;
}

bool write_file(const std::string& path, const std::string& content,
                std::string* err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    *err = "cannot open " + path + " for writing";
    return false;
  }
  f << content;
  f.flush();
  if (!f) {
    *err = "write to " + path + " failed";
    return false;
  }
  return true;
}

int cmd_parse(const std::vector<std::string>& args) {
  std::string err;
  auto parsed = scan_args(args, {"--dot"}, {}, &err);
  if (!parsed) return usage_error(err);
  if (parsed->positional.size() != 1)
    return usage_error("parse needs exactly one expression");

  TermHandle t;
  lsc_status s = lsc_term_parse(parsed->positional[0].c_str(), &t.t);
  if (s != LSC_OK) return api_error(s);

  char* text = nullptr;
  s = lsc_term_print(t.t, &text);
  if (s != LSC_OK) return api_error(s);
  std::cout << take_string(text) << "\n";

  if (auto it = parsed->values.find("--dot"); it != parsed->values.end()) {
    char* dot = nullptr;
    s = lsc_term_to_dot(t.t, &dot);
    if (s != LSC_OK) return api_error(s);
    if (!write_file(it->second, take_string(dot), &err)) {
      std::cerr << "lsc: " << err << "\n";
      return 1;
    }
  }
  return 0;
}

int cmd_reduce(const std::vector<std::string>& args) {
  std::string err;
  auto parsed = scan_args(args, {"--budget", "--trace"}, {}, &err);
  if (!parsed) return usage_error(err);
  if (parsed->positional.size() != 1)
    return usage_error("reduce needs exactly one expression");

  long budget = -1;
  if (auto it = parsed->values.find("--budget"); it != parsed->values.end())
    if (!parse_long(it->second, &budget) || budget < 0)
      return usage_error("--budget needs a nonnegative integer");

  TermHandle t;
  lsc_status s = lsc_term_parse(parsed->positional[0].c_str(), &t.t);
  if (s != LSC_OK) return api_error(s);

  TermHandle result;
  char* trace = nullptr;
  int normal = 0;
  s = lsc_normalize(t.t, budget, &result.t, &trace, &normal);
  if (s != LSC_OK) return api_error(s);
  std::string trace_text = take_string(trace);

  char* text = nullptr;
  s = lsc_term_print(result.t, &text);
  if (s != LSC_OK) return api_error(s);
  std::cout << take_string(text) << "\n"
            << "status: " << (normal ? "normal" : "budget-exhausted") << "\n";

  if (auto it = parsed->values.find("--trace"); it != parsed->values.end())
    if (!write_file(it->second, trace_text, &err)) {
      std::cerr << "lsc: " << err << "\n";
      return 1;
    }
  return 0;
}

int cmd_equiv(const std::vector<std::string>& args) {
  std::string err;
  auto parsed = scan_args(args, {"--budget", "--trace"}, {}, &err);
  if (!parsed) return usage_error(err);
  if (parsed->positional.size() != 2)
    return usage_error("equiv needs exactly two expressions");

  long budget = -1;
  if (auto it = parsed->values.find("--budget"); it != parsed->values.end())
    if (!parse_long(it->second, &budget) || budget < 0)
      return usage_error("--budget needs a nonnegative integer");

  TermHandle a, b;
  lsc_status s = lsc_term_parse(parsed->positional[0].c_str(), &a.t);
  if (s != LSC_OK) return api_error(s);
  s = lsc_term_parse(parsed->positional[1].c_str(), &b.t);
  if (s != LSC_OK) return api_error(s);

  int verdict = 1;
  char* trace = nullptr;
  s = lsc_equiv(a.t, b.t, budget, &verdict, &trace);
  if (s != LSC_OK) return api_error(s);
  std::string trace_text = take_string(trace);

  std::cout << (verdict == 0 ? "proved" : "unknown") << "\n";
  if (auto it = parsed->values.find("--trace"); it != parsed->values.end())
    if (!write_file(it->second, trace_text, &err)) {
      std::cerr << "lsc: " << err << "\n";
      return 1;
    }
  return verdict == 0 ? 0 : 2;
}

int cmd_translate(const std::vector<std::string>& args) {
  std::string err;
  auto parsed =
      scan_args(args, {"--base", "--scale"}, {"--simplified"}, &err);
  if (!parsed) return usage_error(err);
  if (parsed->positional.size() != 1)
    return usage_error("translate needs exactly one relative expression");

  std::string base = "a";
  std::string scale = "e";
  if (auto it = parsed->values.find("--base"); it != parsed->values.end())
    base = it->second;
  if (auto it = parsed->values.find("--scale"); it != parsed->values.end())
    scale = it->second;

  char* out = nullptr;
  lsc_status s = lsc_translate(base.c_str(), scale.c_str(),
                               parsed->positional[0].c_str(),
                               parsed->flags.contains("--simplified") ? 1 : 0,
                               &out);
  if (s != LSC_OK) return api_error(s);
  std::cout << take_string(out) << "\n";
  return 0;
}

int cmd_check(const std::vector<std::string>& args) {
  std::string err;
  auto parsed = scan_args(
      args, {"--seed", "--count", "--depth", "--budget", "--base", "--scale"},
      {}, &err);
  if (!parsed) return usage_error(err);
  if (parsed->positional.size() != 1)
    return usage_error("check needs one suite name: irq, lambda or relative");
  const std::string& kind = parsed->positional[0];
  if (kind != "irq" && kind != "lambda" && kind != "relative")
    return usage_error("unknown suite '" + kind + "'");

  std::uint64_t seed = 0;
  long count = 50, depth = 4, budget = -1;
  if (auto it = parsed->values.find("--seed"); it != parsed->values.end())
    if (!parse_u64(it->second, &seed))
      return usage_error("--seed needs a nonnegative integer");
  if (auto it = parsed->values.find("--count"); it != parsed->values.end())
    if (!parse_long(it->second, &count) || count < 0)
      return usage_error("--count needs a nonnegative integer");
  if (auto it = parsed->values.find("--depth"); it != parsed->values.end())
    if (!parse_long(it->second, &depth) || depth < 0)
      return usage_error("--depth needs a nonnegative integer");
  if (auto it = parsed->values.find("--budget"); it != parsed->values.end())
    if (!parse_long(it->second, &budget) || budget < 0)
      return usage_error("--budget needs a nonnegative integer");

  std::string base = "a";
  std::string scale = "e";
  if (auto it = parsed->values.find("--base"); it != parsed->values.end())
    base = it->second;
  if (auto it = parsed->values.find("--scale"); it != parsed->values.end())
    scale = it->second;

  char* report = nullptr;
  int all_proved = 0;
  lsc_status s = lsc_check(kind.c_str(), base.c_str(), scale.c_str(), seed,
                           static_cast<int>(count), static_cast<int>(depth),
                           budget, &report, &all_proved);
  if (s != LSC_OK) return api_error(s);
  std::cout << take_string(report);
  return all_proved ? 0 : 2;
}

// ---- repl ------------------------------------------------------------

// Split a command line into chunks: whitespace separates, but parentheses
// and braces keep an expression together, so `equiv ((a b) c) d` yields
// three chunks.
std::vector<std::string> split_chunks(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) && depth == 0) {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
      continue;
    }
    if (c == '(' || c == '{') ++depth;
    if ((c == ')' || c == '}') && depth > 0) --depth;
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Replace whole-identifier occurrences of macro names with their bodies.
// Macro bodies are stored fully expanded, so one pass suffices.
std::string expand_macros(const std::string& text,
                          const std::map<std::string, std::string>& macros) {
  std::string out;
  size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || text[i] == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      auto it = macros.find(word);
      out += it == macros.end() ? word : it->second;
      i = j;
    } else {
      out += text[i];
      ++i;
    }
  }
  return out;
}

int cmd_repl() {
  std::map<std::string, std::string> macros;
  std::string line;
  std::cout << "lsc repl — commands: parse, reduce, equiv, translate, check, "
               "let <name> = <expr>, quit\n";
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) {
      std::cout << "\n";
      return 0;
    }
    std::vector<std::string> chunks = split_chunks(line);
    if (chunks.empty()) continue;
    std::string cmd = chunks[0];
    std::vector<std::string> rest(chunks.begin() + 1, chunks.end());

    if (cmd == "quit" || cmd == "exit") return 0;
    if (cmd == "help") {
      std::cout << k_usage;
      continue;
    }
    if (cmd == "let") {
      // let <name> = <expr...>
      if (rest.size() < 3 || rest[1] != "=") {
        std::cerr << "lsc: let <name> = <expr>\n";
        continue;
      }
      const std::string& name = rest[0];
      bool ok = !name.empty() &&
                (std::isalpha(static_cast<unsigned char>(name[0])) ||
                 name[0] == '_');
      for (char c : name)
        ok = ok && (std::isalnum(static_cast<unsigned char>(c)) || c == '_');
      if (!ok) {
        std::cerr << "lsc: invalid macro name '" << name << "'\n";
        continue;
      }
      std::string body;
      for (size_t i = 2; i < rest.size(); ++i) {
        if (i > 2) body += ' ';
        body += rest[i];
      }
      macros[name] = expand_macros(body, macros);
      continue;
    }

    // Same commands as the top level, with macros expanded in every
    // argument that is not an option name or an option value we know to be
    // a number/path. Simplest faithful rule: expand non-option chunks and
    // the values of --base/--scale.
    std::vector<std::string> expanded;
    for (size_t i = 0; i < rest.size(); ++i) {
      const std::string& a = rest[i];
      if (a.rfind("--", 0) == 0) {
        expanded.push_back(a);
        if ((a == "--budget" || a == "--trace" || a == "--dot" ||
             a == "--seed" || a == "--count" || a == "--depth") &&
            i + 1 < rest.size()) {
          expanded.push_back(rest[++i]);  // literal value
        } else if ((a == "--base" || a == "--scale") && i + 1 < rest.size()) {
          expanded.push_back(expand_macros(rest[++i], macros));
        }
        continue;
      }
      expanded.push_back(cmd == "check" && i == 0
                             ? a  // suite name, not an expression
                             : expand_macros(a, macros));
    }

    if (cmd == "parse") {
      cmd_parse(expanded);
    } else if (cmd == "reduce") {
      cmd_reduce(expanded);
    } else if (cmd == "equiv") {
      cmd_equiv(expanded);
    } else if (cmd == "translate") {
      cmd_translate(expanded);
    } else if (cmd == "check") {
      cmd_check(expanded);
    } else {
      std::cerr << "lsc: unknown command '" << cmd << "'\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage_error("missing command");
  std::string cmd = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());

  if (cmd == "--help" || cmd == "-h" || cmd == "help") {
    std::cout << k_usage;
    return 0;
  }
  if (cmd == "--version") {
    std::cout << lsc_version() << "\n";
    return 0;
  }
  if (cmd == "parse") return cmd_parse(rest);
  if (cmd == "reduce") return cmd_reduce(rest);
  if (cmd == "equiv") return cmd_equiv(rest);
  if (cmd == "translate") return cmd_translate(rest);
  if (cmd == "check") return cmd_check(rest);
  if (cmd == "repl") {
    if (!rest.empty()) return usage_error("repl takes no arguments");
    return cmd_repl();
  }
  return usage_error("unknown command '" + cmd + "'");
}
