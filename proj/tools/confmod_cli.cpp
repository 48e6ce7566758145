#include "confmod/confmod.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string preset;
  std::string delta = "0";
  std::string alpha = "alpha";
  std::string lie;
  std::string format = "text";
  std::string expr;
  std::string target;
  std::uint32_t n = 0;
  int window = -1;
  std::uint32_t max_len = 4;
  std::uint32_t max_d = 10;
  std::uint32_t samples = 500;
  std::uint64_t seed = 42;
  bool trace = false;
  std::string strategy = "leading";
  bool quotient = false;
};

class Failure {
 public:
  explicit Failure(std::string message) : message_(std::move(message)) {}
  const std::string& message() const { return message_; }

 private:
  std::string message_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check(confmod_status status) {
  if (status == CONFMOD_OK) return;
  std::string message = confmod_last_error();
  if (message.empty()) message = "status " + std::to_string(status);
  throw Failure(message);
}

struct Session {
  confmod_session* handle = nullptr;
  ~Session() { confmod_session_destroy(handle); }
};

void open_session(const Options& opt, Session& s) {
  const std::string file_prefix = "file:";
  if (opt.preset.rfind(file_prefix, 0) == 0) {
    const std::string text = read_file(opt.preset.substr(file_prefix.size()));
    check(confmod_session_create_json(text.c_str(), opt.alpha == "alpha" ? nullptr : opt.alpha.c_str(), &s.handle));
    return;
  }
  std::string lie_text;
  if (!opt.lie.empty()) lie_text = read_file(opt.lie);
  check(confmod_session_create_preset(opt.preset.c_str(), opt.delta.c_str(), opt.alpha.c_str(),
                                      opt.lie.empty() ? nullptr : lie_text.c_str(), &s.handle));
}

int emit(char* text, int code) {
  std::fputs(text, stdout);
  confmod_string_free(text);
  return code;
}

int run(const std::string& command, const Options& opt) {
  Session s;
  open_session(opt, s);
  const confmod_format format = opt.format == "json" ? CONFMOD_FORMAT_JSON : CONFMOD_FORMAT_TEXT;
  char* out = nullptr;
  if (command == "normalize") {
    check(confmod_normalize(s.handle, opt.expr.c_str(), format, &out));
    return emit(out, kExitOk);
  }
  if (command == "act") {
    check(confmod_act(s.handle, opt.expr.c_str(), opt.n, opt.target.c_str(), format, &out));
    return emit(out, kExitOk);
  }
  if (command == "reduce") {
    if (opt.quotient)
      check(confmod_quotient_normal_form(s.handle, opt.expr.c_str(), format, &out));
    else
      check(confmod_reduce(s.handle, opt.expr.c_str(), opt.trace ? 1 : 0, opt.strategy == "random" ? 1 : 0,
                           opt.seed, format, &out));
    return emit(out, kExitOk);
  }
  if (command == "check-gsb") {
    confmod_verdict verdict = CONFMOD_VERDICT_FAIL;
    check(confmod_check_gsb(s.handle, opt.window, format, &verdict, &out));
    return emit(out, verdict == CONFMOD_VERDICT_FAIL ? kExitFail : kExitOk);
  }
  if (command == "irr") {
    std::size_t count = 0;
    check(confmod_irr(s.handle, opt.max_len, opt.max_d, format, &count, &out));
    return emit(out, kExitOk);
  }
  if (command == "verify-axioms") {
    int passed = 0;
    check(confmod_verify_axioms(s.handle, opt.samples, opt.seed, format, &passed, &out));
    return emit(out, passed ? kExitOk : kExitFail);
  }
  if (command == "freemod") {
    int consistent = 0;
    check(confmod_freemod(s.handle, opt.max_len, opt.max_d, format, &consistent, &out));
    return emit(out, consistent ? kExitOk : kExitFail);
  }
  if (command == "describe") {
    check(confmod_session_describe(s.handle, format, &out));
    return emit(out, kExitOk);
  }
  throw Failure("unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal forms and Groebner-Shirshov bases for modules over free associative conformal algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(confmod_version()));
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", opt.preset, "virasoro | vircur | remark | file:<path>")->required();
    sub->add_option("--delta", opt.delta, "0, 1 or 'delta' for a symbolic weight")->capture_default_str();
    sub->add_option("--alpha", opt.alpha, "a rational or 'alpha'")->capture_default_str();
    sub->add_option("--lie", opt.lie, "Lie data JSON file (vircur)");
    sub->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  };

  auto* normalize = app.add_subcommand("normalize", "normalize a bracketed word onto the basis");
  common(normalize);
  normalize->add_option("--expr", opt.expr, "expression")->required();

  auto* act = app.add_subcommand("act", "compute g_(n) f");
  common(act);
  act->add_option("--expr", opt.expr, "acting algebra element")->required();
  act->add_option("--n", opt.n, "product index")->required();
  act->add_option("--target", opt.target, "module element")->required();

  auto* reduce = app.add_subcommand("reduce", "normal form modulo the module relations");
  common(reduce);
  reduce->add_option("--expr", opt.expr, "module element")->required();
  reduce->add_flag("--trace", opt.trace, "print every reduction step");
  reduce->add_option("--strategy", opt.strategy)->check(CLI::IsMember({"leading", "random"}))->capture_default_str();
  reduce->add_option("--seed", opt.seed)->capture_default_str();
  reduce->add_flag("--quotient", opt.quotient, "also use an R1 slice of the algebra relations");

  auto* gsb = app.add_subcommand("check-gsb", "check all compositions of the module relations");
  common(gsb);
  gsb->add_option("--window", opt.window, "left-multiplication window K (default from the relations)");

  auto* irr = app.add_subcommand("irr", "list Irr(Q) within bounds");
  common(irr);
  irr->add_option("--max-len", opt.max_len)->capture_default_str();
  irr->add_option("--max-d", opt.max_d)->capture_default_str();

  auto* axioms = app.add_subcommand("verify-axioms", "randomized check of the conformal module identities");
  common(axioms);
  axioms->add_option("--samples", opt.samples)->check(CLI::PositiveNumber)->capture_default_str();
  axioms->add_option("--seed", opt.seed)->capture_default_str();

  auto* freemod = app.add_subcommand("freemod", "check the free module over C(B,N|S)");
  common(freemod);
  freemod->add_option("--max-len", opt.max_len)->capture_default_str();
  freemod->add_option("--max-d", opt.max_d)->capture_default_str();

  auto* describe = app.add_subcommand("describe", "print the presentation");
  common(describe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (command == "freemod" && freemod->count("--max-len") == 0) opt.max_len = 2;
  if (command == "freemod" && freemod->count("--max-d") == 0) opt.max_d = 2;
  try {
    return run(command, opt);
  } catch (const Failure& f) {
    std::cerr << "confmod: error: " << f.message() << "\n";
    return kExitUsage;
  }
}
