#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "git1/git1.h"

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kCheckFailed = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_for(git1_status s) {
  switch (s) {
    case GIT1_OK: return kOk;
    case GIT1_ERR_MATH: return kCheckFailed;
    case GIT1_ERR_ARGUMENT: return kUsage;
    default: return kInput;
  }
}

// Prints the library output (or the error) and maps the status to an exit code.
int finish(git1_status s, char** out, bool check_failed = false) {
  if (s != GIT1_OK) {
    std::cerr << "git1: " << git1_last_error() << "\n";
    return exit_for(s);
  }
  std::cout << *out;
  git1_free_string(*out);
  return check_failed ? kCheckFailed : kOk;
}

class CurveHandle {
 public:
  CurveHandle(const std::string& path, bool allow_unmarked) {
    const std::string text = read_file(path);
    status_ = git1_curve_from_json(text.c_str(), allow_unmarked ? 1 : 0, &c_);
  }
  ~CurveHandle() { git1_curve_free(c_); }
  CurveHandle(const CurveHandle&) = delete;
  CurveHandle& operator=(const CurveHandle&) = delete;
  git1_status status() const { return status_; }
  const git1_curve* get() const { return c_; }

 private:
  git1_curve* c_ = nullptr;
  git1_status status_ = GIT1_OK;
};

int load_error(const CurveHandle& h) { return finish(h.status(), nullptr); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GIT stability of pointed genus-one curves"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(git1_version()));

  std::string curve_path, chi, format = "json", mode, core, curves_path;
  int n = 0, m = 0, max_unmarked = 2, draws = 50, tail_marks = 0;
  bool allow_unmarked = false, symbolic = false;
  std::uint64_t seed = 0;

  auto add_curve = [&](CLI::App* sub) {
    sub->add_option("--curve", curve_path, "curve JSON file ('-' for stdin)")->required();
    sub->add_flag("--allow-unmarked", allow_unmarked, "accept unmarked components");
  };
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    format = def;
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();
  };

  auto* validate = app.add_subcommand("validate", "validate a curve and print its canonical form");
  add_curve(validate);

  auto* stability = app.add_subcommand("stability", "semistability verdict for a curve and character");
  add_curve(stability);
  stability->add_option("--chi", chi, "character, e.g. \"1/2,1/2\"")->required();

  auto* polytope = app.add_subcommand("polytope", "semistability polytope and vanishing data");
  add_curve(polytope);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate curve classes");
  enumerate->add_option("--n", n, "number of marks")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--allow-unmarked", allow_unmarked, "include unmarked components");
  enumerate->add_option("--max-unmarked", max_unmarked, "cap on unmarked components")->capture_default_str();

  auto* chambers = app.add_subcommand("chambers", "chambers of the wall arrangement");
  chambers->add_option("--n", n, "number of marks")->required()->check(CLI::PositiveNumber);
  add_format(chambers, "tsv");

  auto* classify = app.add_subcommand("classify", "stable classes per chamber and wall-crossing flips");
  classify->add_option("--n", n, "number of marks")->required()->check(CLI::PositiveNumber);
  classify->add_option("--seed", seed, "seed")->capture_default_str();
  add_format(classify, "tsv");

  auto* smyth = app.add_subcommand("smyth", "check that contractions of m-stable curves are semistable");
  smyth->add_option("--mode", mode, "n-1, n-2 or n-3")->required()->check(CLI::IsMember({"n-1", "n-2", "n-3"}));
  smyth->add_option("--chi", chi, "character")->required();
  smyth->add_option("--n", n, "number of marks")->required()->check(CLI::PositiveNumber);
  smyth->add_option("--max-unmarked", max_unmarked, "cap on unmarked components")->capture_default_str();

  auto* verify = app.add_subcommand("verify-identities", "check the function-field identities");
  auto* core_opt = verify->add_option("--core", core, "fold or ngon")->check(CLI::IsMember({"fold", "ngon"}));
  verify->add_option("--m", m, "core components")->check(CLI::Range(1, 64));
  verify->add_option("--n", n, "number of marks")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed")->capture_default_str();
  verify->add_option("--draws", draws, "random parameter draws")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--tail-marks", tail_marks, "marks on one rational tail")->capture_default_str();
  verify->add_flag("--symbolic", symbolic, "also run with symbolic parameters");
  auto* coord_opt = verify->add_option("--curve", curve_path, "coordinatized curve JSON file");
  core_opt->excludes(coord_opt);

  auto* window = app.add_subcommand("window", "uniform character window over contracted m-stable curves");
  auto* curves_opt = window->add_option("--curves", curves_path, "JSON array of curves");
  auto* wn_opt = window->add_option("--n", n, "enumerate all m-stable classes with n marks");
  window->add_option("--m", m, "m")->required()->check(CLI::PositiveNumber);
  window->add_option("--max-unmarked", max_unmarked, "cap on unmarked components")->capture_default_str();
  curves_opt->excludes(wn_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    char* out = nullptr;
    if (validate->parsed()) {
      CurveHandle h(curve_path, allow_unmarked);
      if (h.status() != GIT1_OK) return load_error(h);
      return finish(git1_curve_to_json(h.get(), &out), &out);
    }
    if (stability->parsed()) {
      CurveHandle h(curve_path, allow_unmarked);
      if (h.status() != GIT1_OK) return load_error(h);
      return finish(git1_stability(h.get(), chi.c_str(), &out), &out);
    }
    if (polytope->parsed()) {
      CurveHandle h(curve_path, allow_unmarked);
      if (h.status() != GIT1_OK) return load_error(h);
      return finish(git1_polytope(h.get(), &out), &out);
    }
    if (enumerate->parsed()) return finish(git1_enumerate(n, allow_unmarked, max_unmarked, &out), &out);
    if (chambers->parsed()) return finish(git1_chambers(n, format == "tsv", &out), &out);
    if (classify->parsed()) return finish(git1_classify(n, seed, format == "tsv", &out), &out);
    if (smyth->parsed()) {
      int violations = 0;
      git1_status s = git1_smyth(mode.c_str(), chi.c_str(), n, max_unmarked, &out, &violations);
      return finish(s, &out, violations > 0);
    }
    if (verify->parsed()) {
      int all_hold = 0;
      git1_status s;
      if (!curve_path.empty()) {
        const std::string text = read_file(curve_path);
        s = git1_verify_coordinatized(text.c_str(), &out, &all_hold);
      } else {
        if (core.empty() || m <= 0 || n <= 0) {
          std::cerr << "git1: verify-identities needs --core, --m and --n, or --curve\n";
          return kUsage;
        }
        s = git1_verify_identities(core.c_str(), m, n, tail_marks, seed, draws, symbolic, &out, &all_hold);
      }
      return finish(s, &out, all_hold == 0);
    }
    if (window->parsed()) {
      int empty = 0;
      if (!curves_path.empty()) {
        const std::string text = read_file(curves_path);
        return finish(git1_window(text.c_str(), m, &out, &empty), &out);
      }
      if (n <= 0) {
        std::cerr << "git1: window needs --curves or --n\n";
        return kUsage;
      }
      return finish(git1_window_exhaustive(n, m, max_unmarked, &out, &empty), &out);
    }
  } catch (const InputError& e) {
    std::cerr << "git1: " << e.what() << "\n";
    return kInput;
  }
  return kUsage;
}
