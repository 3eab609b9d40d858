#include "fsaut/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "fsaut/automorphism.hpp"
#include "fsaut/error.hpp"
#include "fsaut/factorization.hpp"
#include "fsaut/nielsen.hpp"
#include "fsaut/random.hpp"
#include "fsaut/serialize.hpp"
#include "fsaut/stallings.hpp"
#include "fsaut/text.hpp"
#include "fsaut/whitehead.hpp"

namespace fsaut::cli {

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string input = "-";
  Index n = 1;
  std::optional<Index> m;
  std::string strategy = "width";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  Index width_bound = 4;
  std::size_t moves = 12;
  std::size_t budget = WhiteheadOptions{}.budget;
  std::string word;
  std::string dot_path;
  std::string out_path;
  bool json = false;
};

/// A failure to read or write a named file.
class FileError : public Error {
 public:
  using Error::Error;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in, std::ostream& out) : opts_(opts), in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw FileError("standard input can only be read once");
      stdin_used_ = true;
      return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw FileError("cannot open " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path, std::ios::binary);
    if (!file || !(file << text)) throw FileError("cannot write " + path);
  }

  // Primary output goes to --out when given, otherwise to the output stream.
  void emit(const std::string& text) {
    if (opts_.out_path.empty()) {
      out_ << text;
    } else {
      write_file(opts_.out_path, text);
    }
  }

  FinSuppAut read_aut(const std::string& path) {
    const std::string text = read(path);
    if (starts_with_json(text, '{')) return aut_from_json(parse_json(text));
    return parse_aut(text);
  }

  WordTuple read_tuple(const std::string& path) {
    const std::string text = read(path);
    if (starts_with_json(text, '[')) return tuple_from_json(parse_json(text));
    return parse_tuple(text);
  }

  Strategy strategy() const {
    if (opts_.strategy == "minimal") return Strategy::Minimal;
    return Strategy::Width;
  }

  WhiteheadOptions whitehead() const {
    WhiteheadOptions w;
    w.budget = opts_.budget;
    return w;
  }

  void emit_aut(const FinSuppAut& phi) { emit(opts_.json ? dump(to_json(phi)) : format_aut(phi)); }

  void emit_verdict(const char* key, bool verdict) {
    if (opts_.json) {
      Json j;
      j[key] = verdict;
      emit(dump(j));
    } else {
      emit(verdict ? "true\n" : "false\n");
    }
  }

  int apply_cmd() {
    const FinSuppAut phi = read_aut(opts_.input);
    const Word image = apply(phi, parse_word(opts_.word));
    emit(opts_.json ? dump(to_json(image)) : format_word(image) + "\n");
    return Success;
  }

  int compose_cmd() {
    FinSuppAut product;
    for (const std::string& path : opts_.inputs) product = compose(product, read_aut(path));
    emit_aut(product);
    return Success;
  }

  int invert_cmd() {
    emit_aut(invert(read_aut(opts_.input)));
    return Success;
  }

  int check_basis_cmd() {
    const WordTuple t = read_tuple(opts_.input);
    const Index m = opts_.m.value_or(static_cast<Index>(t.size()));
    if (!opts_.dot_path.empty()) write_file(opts_.dot_path, to_dot(build_graph(t)));
    emit_verdict("basis", is_basis_of(t, m));
    return Success;
  }

  int member_cmd() {
    const WordTuple t = read_tuple(opts_.input);
    const StallingsGraph g = build_graph(t);
    if (!opts_.dot_path.empty()) write_file(opts_.dot_path, to_dot(g));
    emit_verdict("member", contains(g, parse_word(opts_.word)));
    return Success;
  }

  int complement_cmd() {
    const WordTuple t = read_tuple(opts_.input);
    Index reach = 0;
    for (const Word& w : t) reach = std::max(reach, max_index(w));
    const WordTuple c = complement_basis(t, opts_.m.value_or(reach), whitehead());
    emit(opts_.json ? dump(to_json(c)) : format_tuple(c));
    return Success;
  }

  int dot_cmd() {
    emit(to_dot(build_graph(read_tuple(opts_.input))));
    return Success;
  }

  int factorize_cmd() {
    const FinSuppAut phi = read_aut(opts_.input);
    const Certificate c = factorize(phi, opts_.n, strategy(), whitehead());
    const VerificationReport report = verify_certificate(c);
    const std::string serialized = dump(to_json(c));
    if (!opts_.out_path.empty()) write_file(opts_.out_path, serialized);
    if (opts_.json && opts_.out_path.empty()) {
      out_ << serialized;
    } else {
      out_ << summary(c, report);
    }
    return report.passed() ? Success : VerificationFailed;
  }

  int verify_cmd() {
    const Certificate c = certificate_from_json(parse_json(read(opts_.input)));
    const VerificationReport report = verify_certificate(c);
    if (opts_.json) {
      emit(dump(to_json(report)));
    } else {
      std::ostringstream s;
      for (const CheckResult& check : report.checks) {
        s << (check.passed ? "ok   " : "FAIL ") << check.name;
        if (!check.passed) {
          if (check.factor) s << " [factor " << *check.factor << "]";
          if (check.generator) s << " [a" << *check.generator << "]";
          if (!check.detail.empty()) s << ": " << check.detail;
        }
        s << "\n";
      }
      s << (report.passed() ? "certificate verified\n" : "certificate rejected\n");
      emit(s.str());
    }
    return report.passed() ? Success : VerificationFailed;
  }

  int random_cmd() {
    std::size_t passed = 0;
    Index max_width = 0;
    Json certificates = Json::array();
    for (std::size_t k = 0; k < opts_.count; ++k) {
      const FinSuppAut phi = random_aut(derive_seed(opts_.seed, k), opts_.width_bound, opts_.moves);
      std::optional<Certificate> c;
      try {
        c = factorize(phi, opts_.n, strategy(), whitehead());
      } catch (const InternalVerificationFailure&) {
      }
      if (!c) continue;
      if (verify_certificate(*c).passed()) ++passed;
      for (const auto& [F, U] : c->pairs) max_width = std::max({max_width, F.width(), U.width()});
      if (!opts_.out_path.empty()) certificates.push_back(to_json(*c));
    }
    if (!opts_.out_path.empty()) write_file(opts_.out_path, dump(certificates));
    if (opts_.json) {
      Json j;
      j["seed"] = opts_.seed;
      j["count"] = opts_.count;
      j["width_bound"] = opts_.width_bound;
      j["moves"] = opts_.moves;
      j["n"] = opts_.n;
      j["strategy"] = opts_.strategy;
      j["passed"] = passed;
      j["failed"] = opts_.count - passed;
      j["max_factor_width"] = max_width;
      out_ << dump(j);
    } else {
      out_ << "corpus seed=" << opts_.seed << " count=" << opts_.count << " width-bound=" << opts_.width_bound
           << " moves=" << opts_.moves << " n=" << opts_.n << " strategy=" << opts_.strategy << "\n"
           << "passed " << passed << "/" << opts_.count << "\n"
           << "max factor width " << max_width << "\n";
    }
    return passed == opts_.count ? Success : VerificationFailed;
  }

 private:
  static bool starts_with_json(const std::string& text, char open) {
    const auto at = text.find_first_not_of(" \t\r\n");
    return at != std::string::npos && text[at] == open;
  }

  std::string summary(const Certificate& c, const VerificationReport& report) const {
    std::ostringstream s;
    s << "phi width " << c.phi.width() << ", n = " << c.n << ", strategy " << opts_.strategy << "\n"
      << "m = " << c.m << ", mprime = " << c.mprime << "\n"
      << "psi width " << c.psi.width() << ", u width " << c.u.width() << ", v width " << c.v.width() << "\n";
    for (std::size_t k = 0; k < c.pairs.size(); ++k) {
      const auto& [F, U] = c.pairs[k];
      s << "pair " << k + 1 << ": F = " << (F.is_identity() ? "id" : "f") << ", U width " << U.width()
        << ", fixes a1..a" << c.n << ": " << (fixes_prefix(U, c.n) ? "yes" : "no") << "\n";
    }
    if (const CheckResult* bad = report.first_failure()) {
      s << "verification failed: " << bad->name;
      if (!bad->detail.empty()) s << ": " << bad->detail;
      s << "\n";
    } else {
      s << "verified\n";
    }
    return s.str();
  }

  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Finitely supported automorphisms of the free group of countable rank"};
  app.name("fsaut");
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", opts.input, "input file, - for standard input")->capture_default_str();
  };
  auto out_opt = [&](CLI::App* sub) { sub->add_option("--out", opts.out_path, "write the result to a file"); };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", opts.json, "JSON output"); };
  auto search = [&](CLI::App* sub) {
    sub->add_option("--budget", opts.budget, "plateau search budget")->capture_default_str();
  };
  auto strategy = [&](CLI::App* sub) {
    sub->add_option("--strategy", opts.strategy, "approximation strategy")
        ->check(CLI::IsMember({"width", "minimal"}))
        ->capture_default_str();
  };

  CLI::App* apply_c = app.add_subcommand("apply", "image of a word under an automorphism");
  input(apply_c);
  apply_c->add_option("--word", opts.word, "word to map")->required();
  json(apply_c);
  out_opt(apply_c);

  CLI::App* compose_c = app.add_subcommand("compose", "composite of automorphisms, rightmost applied first");
  compose_c->add_option("inputs", opts.inputs, "automorphism files")->required();
  json(compose_c);
  out_opt(compose_c);

  CLI::App* invert_c = app.add_subcommand("invert", "inverse automorphism");
  input(invert_c);
  json(invert_c);
  out_opt(invert_c);

  CLI::App* basis_c = app.add_subcommand("check-basis", "whether a word tuple is a basis of A_m");
  input(basis_c);
  basis_c->add_option("--m", opts.m, "rank, defaults to the tuple size");
  basis_c->add_option("--dot", opts.dot_path, "write the folded graph");
  json(basis_c);
  out_opt(basis_c);

  CLI::App* member_c = app.add_subcommand("member", "subgroup membership of a word");
  input(member_c);
  member_c->add_option("--word", opts.word, "word to test")->required();
  member_c->add_option("--dot", opts.dot_path, "write the folded graph");
  json(member_c);
  out_opt(member_c);

  CLI::App* complement_c = app.add_subcommand("complement", "extend a partial basis of A_m to a basis");
  input(complement_c);
  complement_c->add_option("--m", opts.m, "rank, defaults to the largest index used");
  search(complement_c);
  json(complement_c);
  out_opt(complement_c);

  CLI::App* factorize_c = app.add_subcommand("factorize", "certificate for phi in (F U_n)^3");
  input(factorize_c);
  factorize_c->add_option("--n", opts.n, "stabilized prefix length")->capture_default_str();
  strategy(factorize_c);
  search(factorize_c);
  json(factorize_c);
  out_opt(factorize_c);

  CLI::App* verify_c = app.add_subcommand("verify", "recheck a serialized certificate");
  input(verify_c);
  json(verify_c);
  out_opt(verify_c);

  CLI::App* random_c = app.add_subcommand("random", "factorize and verify a seeded random corpus");
  random_c->add_option("--seed", opts.seed, "corpus seed")->capture_default_str();
  random_c->add_option("--count", opts.count, "number of automorphisms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  random_c->add_option("--width-bound", opts.width_bound, "largest generator moved")->capture_default_str();
  random_c->add_option("--moves", opts.moves, "elementary moves per automorphism")->capture_default_str();
  random_c->add_option("--n", opts.n, "stabilized prefix length")->capture_default_str();
  strategy(random_c);
  search(random_c);
  json(random_c);
  random_c->add_option("--out", opts.out_path, "write all certificates as a JSON array");

  CLI::App* dot_c = app.add_subcommand("dot", "Graphviz rendering of the folded graph of a tuple");
  input(dot_c);
  out_opt(dot_c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Success : InputError;
  }

  Session session(opts, in, out);
  try {
    if (*apply_c) return session.apply_cmd();
    if (*compose_c) return session.compose_cmd();
    if (*invert_c) return session.invert_cmd();
    if (*basis_c) return session.check_basis_cmd();
    if (*member_c) return session.member_cmd();
    if (*complement_c) return session.complement_cmd();
    if (*factorize_c) return session.factorize_cmd();
    if (*verify_c) return session.verify_cmd();
    if (*random_c) return session.random_cmd();
    if (*dot_c) return session.dot_cmd();
  } catch (const SearchBudgetExceeded& e) {
    err << "fsaut: " << e.what() << "\n";
    return BudgetExhausted;
  } catch (const InternalVerificationFailure& e) {
    err << "fsaut: " << e.what() << "\n";
    return VerificationFailed;
  } catch (const Error& e) {
    err << "fsaut: " << e.what() << "\n";
    return InputError;
  } catch (const Json::exception& e) {
    err << "fsaut: " << e.what() << "\n";
    return InputError;
  }
  return InputError;
}

}  // namespace fsaut::cli
