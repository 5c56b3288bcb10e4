#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "powfree/assembly.hpp"
#include "powfree/delta_machine.hpp"
#include "powfree/errors.hpp"
#include "powfree/fixture_io.hpp"
#include "powfree/oracle_lab.hpp"
#include "powfree/power_check.hpp"
#include "powfree/streams.hpp"

namespace powfree::cli {
namespace {

// Above this |w| the eta bound is beyond desk scale.
constexpr std::size_t kWarnWordLength = 6;

const Alphabet& symbols() {
  static const Alphabet table = Alphabet::standard(Alphabet::kDefaultSymbols.size());
  return table;
}

// Writes to --output when given, else to out.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : out_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw InvalidInput("cannot write '" + path + "'");
    out_ = &file_;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::uint64_t budget_from_env() {
  EnumerationOptions defaults;
  const char* text = std::getenv("POWFREE_BUDGET");
  if (!text || !*text) return defaults.budget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(text, &end, 10);
  if (*end != '\0') throw InvalidInput("POWFREE_BUDGET must be a non-negative integer");
  return value;
}

Word parse_symbols(const std::string& text) { return symbols().parse(text); }

struct Flags {
  std::string alpha;
  std::string word;
  std::string stream;
  std::optional<std::int64_t> from, to;
  std::string r;
  std::size_t length = 0;
  std::string letters = "01";
  std::size_t k = 3;
  std::size_t max_len = 10;
  std::size_t workers = 1;
  std::string fixture;
  std::size_t steps = 2000;
  std::size_t window = 1024;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string output;
  bool unsafe = false;
  std::size_t max_eta = 1'000'000;
};

int cmd_check(const Flags& f, std::ostream& out) {
  const PowerBound bound = PowerBound::parse(f.alpha);
  Word w;
  std::int64_t origin = 0;
  if (!f.stream.empty()) {
    if (!f.word.empty()) throw InvalidInput("check takes --word or --stream, not both");
    if (!f.from || !f.to) throw InvalidInput("check --stream needs --from and --to");
    const AnyStream s = parse_stream(f.stream, symbols());
    const Window win = std::visit([&](const auto& v) { return window(v, *f.from, *f.to); }, s);
    w = win.word;
    origin = win.from;
  } else {
    if (f.word.empty()) throw InvalidInput("check needs --word or --stream");
    w = parse_symbols(f.word);
  }
  const Verdict v = is_power_free(w, bound);
  if (v.free) {
    out << "free\n";
    return kOk;
  }
  Repetition rep = *v.witness;
  out << "not-free " << format_repetition(rep, symbols());
  if (origin != 0) out << " at " << origin + static_cast<std::int64_t>(rep.start);
  out << '\n';
  return kNotFree;
}

int cmd_exponent(const Flags& f, std::ostream& out) {
  if (f.word.empty()) throw InvalidInput("exponent needs a nonempty --word");
  const auto ce = max_exponent(parse_symbols(f.word));
  out << format_repetition(ce.witness, symbols()) << '\n';
  return kOk;
}

int cmd_power(const Flags& f, std::ostream& out) {
  out << symbols().format(fractional_power(parse_symbols(f.r), Exponent::parse(f.alpha))) << '\n';
  return kOk;
}

int cmd_tm(const Flags& f, std::ostream& out) {
  if (f.letters.size() != 2) throw InvalidInput("tm --letters takes exactly two symbols");
  const Alphabet table(f.letters);
  out << table.format(thue_morse(0, 1).prefix(f.length)) << '\n';
  return kOk;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
  EnumerationOptions options;
  options.budget = budget_from_env();
  options.workers = f.workers;
  const auto result = enumerate_power_free(f.k, PowerBound::parse(f.alpha), f.max_len, options);
  Sink sink(out, f.output);
  *sink << format_counts(result);
  return kOk;
}

void guard_word_length(const Word& w, const Exponent& alpha, std::size_t ceiling, std::ostream& err) {
  if (w.size() > kWarnWordLength)
    err << "warning: |w| = " << w.size() << " > " << kWarnWordLength << "; the eta bound grows as alpha^|w|\n";
  const auto need = gamma_min_eta_length(alpha, w.size(), 0);
  if (need && *need > ceiling)
    throw InvalidInput("eta bound " + std::to_string(*need) + " exceeds --max-eta " + std::to_string(ceiling));
}

int cmd_glue(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.fixture.empty()) throw InvalidInput("glue needs --fixture");
  const DeltaFixture fx = parse_delta_fixture(read_text_file(f.fixture));
  guard_word_length(fx.tuple.w, fx.tuple.alpha, f.max_eta, err);
  std::optional<RightInfiniteWord> tail;
  if (!f.stream.empty()) {
    tail = parse_right_stream(f.stream, symbols());
  } else {
    std::vector<Letter> pair;
    for (Letter c = 0; c < fx.k && pair.size() < 2; ++c)
      if (c != fx.tuple.x) pair.push_back(c);
    if (pair.size() < 2) throw InvalidInput("glue: alphabet too small for a default tail; pass --stream");
    tail = thue_morse(pair[0], pair[1]);
  }
  const GlueResult g = glue(fx.tuple, *tail, f.steps);
  const Alphabet alphabet = Alphabet::standard(std::max(fx.k, std::size_t{2}));
  Sink sink(out, f.output);
  for (const auto& rec : g.trace) *sink << format_trace_record(rec, alphabet) << '\n';
  *sink << "eta_hat: " << alphabet.format(g.eta_hat) << '\n'
        << "eta_hat_len: " << g.eta_hat.size() << '\n'
        << "shrinks: " << g.shrinks << '\n'
        << "stabilized_at: " << g.stabilized_at << '\n'
        << "final_window_from: " << g.final_window.from << '\n'
        << "final_window_len: " << g.final_window.word.size() << '\n'
        << "final_window: " << alphabet.format(g.final_window.word) << '\n'
        << "verdict: free\n";
  return kOk;
}

int cmd_nonrecur(const Flags& f, std::ostream& out, std::ostream& err) {
  if (f.fixture.empty()) throw InvalidInput("nonrecur needs --fixture");
  const BiInfiniteSpec spec = parse_bi_infinite_spec(read_text_file(f.fixture));
  AssemblyConfig cfg;
  cfg.k = spec.k;
  cfg.window = f.window;
  cfg.unsafe = f.unsafe;
  if (!f.alpha.empty()) cfg.alpha = Exponent::parse(f.alpha);
  else if (spec.alpha) cfg.alpha = *spec.alpha;
  Word w;
  if (!f.word.empty()) w = Alphabet::standard(spec.k).parse(f.word);
  else if (spec.w) w = *spec.w;
  else throw InvalidInput("nonrecur needs w from --word or the fixture");
  guard_word_length(w, cfg.alpha, f.max_eta, err);

  const NonrecurResult result = nonrecur(spec.v, w, spec.declarations, cfg);
  const Alphabet alphabet = Alphabet::standard(spec.k);
  Sink sink(out, f.output);
  *sink << format_report(result.report, alphabet) << "window: " << alphabet.format(result.report.window.word) << '\n';
  return result.report.certified() ? kOk : kNotFree;
}

int cmd_verify_lemmas(const Flags& f, std::ostream& out) {
  const LemmaReport report = verify_lemmas(f.seed, f.count);
  Sink sink(out, f.output);
  *sink << format_lemma_report(report);
  return report.all_passed() ? kOk : kNotFree;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power-free word toolkit", "powfree"};
  app.require_subcommand(1);
  Flags f;

  auto* check = app.add_subcommand("check", "Test a word or stream window for power-freeness");
  check->add_option("--alpha", f.alpha, "Bound: p, p/q, or with '+' for the plus form")->required();
  check->add_option("--word", f.word);
  check->add_option("--stream", f.stream, "tm:a,b | periodic:W | rev(S) | drop:N(S) | S+W");
  check->add_option("--from", f.from);
  check->add_option("--to", f.to);

  auto* exponent = app.add_subcommand("exponent", "Critical exponent with a witness");
  exponent->add_option("--word", f.word)->required();

  auto* power = app.add_subcommand("power", "Fractional power r^alpha");
  power->add_option("--r", f.r)->required();
  power->add_option("--alpha", f.alpha)->required();

  auto* tm = app.add_subcommand("tm", "Thue-Morse prefix");
  tm->add_option("--length", f.length)->required();
  tm->add_option("--letters", f.letters, "Two symbols");

  auto* enumerate = app.add_subcommand("enumerate", "Count power-free words per length");
  enumerate->add_option("--alpha", f.alpha)->required();
  enumerate->add_option("--k", f.k)->check(CLI::Range(1, 36));
  enumerate->add_option("--max-len", f.max_len);
  enumerate->add_option("--workers", f.workers);
  enumerate->add_option("--output", f.output);

  auto* glue_cmd = app.add_subcommand("glue", "Glue a right-infinite tail onto a construction state");
  glue_cmd->add_option("--fixture", f.fixture)->required();
  glue_cmd->add_option("--stream", f.stream, "Tail; defaults to Thue-Morse over the two smallest letters != x");
  glue_cmd->add_option("--steps", f.steps)->check(CLI::PositiveNumber);
  glue_cmd->add_option("--max-eta", f.max_eta);
  glue_cmd->add_option("--output", f.output);

  auto* nonrecur_cmd = app.add_subcommand("nonrecur", "Build a word containing w with a non-recurrent letter");
  nonrecur_cmd->add_option("--fixture", f.fixture)->required();
  nonrecur_cmd->add_option("--word", f.word);
  nonrecur_cmd->add_option("--alpha", f.alpha);
  nonrecur_cmd->add_option("--window", f.window)->check(CLI::PositiveNumber);
  nonrecur_cmd->add_option("--max-eta", f.max_eta);
  nonrecur_cmd->add_flag("--unsafe", f.unsafe, "Allow k < 3 or alpha < 5");
  nonrecur_cmd->add_option("--output", f.output);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Check the shrink lemmas on generated fixtures");
  lemmas->add_option("--seed", f.seed);
  lemmas->add_option("--count", f.count);
  lemmas->add_option("--output", f.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(f, out);
    if (exponent->parsed()) return cmd_exponent(f, out);
    if (power->parsed()) return cmd_power(f, out);
    if (tm->parsed()) return cmd_tm(f, out);
    if (enumerate->parsed()) return cmd_enumerate(f, out);
    if (glue_cmd->parsed()) return cmd_glue(f, out, err);
    if (nonrecur_cmd->parsed()) return cmd_nonrecur(f, out, err);
    if (lemmas->parsed()) return cmd_verify_lemmas(f, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const WindowExhausted& e) {
    err << "window exhausted: " << e.what() << '\n';
    return kExhausted;
  } catch (const SearchExhausted& e) {
    err << "search exhausted: " << e.what() << '\n';
    return kExhausted;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExhausted;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kNotFree;
  }
  return kUsage;
}

}  // namespace powfree::cli
