#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <optional>

#include "laurentsys/error.hpp"
#include "laurentsys/io.hpp"
#include "laurentsys/laws.hpp"
#include "laurentsys/operators.hpp"
#include "laurentsys/parser.hpp"
#include "laurentsys/system.hpp"

namespace laurentsys::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Options {
  std::string field = "rational";
  std::size_t rank = 1;
  std::string poly;
  std::string seq;
  std::vector<std::string> seqs;
  std::string periodic;
  std::string input;
  std::string output;
  std::string system;
  std::string report;
  std::vector<std::int64_t> periods;
  bool pgm = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
};

void require_one_signal(const Options& o) {
  if (o.seq.empty() == o.periodic.empty()) throw SchemaError("give exactly one of --seq or --periodic");
}

// A single signal from --seq (CSV, finite support) or --periodic (JSON).
Sequence load_signal(const Options& o, const CLI::App& cmd, std::size_t& rank, Field& field) {
  if (!o.periodic.empty()) {
    const SeqVector w = read_periodic(o.periodic);
    if (w.size() != 1) throw DimensionMismatch("expected a single periodic signal, got " + std::to_string(w.size()));
    if (cmd.count("--field") != 0 && !(Field::parse(o.field) == w.field())) {
      throw MixedFieldError("--field " + o.field + " disagrees with the periodic file's field " +
                            w.field().to_string());
    }
    if (cmd.count("--rank") != 0 && o.rank != w.rank()) {
      throw RankMismatch("--rank " + std::to_string(o.rank) + " disagrees with the periodic file's rank " +
                         std::to_string(w.rank()));
    }
    rank = w.rank();
    field = w.field();
    return w.periodic().front();
  }
  return read_seq_csv(o.seq, rank, field);
}

void write_signal(const Sequence& w, const std::string& path, std::ostream& out) {
  std::string text;
  if (const auto* f = std::get_if<FiniteSeq>(&w)) {
    text = format_seq_csv(*f);
  } else {
    text = format_periodic(SeqVector(std::vector<PeriodicSeq>{std::get<PeriodicSeq>(w)}));
  }
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_pair(const Options& o, const CLI::App& cmd, std::ostream& out) {
  require_one_signal(o);
  std::size_t rank = o.rank;
  Field field = Field::parse(o.field);
  const Sequence w = load_signal(o, cmd, rank, field);
  const LaurentPoly d = parse_poly(o.poly, rank, field);
  out << scalar_product(d, w).to_string() << "\n";
  return kOk;
}

int cmd_shift(const Options& o, const CLI::App& cmd, std::ostream& out) {
  require_one_signal(o);
  std::size_t rank = o.rank;
  Field field = Field::parse(o.field);
  const Sequence w = load_signal(o, cmd, rank, field);
  const LaurentPoly d = parse_poly(o.poly, rank, field);
  write_signal(shift(d, w), o.output, out);
  return kOk;
}

int cmd_filter(const Options& o, const CLI::App& cmd, std::ostream& out) {
  if (o.pgm) {
    const Field field = cmd.count("--field") != 0 ? Field::parse(o.field) : Field::real();
    if (field.is_exact()) throw InvalidField("--pgm filtering needs a float field, got " + field.to_string());
    if (cmd.count("--rank") != 0 && o.rank != 2) throw RankMismatch("--pgm images are rank 2");
    const LaurentPoly kernel = parse_poly(o.poly, 2, field);
    PgmImage image = read_pgm(o.input, field);
    image.pixels = shift(kernel, image.pixels);
    write_pgm(o.output, image);
    return kOk;
  }
  const Field field = Field::parse(o.field);
  const LaurentPoly kernel = parse_poly(o.poly, o.rank, field);
  const FiniteSeq input = read_seq_csv(o.input, o.rank, field);
  write_signal(shift(kernel, input), o.output, out);
  return kOk;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  const System s = parse_system(read_file(o.system));
  if (!s.field().is_exact()) {
    throw FloatFieldUnsupported("kernel computation needs an exact field, got " + s.field().to_string());
  }
  const KernelBasis k = periodic_kernel_basis(s, o.periods);
  out << "dimension: " << k.dimension() << "\n";
  if (!o.report.empty()) write_kernel_report(k, o.report);
  return kOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  if (o.seqs.empty() == o.periodic.empty()) throw SchemaError("give --seq (once per component) or --periodic");
  const System s = parse_system(read_file(o.system));
  std::optional<SeqVector> w;
  if (!o.periodic.empty()) {
    w = read_periodic(o.periodic);
  } else {
    std::vector<FiniteSeq> components;
    for (const auto& path : o.seqs) components.push_back(read_seq_csv(path, s.rank(), s.field()));
    w = SeqVector(std::move(components));
  }
  const bool member = behavior_contains(s, *w);
  out << (member ? "yes" : "no") << "\n";
  return member ? kOk : kNo;
}

int cmd_selftest(const Options& o, std::ostream& out, std::ostream& err) {
  const Field field = Field::parse(o.field);
  if (!field.is_exact()) {
    throw FloatFieldUnsupported("selftest runs over exact fields only, got " + field.to_string());
  }
  if (o.trials == 0) err << "warning: --trials 0 runs no cases; the suites pass vacuously\n";
  const auto results = run_all_suites(field, o.trials, o.seed);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.trials << " trials";
    if (!r.passed()) out << ", " << r.failures << " failures";
    out << "\n";
    if (!r.passed()) {
      err << "counterexample for " << r.name << ": " << r.counterexample << "\n";
      ++failed;
    }
  }
  out << (failed == 0 ? "all " + std::to_string(results.size()) + " suites passed"
                      : std::to_string(failed) + " of " + std::to_string(results.size()) + " suites failed")
      << " (seed " << o.seed << ")\n";
  return failed == 0 ? kOk : kNo;
}

void add_field_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--field", o.field, "rational, gf:<p>, float[:<tol>]")->capture_default_str();
  cmd->add_option("--rank", o.rank, "number of lattice axes r")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_signal_options(CLI::App* cmd, Options& o) {
  auto* seq = cmd->add_option("--seq", o.seq, "finite-support signal (CSV)");
  auto* periodic = cmd->add_option("--periodic", o.periodic, "periodic signal (JSON)");
  seq->excludes(periodic);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bidirectional discrete linear systems over Z^r: Laurent operators, shifts, behaviors"};
  app.require_subcommand(1);
  Options o;

  auto* pair = app.add_subcommand("pair", "scalar product <d, W>");
  pair->add_option("--poly", o.poly, "Laurent polynomial d")->required();
  add_field_options(pair, o);
  add_signal_options(pair, o);

  auto* shift_cmd = app.add_subcommand("shift", "shift action d o W");
  shift_cmd->add_option("--poly", o.poly, "Laurent polynomial d")->required();
  shift_cmd->add_option("--output", o.output, "output file (default: stdout)");
  add_field_options(shift_cmd, o);
  add_signal_options(shift_cmd, o);

  auto* filter = app.add_subcommand("filter", "apply a kernel to a signal (CSV or PGM)");
  filter->add_option("--kernel", o.poly, "kernel polynomial")->required();
  filter->add_option("--input", o.input, "input signal")->required();
  filter->add_option("--output", o.output, "output signal")->required();
  filter->add_flag("--pgm", o.pgm, "input and output are binary PGM images (rank 2, float)");
  add_field_options(filter, o);

  auto* kernel = app.add_subcommand("kernel", "periodic kernel of an autoregressive system");
  kernel->add_option("--system", o.system, "system JSON")->required();
  kernel->add_option("--period", o.periods, "periods N1[,N2,...]")->required()->delimiter(',')->check(
      CLI::PositiveNumber);
  kernel->add_option("--report", o.report, "write the kernel report JSON here");

  auto* member = app.add_subcommand("member", "behavior membership: R o W = 0 ?");
  member->add_option("--system", o.system, "system JSON")->required();
  auto* seqs = member->add_option("--seq", o.seqs, "finite-support component (CSV), once per component");
  auto* periodic = member->add_option("--periodic", o.periodic, "periodic signal vector (JSON)");
  seqs->excludes(periodic);

  auto* selftest = app.add_subcommand("selftest", "run the algebraic law suites");
  selftest->add_option("--trials", o.trials, "trials per suite")->capture_default_str();
  selftest->add_option("--seed", o.seed, "random seed")->capture_default_str();
  selftest->add_option("--field", o.field, "exact field: rational or gf:<p>")->capture_default_str();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("laurentsys");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*pair) return cmd_pair(o, *pair, out);
    if (*shift_cmd) return cmd_shift(o, *shift_cmd, out);
    if (*filter) return cmd_filter(o, *filter, out);
    if (*kernel) return cmd_kernel(o, out);
    if (*member) return cmd_member(o, out);
    if (*selftest) return cmd_selftest(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace laurentsys::cli
