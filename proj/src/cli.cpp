#include "parembed/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <sstream>

#include "parembed/char_classes.hpp"
#include "parembed/decision.hpp"
#include "parembed/descriptor_io.hpp"
#include "parembed/error.hpp"
#include "parembed/obstruction.hpp"
#include "parembed/smith.hpp"
#include "parembed/surgery.hpp"

namespace parembed {

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 2;
constexpr int kInconsistent = 3;

std::string opt(const std::optional<std::int64_t>& x) { return x ? std::to_string(*x) : "?"; }

void print_invariants(const ManifoldDescriptor& m, std::ostream& out) {
  out << "dim = " << m.dim() << '\n';
  out << "betti_z = " << format_betti(m.betti.betti_z) << '\n';
  out << "betti_z2 = " << format_betti(m.betti.betti_z2) << '\n';
  out << "euler = " << opt(descriptor_euler(m)) << '\n';
  if (m.dim() % 2 == 1 && m.betti.closed) {
    const auto s = semi_characteristic(m.betti);
    out << "semi_characteristic = " << (s ? std::to_string(*s) : "?") << '\n';
  }
  if (m.pi1) out << "H1 = " << to_string(abelianization(*m.pi1)) << '\n';
  if (m.dim() >= 1) out << "K_" << m.dim() << " = " << to_string(kervaire_group(m.dim())) << '\n';
  const auto report = validate(m);
  out << "validation = " << (report.empty() ? "ok" : std::to_string(report.size()) + " violation(s)") << '\n';
  for (const auto& v : report) out << "  " << v.rule << ": " << v.detail << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot write " + path);
  f << text;
}

std::string commented(const std::string& text) {
  std::istringstream is(text);
  std::string out;
  for (std::string line; std::getline(is, line);) out += "# " + line + '\n';
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallelizability and embedding decisions for closed manifolds", "parembed"};
  app.require_subcommand(1);

  std::string file;

  auto* invariants = app.add_subcommand("invariants", "Print the invariants of a descriptor file");
  invariants->add_option("file", file, "descriptor file")->required();

  std::string kind;
  auto* decide_cmd = app.add_subcommand("decide", "Decide a criterion for a descriptor file");
  decide_cmd->add_option("kind", kind, "parallelizable|ph|cr|ac6|ph6d|equiv")
      ->required()
      ->check(CLI::IsMember({"parallelizable", "ph", "cr", "ac6", "ph6d", "equiv"}));
  decide_cmd->add_option("file", file, "descriptor file")->required();

  auto* lai = app.add_subcommand("lai", "Lai indices from the descriptor's pairing data");
  lai->add_option("file", file, "descriptor file")->required();

  std::string group;
  int dim = 0;
  std::string out_path;
  std::string log_path;
  auto* construct = app.add_subcommand("construct", "Build a parallelizable manifold with prescribed pi1");
  construct->add_option("--group", group, "presentation, e.g. \"<a,b | a b a^-1 b^-1>\"")->required();
  construct->add_option("--dim", dim, "even dimension >= 6")->required();
  construct->add_option("--out", out_path, "descriptor output file");
  construct->add_option("--log", log_path, "provenance log output file");

  auto* tables = app.add_subcommand("tables", "Obstruction group tables");
  tables->require_subcommand(1);
  int max_n = 16;
  auto* kn = tables->add_subcommand("kn", "Kervaire obstruction groups K_n");
  kn->add_option("--max", max_n, "largest n")->check(CLI::Range(1, 100000));
  int bott_n = 4;
  int max_k = 16;
  auto* bott = tables->add_subcommand("bott", "pi_k(SO(2n)/U(n)) in the stable range");
  bott->add_option("--n", bott_n, "n")->check(CLI::Range(1, 100000));
  bott->add_option("--max-k", max_k, "largest k")->check(CLI::Range(0, 100000));

  bool verbose = false;
  auto* snf = app.add_subcommand("snf", "Invariant factors of an integer matrix file");
  snf->add_option("file", file, "matrix file: rows cols then entries")->required();
  snf->add_flag("--verbose", verbose, "also print U and V with U*A*V = D");

  auto* validate_cmd = app.add_subcommand("validate", "Check a descriptor file for consistency");
  validate_cmd->add_option("file", file, "descriptor file")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("parembed");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*invariants) {
      print_invariants(read_descriptor(file), out);
    } else if (*decide_cmd) {
      const auto m = read_descriptor(file);
      if (kind == "equiv") {
        const auto report = check_equivalence(m);
        out << "PH " << format_decision(report.ph);
        out << "CR " << format_decision(report.cr);
        out << "EQUIVALENT: " << (report.agree() ? "yes" : "no") << '\n';
      } else {
        out << format_decision(decide(*parse_decision_kind(kind), m));
      }
    } else if (*lai) {
      const auto m = read_descriptor(file);
      require_valid(m);
      if (!m.lai) throw Error(Errc::invalid_argument, "descriptor has no lai.n / lai.pairings");
      const auto chi = descriptor_euler(m);
      if (!chi) throw Error(Errc::unknown_entries, "Euler characteristic is undetermined");
      const auto idx = lai_indices(*chi, *m.lai);
      out << "I+ = " << idx.plus << '\n';
      out << "I- = " << idx.minus << '\n';
      out << "cr_precondition = " << (idx.plus == 0 && idx.minus == 0 ? "true" : "false") << '\n';
    } else if (*construct) {
      const auto result = construct_M(parse_presentation(group), dim);
      std::string text = format_descriptor(result.descriptor);
      if (log_path.empty()) {
        text = commented(result.log.format()) + text;
      } else {
        write_text(log_path, result.log.format());
      }
      if (out_path.empty()) {
        out << text;
      } else {
        write_text(out_path, text);
      }
    } else if (*tables) {
      if (*kn) out << format_kervaire_table(max_n);
      if (*bott) out << format_bott_table(bott_n, max_k);
    } else if (*snf) {
      const auto m = parse_matrix(read_text_file(file));
      const auto form = smith_normal_form(m);
      for (std::size_t i = 0; i < form.diagonal.size(); ++i) out << (i ? " " : "") << form.diagonal[i];
      out << '\n';
      if (verbose) {
        out << "U =\n" << format_matrix(form.left) << "V =\n" << format_matrix(form.right);
      }
    } else if (*validate_cmd) {
      const auto report = validate(read_descriptor(file));
      if (report.empty()) {
        out << "OK\n";
      } else {
        for (const auto& v : report) out << "VIOLATION " << v.rule << ": " << v.detail << '\n';
        return kInconsistent;
      }
    }
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.is_inconsistency() ? kInconsistent : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace parembed
