#include "wittgrass_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wittgrass/errors.hpp"

namespace wittgrass::cli {

namespace {

enum class Format { Text, Json, Csv };

void emit(const std::string& command, const Report& r, Format format, std::optional<double> wall, std::ostream& out) {
  if (format == Format::Json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["parameters"] = r.parameters;
    doc["result"] = r.result;
    if (wall) doc["wall_time_s"] = *wall;
    out << doc.dump(2) << "\n";
    return;
  }
  if (format == Format::Csv) {
    if (r.csv.empty()) throw InputError(command + ": no CSV form; use --json");
    out << r.csv;
  } else {
    out << r.text;
  }
  if (wall) out << "wall_time_s " << std::fixed << std::setprecision(6) << *wall << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Witt vector lattices, strata counts, determinant lines", "wittgrass"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();

  bool json = false, csv = false, timing = false;
  Common common;
  common.seed = kDefaultSeed;
  app.add_flag("--json", json, "JSON output");
  app.add_flag("--csv", csv, "CSV output where tabular");
  app.add_flag("--timing", timing, "include wall time in the output");
  app.add_option("--workers", common.workers, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--seed", common.seed, "seed for randomized checks (default " + std::to_string(kDefaultSeed) + ")");

  WittLawsArgs wl;
  auto* c_wl = app.add_subcommand("witt-laws", "universal Witt sum and product laws");
  c_wl->add_option("--p", wl.p, "prime")->required();
  c_wl->add_option("--m", wl.m, "length")->required();

  DominanceArgs dom;
  auto* c_dom = app.add_subcommand("dominance", "dominance order, all characterizations");
  c_dom->add_option("--lhs", dom.lhs, "partition, e.g. 3,1,1")->required();
  c_dom->add_option("--rhs", dom.rhs, "partition")->required();

  SnfArgs snf;
  auto* c_snf = app.add_subcommand("snf", "Smith form and cokernel type of a matrix file");
  c_snf->add_option("--matrix", snf.matrix, "matrix file")->required();

  DetArgs det;
  auto* c_det = app.add_subcommand("det", "graded determinant line of a torsion module");
  c_det->add_option("--matrix", det.matrix, "presentation matrix file")->required();
  c_det->add_option("--chain", det.chain, "chain basis file, one vector per row");

  CountArgs cnt;
  auto* c_cnt = app.add_subcommand("count", "lattice counts per stratum");
  c_cnt->add_option("--n", cnt.n, "rank")->required();
  c_cnt->add_option("--c", cnt.c, "window")->required();
  c_cnt->add_option("--q", cnt.q, "field size")->required();
  c_cnt->add_option("--type", cnt.type, "single stratum type");
  c_cnt->add_flag("--leq", cnt.leq, "sum over the closure of --type");

  DemazureArgs dem;
  auto* c_dem = app.add_subcommand("demazure", "filtration chains grouped by endpoint stratum");
  c_dem->add_option("--n", dem.n, "rank")->required();
  c_dem->add_option("--type", dem.type, "partition")->required();
  c_dem->add_option("--q", dem.q, "field size")->required();
  c_dem->add_flag("--fibers", dem.fibers, "list every endpoint");

  TameArgs tame;
  auto* c_tame = app.add_subcommand("tame", "tame symbol of two elements");
  c_tame->add_option("--p", tame.p, "prime")->required();
  c_tame->add_option("--d", tame.d, "residue degree");
  c_tame->add_option("-a", tame.a, "p^v*(digits)")->required();
  c_tame->add_option("-b", tame.b, "p^v*(digits)")->required();

  CocycleArgs coc;
  auto* c_coc = app.add_subcommand("cocycle", "determinant cocycle on SL_n");
  c_coc->add_option("--p", coc.p, "prime")->required();
  c_coc->add_option("--d", coc.d, "residue degree");
  c_coc->add_option("--n", coc.n, "size")->required();
  c_coc->add_option("--g", coc.g, "matrix file")->required();
  c_coc->add_option("--h", coc.h, "matrix file")->required();
  c_coc->add_option("--a", coc.a, "common level");
  c_coc->add_option("--precision", coc.precision, "working precision N");
  c_coc->add_option("--check", coc.check, "random triples for the cocycle identity")->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (json && csv) {
    err << "error: --json and --csv are exclusive\n";
    return kInputError;
  }
  const Format format = json ? Format::Json : csv ? Format::Csv : Format::Text;

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    if (sub == c_wl) r = witt_laws_command(wl);
    else if (sub == c_dom) r = dominance_command(dom);
    else if (sub == c_snf) r = snf_command(snf);
    else if (sub == c_det) r = det_command(det);
    else if (sub == c_cnt) r = count_command(cnt, common);
    else if (sub == c_dem) r = demazure_command(dem, common);
    else if (sub == c_tame) r = tame_command(tame);
    else r = cocycle_command(coc, common);
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    // Timing stays off stdout unless asked for, so identical runs print identical bytes.
    std::ostringstream buf;
    emit(name, r, format, timing ? std::optional<double>(wall) : std::nullopt, buf);
    out << buf.str();
    if (!timing) err << name << ": " << std::fixed << std::setprecision(3) << wall << " s\n";
    return kOk;
  } catch (const WorkBoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kWorkBound;
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace wittgrass::cli
