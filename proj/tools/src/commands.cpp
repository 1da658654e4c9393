#include "commands.hpp"

#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "wittgrass/centralext.hpp"
#include "wittgrass/demazure.hpp"
#include "wittgrass/errors.hpp"
#include "wittgrass/grassmannian.hpp"
#include "wittgrass/matrix_io.hpp"
#include "wittgrass/wittlaws.hpp"

namespace wittgrass::cli {

namespace {

Json parts_json(const Partition& l) { return Json(l.parts()); }

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string code_string(const RingElem& x) { return std::to_string(x.field_code()); }

Json matrix_json(const Matrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < M.cols(); ++j) row.push_back(format_entry(M.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const Matrix& M, const std::string& indent) {
  std::string s;
  for (int i = 0; i < M.rows(); ++i) {
    s += indent;
    for (int j = 0; j < M.cols(); ++j) s += (j ? " " : "") + format_entry(M.at(i, j));
    s += "\n";
  }
  return s;
}

CtxPtr context_for(const MatrixFile& file) {
  const auto field = file.field();
  const int N = file.N.value_or(default_loop_precision(field.p));
  return GaloisRingCtx::make(field, N);
}

Matrix square_matrix(const MatrixFile& file, const CtxPtr& ctx, const std::string& what) {
  Matrix A = to_matrix(file, ctx);
  if (A.rows() != A.cols() || A.rows() == 0) throw InputError(what + ": expected a nonempty square matrix");
  return A;
}

// Checks an optional p/d header against the working field.
void check_field(const MatrixFile& file, const FieldParams& field, const std::string& what) {
  if (file.p && *file.p != field.p) throw InputError(what + ": p = " + std::to_string(*file.p) + " does not match " + std::to_string(field.p));
  if (file.d && *file.d != field.d) throw InputError(what + ": d = " + std::to_string(*file.d) + " does not match " + std::to_string(field.d));
}

std::string witness_text(const std::vector<int>& c) {
  std::string s;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c[j] != 1) s += std::to_string(c[j]) + "*";
    s += "eps_" + std::to_string(j + 1);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

Report witt_laws_command(const WittLawsArgs& a) {
  if (!is_prime(a.p)) throw InputError("witt-laws: p must be prime");
  if (a.m < 1 || a.m > kMaxWittLength) throw InputError("witt-laws: m must be in [1, " + std::to_string(kMaxWittLength) + "]");
  const auto laws = witt_laws(a.p, a.m);
  const auto names = laws->variable_names();
  const auto order = laws->canonical_order();
  Report r;
  r.parameters = {{"p", a.p}, {"m", a.m}};
  Json sum = Json::array(), product = Json::array();
  r.csv = "law,index,polynomial\n";
  for (int i = 0; i < a.m; ++i) {
    const auto s = laws->sum[static_cast<std::size_t>(i)].to_string(names, order);
    sum.push_back(s);
    r.text += "S_" + std::to_string(i) + " = " + s + "\n";
    r.csv += "S," + std::to_string(i) + "," + quoted(s) + "\n";
  }
  for (int i = 0; i < a.m; ++i) {
    const auto s = laws->product[static_cast<std::size_t>(i)].to_string(names, order);
    product.push_back(s);
    r.text += "P_" + std::to_string(i) + " = " + s + "\n";
    r.csv += "P," + std::to_string(i) + "," + quoted(s) + "\n";
  }
  const bool ok = verify_ghost_identities(*laws);
  if (!ok) throw InternalInvariantError("witt-laws: ghost identities fail");
  r.result = {{"sum", sum}, {"product", product}, {"ghost_identities", ok}};
  r.text += "ghost identities: verified\n";
  return r;
}

Report dominance_command(const DominanceArgs& a) {
  const auto lhs = Partition::parse(a.lhs);
  const auto rhs = Partition::parse(a.rhs);
  Report r;
  r.parameters = {{"lhs", parts_json(lhs)}, {"rhs", parts_json(rhs)}};
  Json methods = Json::array();
  std::optional<bool> verdict;
  r.csv = "method,verdict\n";
  std::string lines;
  for (auto m : kAllDominanceMethods) {
    const bool v = dominates(lhs, rhs, m);
    if (verdict && *verdict != v) throw InternalInvariantError("dominance: characterizations disagree");
    verdict = v;
    methods.push_back({{"method", method_name(m)}, {"verdict", v}});
    lines += "  " + method_name(m) + ": " + (v ? "true" : "false") + "\n";
    r.csv += method_name(m) + "," + (v ? "true" : "false") + "\n";
  }
  r.text = lhs.to_string() + " >= " + rhs.to_string() + ": " + (*verdict ? "true" : "false") + "\n" + lines;
  r.result = {{"verdict", *verdict}, {"methods", methods}};
  if (const auto w = epsilon_witness(lhs, rhs)) {
    r.result["witness"] = *w;
    r.text += "witness: " + witness_text(*w) + "\n";
  } else {
    r.result["witness"] = nullptr;
  }
  return r;
}

Report snf_command(const SnfArgs& a) {
  const auto file = read_matrix_file(a.matrix);
  const auto ctx = context_for(file);
  const IsogenyMatrix A(square_matrix(file, ctx, a.matrix));
  const auto& s = A.smith();
  Report r;
  r.parameters = {{"matrix", a.matrix}, {"p", ctx->p()}, {"d", ctx->degree()}, {"N", ctx->precision()}, {"n", A.n()}};
  r.result = {{"type", parts_json(A.cokernel_type())},
              {"length", A.module_length()},
              {"exponents", s.exponents},
              {"U", matrix_json(s.U)},
              {"V", matrix_json(s.V)}};
  r.text = "type " + A.cokernel_type().to_string() + "\nlength " + std::to_string(A.module_length()) + "\nexponents";
  for (int e : s.exponents) r.text += " " + std::to_string(e);
  r.text += "\nU\n" + matrix_text(s.U, "  ") + "V\n" + matrix_text(s.V, "  ");
  return r;
}

Report det_command(const DetArgs& a) {
  const auto file = read_matrix_file(a.matrix);
  const auto ctx = context_for(file);
  const TorsionModule Q{IsogenyMatrix(square_matrix(file, ctx, a.matrix))};
  ChainBasis chain;
  if (a.chain) {
    const auto cf = read_matrix_file(*a.chain);
    check_field(cf, ctx->field(), *a.chain);
    const Matrix W = to_matrix(cf, ctx);
    if (W.rows() > 0 && W.cols() != Q.rank())
      throw InputError(*a.chain + ": chain vectors need " + std::to_string(Q.rank()) + " entries");
    std::vector<std::vector<RingElem>> rows;
    for (int i = 0; i < W.rows(); ++i) rows.push_back(W.row(i));
    chain = chain_from_vectors(Q, rows);
  } else {
    chain = reference_chain(Q);
  }
  const auto line = det_torsion(Q, chain);
  Report r;
  r.parameters = {{"matrix", a.matrix}, {"chain", a.chain ? Json(*a.chain) : Json(nullptr)}, {"p", ctx->p()}, {"d", ctx->degree()},
                  {"N", ctx->precision()}};
  r.result = {{"type", parts_json(Q.type())}, {"scalar", code_string(line.scalar)}, {"degree", line.degree}};
  r.text = "(" + code_string(line.scalar) + ", " + std::to_string(line.degree) + ")\n";
  return r;
}

Report count_command(const CountArgs& a, const Common& common) {
  if (a.leq && !a.type) throw InputError("count: --leq needs --type");
  EnumOptions opt;
  opt.workers = common.workers;
  std::optional<Partition> lambda;
  if (a.type) {
    lambda = Partition::parse(*a.type);
    if (lambda->length() > a.n || lambda->largest() > a.c)
      throw InputError("count: type " + lambda->to_string() + " does not fit the " + std::to_string(a.n) + " x " + std::to_string(a.c) + " box");
    opt.colength = lambda->total();
  }
  const auto table = stratum_counts(a.n, a.c, a.q, opt);
  Report r;
  r.parameters = {{"n", a.n}, {"c", a.c}, {"q", a.q}};
  if (lambda) {
    r.parameters["type"] = parts_json(*lambda);
    r.parameters["leq"] = a.leq;
  }
  Json strata = Json::array();
  r.csv = "type,count\n";
  std::string table_text;
  for (const auto& [mu, count] : table.counts) {
    strata.push_back({{"type", parts_json(mu)}, {"count", count}});
    r.csv += quoted(mu.to_string()) + "," + std::to_string(count) + "\n";
    table_text += mu.to_string() + " " + std::to_string(count) + "\n";
  }
  r.result = {{"n", a.n}, {"c", a.c}, {"q", a.q}, {"strata", strata}, {"total", table.total()}};
  if (lambda) {
    const auto value = a.leq ? count_leq(table, *lambda) : table.count(*lambda);
    r.result["query"] = {{"type", parts_json(*lambda)}, {"leq", a.leq}, {"count", value}};
    r.text = std::to_string(value) + "\n";
  } else {
    r.text = table_text + "total " + std::to_string(table.total()) + "\n";
  }
  return r;
}

Report demazure_command(const DemazureArgs& a, const Common& common) {
  const auto lambda = Partition::parse(a.type);
  const auto table = demazure_fibers(a.n, lambda, a.q, common.workers);
  EnumOptions opt;
  opt.workers = common.workers;
  opt.colength = lambda.total();
  const auto strata = stratum_counts(a.n, table.c, a.q, opt);

  Report r;
  r.parameters = {{"n", a.n}, {"type", parts_json(lambda)}, {"q", a.q}, {"fibers", a.fibers}};
  r.text = "chains " + std::to_string(table.total_chains) + "\n";
  r.csv = "type,stratum_size,points,fiber_size,count\n";
  Json out = Json::array();
  std::uint64_t sum = 0;
  bool constant = true;
  for (const auto& [mu, size] : strata.counts) {
    const auto it = table.strata.find(mu);
    if (!dominates(lambda, mu) && it == table.strata.end()) continue;
    Json entry = {{"type", parts_json(mu)}, {"stratum_size", size}};
    std::uint64_t points = 0;
    Json hist = Json::array();
    std::string hist_text;
    if (it != table.strata.end()) {
      points = it->second.points.size();
      for (const auto& [fs, cnt] : it->second.histogram) {
        hist.push_back({{"fiber_size", fs}, {"points", cnt}});
        hist_text += (hist_text.empty() ? "" : ", ") + std::to_string(fs) + " x " + std::to_string(cnt);
        r.csv += quoted(mu.to_string()) + "," + std::to_string(size) + "," + std::to_string(points) + "," + std::to_string(fs) + "," +
                 std::to_string(cnt) + "\n";
      }
      if (it->second.histogram.size() != 1) constant = false;
      if (points != size) constant = false;
      sum += size * (it->second.histogram.empty() ? 0 : it->second.histogram.begin()->first);
    } else {
      constant = false;
      r.csv += quoted(mu.to_string()) + "," + std::to_string(size) + ",0,0,0\n";
    }
    entry["points"] = points;
    entry["fiber_sizes"] = hist;
    r.text += "stratum " + mu.to_string() + ": size " + std::to_string(size) + ", points hit " + std::to_string(points) + ", fiber sizes " +
              (hist_text.empty() ? "none" : hist_text) + "\n";
    if (a.fibers && it != table.strata.end()) {
      Json pts = Json::array();
      for (const auto& [L, fs] : it->second.points) {
        pts.push_back({{"lattice", matrix_json(L.gens())}, {"fiber_size", fs}});
        std::string rows;
        for (int i = 0; i < L.gens().rows(); ++i) {
          rows += i ? "; " : "";
          for (int j = 0; j < L.gens().cols(); ++j) rows += (j ? " " : "") + format_entry(L.gens().at(i, j));
        }
        r.text += "  [" + rows + "] " + std::to_string(fs) + "\n";
      }
      entry["points_detail"] = pts;
    }
    out.push_back(entry);
  }
  const bool holds = constant && sum == table.total_chains && table.total_chains == chain_count(a.n, lambda, a.q);
  r.result = {{"n", a.n},
              {"q", a.q},
              {"type", parts_json(lambda)},
              {"window", table.c},
              {"chains", table.total_chains},
              {"strata", out},
              {"identity", {{"product", chain_count(a.n, lambda, a.q)}, {"sum", sum}, {"holds", holds}}}};
  r.text += "identity " + std::to_string(chain_count(a.n, lambda, a.q)) + " = " + std::to_string(sum) + (holds ? " holds" : " FAILS") + "\n";
  return r;
}

Report tame_command(const TameArgs& a) {
  const auto ctx = GaloisRingCtx::make(make_field(a.p, a.d), default_loop_precision(a.p));
  const auto x = KElement::parse(a.a, ctx);
  const auto y = KElement::parse(a.b, ctx);
  const auto s = tame_symbol(x, y);
  Report r;
  r.parameters = {{"p", a.p}, {"d", a.d}, {"a", a.a}, {"b", a.b}};
  r.result = {{"a", {{"valuation", x.valuation()}, {"residue", code_string(x.residue())}}},
              {"b", {{"valuation", y.valuation()}, {"residue", code_string(y.residue())}}},
              {"symbol", code_string(s)}};
  r.text = code_string(s) + "\n";
  return r;
}

namespace {

Matrix random_sl_integral(const CtxPtr& ctx, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> dist(0, ctx->modulus() - 1);
  auto random_elem = [&] {
    std::vector<std::int64_t> c;
    for (int k = 0; k < ctx->degree(); ++k) c.push_back(dist(rng));
    return RingElem(ctx, c);
  };
  // unipotent upper times unipotent lower
  Matrix U = Matrix::identity(ctx, n), L = Matrix::identity(ctx, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i < j) U.at(i, j) = random_elem();
      if (i > j) L.at(i, j) = random_elem();
    }
  return U * L;
}

LoopGroupElt random_sl(const CtxPtr& ctx, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> vd(-2, 2);
  std::vector<int> v(static_cast<std::size_t>(n));
  while (true) {
    int sum = 0;
    for (int i = 0; i + 1 < n; ++i) sum += v[static_cast<std::size_t>(i)] = vd(rng);
    v.back() = -sum;
    if (v.back() >= -2 && v.back() <= 2) break;
  }
  std::vector<KElement> diag;
  for (int x : v) diag.emplace_back(x, RingElem(ctx, 1));
  return LoopGroupElt(random_sl_integral(ctx, n, rng)) * LoopGroupElt::diagonal(diag) * LoopGroupElt(random_sl_integral(ctx, n, rng));
}

}  // namespace

Report cocycle_command(const CocycleArgs& a, const Common& common) {
  const auto field = make_field(a.p, a.d);
  const int N = a.precision.value_or(default_loop_precision(a.p));
  const auto ctx = GaloisRingCtx::make(field, N);
  const auto gf = read_matrix_file(a.g);
  const auto hf = read_matrix_file(a.h);
  check_field(gf, field, a.g);
  check_field(hf, field, a.h);
  const auto g = LoopGroupElt::from_file(gf, ctx);
  const auto h = LoopGroupElt::from_file(hf, ctx);
  if (g.n() != a.n || h.n() != a.n) throw InputError("cocycle: matrices must be " + std::to_string(a.n) + " x " + std::to_string(a.n));

  Report r;
  r.parameters = {{"p", a.p}, {"d", a.d}, {"n", a.n}, {"N", N}, {"g", a.g}, {"h", a.h}, {"a", a.a ? Json(*a.a) : Json(nullptr)}};
  const auto c = cocycle(g, h, a.a);
  r.result = {{"cocycle", code_string(c)},
              {"levels", {{"h", a.a.value_or(h.valuation())}, {"g", a.a.value_or(g.valuation())}}},
              {"commute", g.commutes_with(h)}};
  r.text = "cocycle " + code_string(c) + "\n";
  if (g.commutes_with(h)) {
    const auto pairing = commutator_pairing(g, h, a.a);
    r.result["pairing"] = code_string(pairing);
    r.text += "pairing " + code_string(pairing) + "\n";
  }
  if (a.check > 0) {
    r.parameters["check"] = a.check;
    r.parameters["seed"] = common.seed;
    std::mt19937_64 rng(common.seed);
    int good = 0;
    for (int t = 0; t < a.check; ++t) {
      const auto x = random_sl(ctx, a.n, rng), y = random_sl(ctx, a.n, rng), z = random_sl(ctx, a.n, rng);
      if (cocycle(x, y) * cocycle(x * y, z) == cocycle(x, y * z) * cocycle(y, z)) ++good;
    }
    r.result["check"] = {{"triples", a.check}, {"holds", good}};
    r.text += "cocycle identity " + std::to_string(good) + "/" + std::to_string(a.check) + "\n";
    if (good != a.check) throw InternalInvariantError("cocycle identity failed on " + std::to_string(a.check - good) + " random triples");
  }
  return r;
}

}  // namespace wittgrass::cli
