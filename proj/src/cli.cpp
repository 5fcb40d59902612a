#include "monadlab/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "monadlab/gens.hpp"
#include "monadlab/invariant.hpp"
#include "monadlab/matrix_io.hpp"
#include "monadlab/monad_io.hpp"
#include "monadlab/symcomb.hpp"

namespace monadlab::cli {

namespace {

struct Options {
  int n = 0, k = 0, terms = 0;
  std::string format = "table";
  std::string in, out, form, field, kind, pairing, out_dir;
  bool blocks_only = false, verify = false;
  std::size_t trials = 0, probe_points = generator_probe_points;
  std::uint64_t seed = 0;
};

std::int64_t point_box() {
  const char* env = std::getenv("MONADLAB_POINT_BOX");
  if (!env) return default_point_box;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0' || v < 1) throw ParseError("MONADLAB_POINT_BOX must be a positive integer");
  return v;
}

/// Writes to `path`, or to `fallback` when path is empty.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot write '" + path + "'");
  body(file);
}

const char* flag(bool b) { return b ? "true" : "false"; }

template <class S>
std::string format_vector(const Vec<S>& v, const Field& f) {
  std::string s;
  for (Index i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar_traits<S>::format(v(i), f);
  return s;
}

template <class S>
std::string describe_probe(const RankProbe<S>& probe, const Field& f) {
  if (probe.ok()) return "ok (" + std::to_string(probe.points_checked) + " points)";
  const auto& c = *probe.counterexample;
  return std::string("counterexample map=") + (c.map == MonadMap::alpha ? "alpha" : "beta") +
         " rank=" + std::to_string(c.observed_rank) + " point=" + format_vector(c.point, f);
}

int cmd_layout(const Options& o, std::ostream& out) {
  const QLayout layout = q_layout(o.n, o.k);
  out << (o.format == "csv" ? render_layout_csv(layout) : render_layout_table(layout));
  return verified;
}

int cmd_dims(const Options& o, std::ostream& out) {
  const auto d = dimension_identity(o.n, o.k);
  out << d.lhs.get_str() << (d.equal ? " = " : " != ") << d.rhs.get_str() << '\n';
  return d.equal ? verified : falsified;
}

int cmd_build_q(const Options& o, std::ostream& out) {
  return std::visit(
      [&](const auto& d) {
        if (o.blocks_only) {
          emit(o.out, out, [&](std::ostream& s) { s << render_layout_table(q_layout(d.n(), d.k())); });
          return int(verified);
        }
        const auto q = build_Q(d);
        emit(o.out, out, [&](std::ostream& s) { write_matrix(s, q.matrix, d.field()); });
        return int(verified);
      },
      load_monad(o.in));
}

int cmd_det_q(const Options& o, std::ostream& out) {
  return std::visit(
      [&](const auto& d) {
        using S = typename std::decay_t<decltype(d)>::scalar_type;
        const S v = det_Q(d);
        out << scalar_traits<S>::format(v, d.field()) << '\n';
        return int(is_zero(v) ? falsified : verified);
      },
      load_monad(o.in));
}

int cmd_syzygy(const Options& o, std::ostream& out) {
  return std::visit(
      [&](const auto& d) {
        if (!o.verify) {
          const auto s = build_syzygy(d);
          emit(o.out, out, [&](std::ostream& os) { write_matrix(os, s.matrix, d.field()); });
          return int(verified);
        }
        const auto s = build_syzygy(d);
        const auto r = verify_syzygy(d);
        out << "S shape: " << s.matrix.rows() << "x" << s.matrix.cols() << '\n';
        out << "S nonzero: " << flag(r.syzygy_nonzero) << '\n';
        out << "orthogonal defects zero: " << flag(r.defects_zero) << '\n';
        if (r.residual_zero) {
          out << "residual: zero\n";
        } else {
          out << "residual: nonzero in block rows";
          for (auto i : r.nonzero_block_rows) out << ' ' << i;
          out << '\n';
        }
        const bool ok = r.residual_zero && r.syzygy_nonzero;
        if (ok)
          out << "verdict: Q S = 0 with S != 0, det Q = 0 forced\n";
        else if (!r.syzygy_nonzero)
          out << "verdict: S = 0, syzygy argument inapplicable\n";
        else
          out << "verdict: Q S != 0\n";
        return int(ok ? verified : falsified);
      },
      load_monad(o.in));
}

template <class S>
int check_monad(const MonadData<S>& d, const Options& o, std::ostream& out) {
  const bool orthogonal = o.form == "orthogonal";
  const std::int64_t box = point_box();
  PairingForm<S> form = canonical_J<S>(
      orthogonal ? PairingKind::orthogonal_identity : PairingKind::symplectic_canonical, d.n(), d.k(), d.field());
  if (!o.pairing.empty()) {
    if (orthogonal) throw ParseError("--pairing is only supported with --form symplectic");
    std::ifstream in(o.pairing);
    if (!in) throw ParseError("cannot open '" + o.pairing + "'");
    auto any = read_matrix(in);
    auto* fm = std::get_if<FieldMatrix<S>>(&any);
    if (!fm || !(fm->field == d.field())) throw ParseError("pairing form is not over " + d.field().to_string());
    if (!is_skew(fm->matrix)) throw ParseError("symplectic pairing form must be skew-symmetric");
    try {
      form = PairingForm<S>::custom(fm->matrix);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (form.matrix().rows() != d.w_dim()) throw ParseError("pairing form does not match dim W");

  const auto defects = quadratic_defect(d, form);
  const auto bad = first_nonzero_defect(defects);
  const auto probe = max_rank_probe(d, form, o.trials, o.seed, box);
  const S dq = det_Q(d);

  out << "form: " << to_string(form.kind()) << '\n';
  if (bad)
    out << "defects: nonzero at (alpha,beta)=(" << bad->first << "," << bad->second << ")\n";
  else
    out << "defects: zero\n";
  out << "rank probe: " << describe_probe(probe, d.field()) << '\n';
  out << "det Q: " << scalar_traits<S>::format(dq, d.field()) << '\n';

  if (orthogonal) {
    out << "verdict: " << orthogonal_verdict(d).describe() << '\n';
    return falsified;
  }
  const bool pass = !bad && probe.ok();
  if (!pass)
    out << "verdict: not a symplectic instanton candidate\n";
  else if (is_zero(dq))
    out << "verdict: symplectic conditions hold; det Q = 0 in " << d.field().to_string() << ", retry another prime\n";
  else
    out << "verdict: symplectic conditions hold; det Q != 0\n";
  return pass ? verified : falsified;
}

int cmd_check(const Options& o, std::ostream& out) {
  return std::visit([&](const auto& d) { return check_monad(d, o, out); }, load_monad(o.in));
}

template <class S>
int report_generated(const GeneratorReport<S>& r, const Options& o, std::ostream& out) {
  emit(o.out, out, [&](std::ostream& s) { write_monad(s, r.data); });
  out << "wrote " << o.out << '\n';
  out << "defects_ok=" << flag(r.defects_ok) << " rank_probe=" << (r.rank_probe.ok() ? "ok" : "counterexample")
      << " detQ=" << (r.det_q ? scalar_traits<S>::format(*r.det_q, r.data.field()) : std::string("not-computed"))
      << '\n';
  return verified;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.kind == "special") {
    const Field f = o.field.empty() ? Field::rational() : Field::parse(o.field);
    if (f.is_rational()) return report_generated(gen_special_symplectic<Rational>(o.n, o.k, f), o, out);
    return report_generated(gen_special_symplectic<Zp>(o.n, o.k, f), o, out);
  }
  const Field f = Field::parse(o.field.empty() ? "gf:101" : o.field);
  if (!f.is_prime()) throw ParseError("gen " + o.kind + " needs --field gf:P");
  if (o.kind == "isotropic") return report_generated(gen_isotropic_orthogonal(o.n, o.k, f.modulus(), o.seed), o, out);
  return report_generated(gen_skew_orthogonal(o.n, o.k, f.modulus(), o.seed), o, out);
}

int cmd_search(const Options& o, std::ostream& out) {
  const Field f = Field::parse(o.field);
  if (!f.is_prime()) throw ParseError("search-orthogonal needs --field gf:P");
  const SearchSummary s = search_orthogonal(o.n, o.k, f.modulus(), o.trials, o.seed, o.probe_points);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    for (std::size_t t = 0; t < s.rows.size(); ++t) {
      const auto path = std::filesystem::path(o.out_dir) / ("candidate_" + std::to_string(t + 1) + ".monad");
      emit(path.string(), out, [&](std::ostream& os) { write_monad(os, s.rows[t].data); });
    }
  }
  out << render_search_table(s);
  return s.det_q_zero == s.rows.size() && s.instanton_candidates == 0 ? verified : falsified;
}

int cmd_chern(const Options& o, std::ostream& out) {
  const auto c = chern_coefficients(o.k, o.terms);
  for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i].get_str();
  out << '\n';
  return verified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact constructions for instanton monads on P^{2n+1}", "monadlab"};
  app.require_subcommand(1, 1);

  const auto nk = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "P^{2n+1} parameter")->required()->check(CLI::Range(1, 64));
    sub->add_option("--k", o.k, "quantum number")->required()->check(CLI::Range(1, 64));
  };

  auto* layout = app.add_subcommand("layout", "print the block layout of Q");
  nk(layout);
  layout->add_option("--format", o.format)->check(CLI::IsMember({"table", "csv"}));

  auto* dims = app.add_subcommand("dims", "print dim W(x)S^nI = dim V(x)S^{n+1}I");
  nk(dims);

  auto* build_q = app.add_subcommand("build-q", "assemble Q from a monad file");
  build_q->add_option("--in", o.in)->required();
  build_q->add_option("--out", o.out);
  build_q->add_flag("--blocks-only", o.blocks_only, "print the labelled block layout instead of Q");

  auto* det_q = app.add_subcommand("det-q", "print det Q (exit 1 when zero)");
  det_q->add_option("--in", o.in)->required();

  auto* syzygy = app.add_subcommand("syzygy", "build S, or verify Q S = 0");
  syzygy->add_option("--in", o.in)->required();
  syzygy->add_option("--out", o.out);
  syzygy->add_flag("--verify", o.verify);

  auto* check = app.add_subcommand("check", "quadratic defects, rank probe and verdict");
  check->add_option("--in", o.in)->required();
  check->add_option("--form", o.form)->required()->check(CLI::IsMember({"orthogonal", "symplectic"}));
  check->add_option("--pairing", o.pairing, "custom skew form in matrix format");
  check->add_option("--trials", o.trials)->default_val(generator_probe_points)->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed)->default_val(0);

  auto* gen = app.add_subcommand("gen", "generate monad data");
  gen->add_option("kind", o.kind)->required()->check(CLI::IsMember({"special", "isotropic", "skew"}));
  nk(gen);
  gen->add_option("--field", o.field);
  gen->add_option("--seed", o.seed)->default_val(0);
  gen->add_option("--out", o.out)->required();

  auto* search = app.add_subcommand("search-orthogonal", "randomized orthogonal-candidate search");
  nk(search);
  search->add_option("--field", o.field)->required();
  search->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
  search->add_option("--seed", o.seed)->default_val(0);
  search->add_option("--probe-points", o.probe_points)->check(CLI::PositiveNumber);
  search->add_option("--out-dir", o.out_dir, "write every candidate as a monad file");

  auto* chern = app.add_subcommand("chern", "Chern coefficients of (1-t^2)^{-k}");
  chern->add_option("--k", o.k)->required()->check(CLI::PositiveNumber);
  chern->add_option("--terms", o.terms)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> argv_storage{"monadlab"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return verified;
    }
    err << "monadlab: " << e.what() << '\n';
    return bad_input;
  }

  try {
    if (layout->parsed()) return cmd_layout(o, out);
    if (dims->parsed()) return cmd_dims(o, out);
    if (build_q->parsed()) return cmd_build_q(o, out);
    if (det_q->parsed()) return cmd_det_q(o, out);
    if (syzygy->parsed()) return cmd_syzygy(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (gen->parsed()) return cmd_gen(o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (chern->parsed()) return cmd_chern(o, out);
  } catch (const std::exception& e) {
    err << "monadlab: " << e.what() << '\n';
    return bad_input;
  }
  return bad_input;
}

}  // namespace monadlab::cli
