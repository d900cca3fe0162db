#include "trop/cli.hpp"

#include <CLI11.hpp>

#include <json.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "trop/groups.hpp"
#include "trop/io.hpp"

namespace trop::cli {

namespace {

using nlohmann::ordered_json;

constexpr long kDefaultCap = 10;

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(rat_to_string(v(i)));
  return a;
}

ordered_json mat_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json ext_mat_json(const ExtMat& m) {
  ordered_json rows = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(ext_to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json indices_json(const std::vector<Index>& v) {
  ordered_json a = ordered_json::array();
  for (Index i : v) a.push_back(static_cast<long long>(i + 1));  // 1-based for humans
  return a;
}

ordered_json classes_json(const std::vector<std::vector<Index>>& cs) {
  ordered_json a = ordered_json::array();
  for (const auto& c : cs) a.push_back(indices_json(c));
  return a;
}

ordered_json perm_json(const Perm& p) {
  ordered_json a = ordered_json::array();
  for (Index i = 0; i < p.size(); ++i) a.push_back(static_cast<long long>(p(i) + 1));
  return a;
}

ordered_json unit_json(const MonomialUnit& g) {
  ordered_json u;
  u["sigma"] = perm_json(g.sigma);
  u["lambda"] = vec_json(g.lambda);
  return u;
}

std::string perm_text(const Perm& p) {
  std::string s;
  for (Index i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p(i) + 1);
  }
  return s;
}

std::string indices_text(const std::vector<Index>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i] + 1);
  }
  return s;
}

/// Per-invocation state: parsed globals, the input fingerprint, and the
/// self-checks performed along the way.
struct Ctx {
  bool json = false;
  uint64_t seed = 1;
  long max_n = kDefaultCap;
  std::string hash_input;
  std::vector<std::string> assertions;
  std::mt19937_64 rng;

  void note(const std::string& name) { assertions.push_back(name); }
  void check(bool ok, const std::string& name) {
    if (!ok) throw InternalCheckError("self-check '" + name + "' failed");
    note(name);
  }

  Mat matrix(const std::string& path) {
    std::string bytes = read_file_bytes(path);
    hash_input += bytes;
    std::istringstream in(bytes);
    return parse_matrix(in, path);
  }
  Vec vector(const std::string& path) {
    std::string bytes = read_file_bytes(path);
    hash_input += bytes;
    std::istringstream in(bytes);
    return parse_vector(in, path);
  }

  Rat random_rat(long lo, long hi) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 2);
    return make_rat(num(rng), den(rng));
  }
};

bool mats_equal(const Mat& a, const Mat& b) { return equal(a, b); }

Mat as_column(const Vec& v) { return v; }

// ---- command handlers -----------------------------------------------------

ordered_json cmd_mcm(Ctx& ctx, const Mat& a, std::string& human) {
  CriticalStructure cs = critical_structure(a);  // also proves a critical cycle exists
  ctx.note("critical_cycle_exists");
  human = "mcm: " + rat_to_string(cs.mcm) + "\n";
  return ordered_json{{"mcm", rat_to_string(cs.mcm)}};
}

ordered_json cmd_plus(Ctx& ctx, const Mat& a, std::string& human) {
  Rat mcm = max_cycle_mean(a);
  Mat p = kleene_plus(a);
  ctx.check(mats_equal(trop_add(trop_mul(p, p), p), p), "plus_transitive");
  ctx.check(mats_equal(trop_add(p, a), p), "plus_dominates_input");
  Mat power_sum = a;
  Mat power = a;
  for (Index k = 2; k <= a.rows(); ++k) {
    power = trop_mul(power, a);
    power_sum = trop_add(power_sum, power);
  }
  ctx.check(mats_equal(power_sum, p), "plus_equals_power_sum");
  human = "mcm: " + rat_to_string(mcm) + "\nplus:\n" + format_matrix(p);
  return ordered_json{{"mcm", rat_to_string(mcm)}, {"plus", mat_json(p)}};
}

ordered_json cmd_star(Ctx& ctx, const Mat& a, std::string& human) {
  Rat mcm = max_cycle_mean(a);
  Mat s = kleene_star(a);
  ctx.check(is_idempotent(s), "star_idempotent");
  bool zd = true;
  for (Index i = 0; i < s.rows(); ++i) zd = zd && s(i, i) == 0;
  ctx.check(zd, "star_zero_diagonal");
  human = "mcm: " + rat_to_string(mcm) + "\nstar:\n" + format_matrix(s);
  return ordered_json{{"mcm", rat_to_string(mcm)}, {"star", mat_json(s)}};
}

ordered_json profile_json(const IdempotentProfile& prof) {
  ordered_json r;
  r["idempotent"] = true;
  r["n"] = static_cast<long long>(prof.matrix.rows());
  r["rank"] = static_cast<long long>(prof.rank);
  r["zero_diagonal"] = prof.zero_diagonal;
  r["critical_nodes"] = indices_json(prof.critical.critical_nodes);
  r["classes"] = classes_json(prof.critical.classes);
  r["representatives"] = indices_json(prof.critical.representatives);
  return r;
}

void profile_checks(Ctx& ctx, const Mat& e, const IdempotentProfile& prof) {
  std::vector<Index> zero_diag;
  for (Index i = 0; i < e.rows(); ++i)
    if (e(i, i) == 0) zero_diag.push_back(i);
  ctx.check(zero_diag == prof.critical.critical_nodes, "critical_nodes_are_zero_diagonal");
  bool proportional = true;
  for (const auto& cls : prof.critical.classes)
    for (Index i : cls) proportional = proportional && is_multiple(e.col(cls.front()), e.col(i));
  ctx.check(proportional, "class_columns_proportional");
  ctx.check(static_cast<Index>(extremal_columns(e).size()) == prof.rank,
            "rank_equals_extremal_columns");
}

ordered_json cmd_idem(Ctx& ctx, const Mat& e, std::string& human) {
  IdempotentProfile prof = idempotent_profile(e);
  profile_checks(ctx, e, prof);
  human = "idempotent: yes\nrank: " + std::to_string(prof.rank) +
          "\nzero diagonal: " + (prof.zero_diagonal ? "yes" : "no") +
          "\ncritical nodes: " + indices_text(prof.critical.critical_nodes) + "\nclasses:";
  for (const auto& c : prof.critical.classes) human += " {" + indices_text(c) + "}";
  human += "\nrepresentatives: " + indices_text(prof.critical.representatives) + "\n";
  return profile_json(prof);
}

ordered_json cmd_analyze(Ctx& ctx, const Mat& a, std::string& human) {
  SpectralReport rep = eigenspace_basis(a);
  bool eig = true;
  for (const Vec& v : rep.eigenbasis)
    eig = eig && mats_equal(trop_mul(a, v), trop_scale(rep.critical.mcm, as_column(v)));
  ctx.check(eig, "eigenvectors_verified");
  if (!rep.eigenbasis.empty()) {
    bool ok = true;
    Mat basis(a.rows(), static_cast<Index>(rep.eigenbasis.size()));
    for (Index j = 0; j < basis.cols(); ++j) basis.col(j) = rep.eigenbasis[static_cast<size_t>(j)];
    for (int t = 0; t < 20; ++t) {
      Vec coeff(basis.cols());
      for (Index j = 0; j < basis.cols(); ++j) coeff(j) = ctx.random_rat(-5, 5);
      Vec v = Mat(trop_mul(basis, coeff)).col(0);
      ok = ok && mats_equal(trop_mul(a, v), trop_scale(rep.critical.mcm, as_column(v)));
    }
    ctx.check(ok, "random_span_eigen_check");
  }
  ordered_json r;
  r["mcm"] = rat_to_string(rep.critical.mcm);
  r["critical_nodes"] = indices_json(rep.critical.critical_nodes);
  r["classes"] = classes_json(rep.critical.classes);
  r["representatives"] = indices_json(rep.critical.representatives);
  r["aplus"] = mat_json(rep.a_lambda_plus);
  ordered_json basis = ordered_json::array();
  for (const Vec& v : rep.eigenbasis) basis.push_back(vec_json(v));
  r["eigenbasis"] = basis;
  human = "mcm: " + rat_to_string(rep.critical.mcm) +
          "\ncritical nodes: " + indices_text(rep.critical.critical_nodes) + "\nclasses:";
  for (const auto& c : rep.critical.classes) human += " {" + indices_text(c) + "}";
  human += "\nnormalized kleene plus:\n" + format_matrix(rep.a_lambda_plus) + "eigenbasis:\n";
  for (const Vec& v : rep.eigenbasis) human += format_vector(v) + "\n";
  return r;
}

ordered_json cmd_normalize(Ctx& ctx, const Mat& e, std::string& human) {
  NormalizeResult res = zero_diag_normalize(e);
  bool zd = true;
  for (Index i = 0; i < res.f.rows(); ++i) zd = zd && res.f(i, i) == 0;
  ctx.check(zd, "normalized_zero_diagonal");
  ctx.note("checked_idempotent");
  ctx.note("checked_span_equal");
  human = std::string("valid: ") + (res.valid ? "yes" : "no") + "\nnormalized:\n" +
          format_matrix(res.f);
  return ordered_json{{"normalized", mat_json(res.f)}, {"valid", res.valid}};
}

ordered_json cmd_reduce(Ctx& ctx, const Mat& e, std::string& human) {
  FullRankReduction red = full_rank_reduce(e);
  ctx.note("selector_identities");  // verified inside full_rank_reduce
  ctx.check(is_idempotent(red.f), "core_idempotent");
  IdempotentProfile fprof = idempotent_profile(red.f);
  ctx.check(fprof.rank == red.f.rows(), "core_full_rank");
  bool zd = true;
  for (Index i = 0; i < e.rows(); ++i) zd = zd && e(i, i) == 0;
  if (zd) ctx.check(mats_equal(lift_hclass_element(red, red.f), e), "lift_reduce_roundtrip");
  ordered_json r;
  r["n"] = static_cast<long long>(e.rows());
  r["k"] = static_cast<long long>(red.f.rows());
  r["representatives"] = indices_json(red.representatives);
  r["core"] = mat_json(red.f);
  r["M"] = ext_mat_json(red.m);
  r["N"] = ext_mat_json(red.n);
  r["P"] = ext_mat_json(red.p);
  human = "k: " + std::to_string(red.f.rows()) +
          "\nrepresentatives: " + indices_text(red.representatives) + "\ncore:\n" +
          format_matrix(red.f) + "M:\n" + format_matrix(red.m) + "N:\n" + format_matrix(red.n) +
          "P:\n" + format_matrix(red.p);
  return r;
}

ordered_json cmd_embed(Ctx& ctx, const Mat& f, long n, std::string& human) {
  Mat e = embed_full_rank(f, static_cast<Index>(n));
  ctx.check(is_idempotent(e), "embedded_idempotent");
  ctx.check(idempotent_profile(e).rank == f.rows(), "rank_preserved");
  human = "embedded:\n" + format_matrix(e);
  return ordered_json{{"k", static_cast<long long>(f.rows())},
                      {"n", static_cast<long long>(n)},
                      {"embedded", mat_json(e)}};
}

ordered_json cmd_representative(Ctx& ctx, const Mat& e, std::string& human) {
  IdempotentProfile prof = idempotent_profile(e);
  Mat rep = zero_diag_representative(e);
  ctx.check(is_idempotent(rep), "representative_idempotent");
  bool zd = true;
  for (Index i = 0; i < rep.rows(); ++i) zd = zd && rep(i, i) == 0;
  ctx.check(zd, "representative_zero_diagonal");
  ctx.check(idempotent_profile(rep).rank == prof.rank, "rank_preserved");
  human = "rank: " + std::to_string(prof.rank) + "\nrepresentative:\n" + format_matrix(rep);
  return ordered_json{{"rank", static_cast<long long>(prof.rank)},
                      {"representative", mat_json(rep)}};
}

void sigma_group_checks(Ctx& ctx, const Mat& core, const GroupDecomposition& gd) {
  ctx.note("units_commute_dense");
  ctx.note("identity_unit_present");
  ctx.note("sigma_inverses");
  ctx.note(gd.closure_sampled ? "sigma_closure_sampled" : "sigma_closure_full");
  ctx.note("sigma_eigenvalue_zero");
  if (gd.order >= 2) {
    std::uniform_int_distribution<size_t> pick(0, gd.sigma.size() - 1);
    bool ok = true;
    for (int t = 0; t < 20; ++t) {
      const MonomialUnit& g = gd.sigma[pick(ctx.rng)];
      const MonomialUnit& h = gd.sigma[pick(ctx.rng)];
      Mat lhs = gamma_image(core, monomial_mul(g, h));
      Mat rhs = trop_mul(gamma_image(core, g), gamma_image(core, h));
      ok = ok && mats_equal(lhs, rhs);
    }
    ctx.check(ok, "gamma_multiplicative_sampled");
  }
}

ordered_json cmd_group(Ctx& ctx, const Mat& e, std::string& human) {
  GroupStructureResult gs = group_structure(e, static_cast<Index>(ctx.max_n));
  sigma_group_checks(ctx, gs.reduction.f, gs.decomposition);
  ordered_json r;
  r["n"] = static_cast<long long>(e.rows());
  r["rank"] = static_cast<long long>(gs.profile.rank);
  r["order"] = static_cast<long long>(gs.decomposition.order);
  r["iso"] = gs.decomposition.iso_summary;
  r["representatives"] = indices_json(gs.reduction.representatives);
  r["core"] = mat_json(gs.reduction.f);
  ordered_json units = ordered_json::array();
  for (const MonomialUnit& g : gs.decomposition.sigma) units.push_back(unit_json(g));
  r["sigma_group"] = units;
  ordered_json perms = ordered_json::array();
  for (const Perm& p : gs.decomposition.permutation_images) perms.push_back(perm_json(p));
  r["permutation_images"] = perms;
  ordered_json trace = ordered_json::array();
  for (const std::string& s : gs.trace) trace.push_back(s);
  r["trace"] = trace;

  human = "rank: " + std::to_string(gs.profile.rank) +
          "\norder: " + std::to_string(gs.decomposition.order) +
          "\niso: " + gs.decomposition.iso_summary + "\ncore:\n" + format_matrix(gs.reduction.f);
  for (size_t i = 0; i < gs.decomposition.sigma.size(); ++i) {
    const MonomialUnit& g = gs.decomposition.sigma[i];
    human += "sigma[" + std::to_string(i + 1) + "]: perm = [" + perm_text(g.sigma) +
             "], lambda = [" + format_vector(g.lambda) + "]\n";
  }
  human += "trace:\n";
  for (const std::string& s : gs.trace) human += "- " + s + "\n";
  return r;
}

ordered_json cmd_eigenvector(Ctx& ctx, const Mat& e, std::string& human) {
  GroupDecomposition gd = sigma_group(e, static_cast<Index>(ctx.max_n));
  Vec v = common_eigenvector(e, static_cast<Index>(ctx.max_n));
  ctx.note("eigenvector_in_span");
  ctx.note("eigenvector_fixed_by_sigma");
  human = "order: " + std::to_string(gd.order) + "\neigenvector: " + format_vector(v) + "\n";
  return ordered_json{{"order", static_cast<long long>(gd.order)}, {"eigenvector", vec_json(v)}};
}

ordered_json cmd_factor(Ctx& ctx, const Mat& e, const Mat& a, std::string& human) {
  MonomialUnit g = factor_hclass_element(e, a);
  ctx.note("unit_commutes");
  ctx.note("gamma_matches_input");
  human = "sigma: " + perm_text(g.sigma) + "\nlambda: " + format_vector(g.lambda) + "\n";
  return ordered_json{{"sigma", perm_json(g.sigma)}, {"lambda", vec_json(g.lambda)}};
}

ordered_json cmd_affine(Ctx& ctx, const Mat& e, const Mat& a, std::string& human) {
  AffineForm f = affine_form(e, a);
  ctx.note("unit_commutes");
  ctx.note("gamma_matches_input");
  bool ok = true;
  for (Index j = 0; j < e.cols(); ++j) {
    Vec x = e.col(j);
    Vec image = Mat(trop_mul(a, x)).col(0);
    for (Index i = 0; i < e.rows(); ++i) ok = ok && image(i) == Rat(f.lambda(i) + x(f.sigma(i)));
  }
  ctx.check(ok, "affine_action_on_columns");
  human = "sigma: " + perm_text(f.sigma) + "\nlambda: " + format_vector(f.lambda) +
          "\naction: (A x)_i = lambda_i + x_{sigma(i)} on the column space\n";
  return ordered_json{{"sigma", perm_json(f.sigma)}, {"lambda", vec_json(f.lambda)}};
}

ordered_json cmd_classify(Ctx& ctx, const Mat& e, const Vec& y, std::string& human) {
  PointClass c = classify_point(e, y);
  ordered_json r;
  r["class"] = point_class_name(c);
  auto witness = in_span(e, y);
  if (witness) {
    ctx.check(mats_equal(trop_mul(e, *witness), as_column(y)), "membership_roundtrip");
    r["witness"] = vec_json(*witness);
  } else {
    r["witness"] = nullptr;
  }
  bool cols_ok = true;
  for (Index j = 0; j < e.cols(); ++j)
    cols_ok = cols_ok && classify_point(e, e.col(j)) != PointClass::Exterior;
  ctx.check(cols_ok, "columns_not_exterior");
  std::uniform_int_distribution<long> shift(-10, 10);
  bool scale_ok = true;
  for (int t = 0; t < 5; ++t) {
    Rat mu = make_rat(shift(ctx.rng), 2);
    scale_ok = scale_ok && classify_point(e, trop_scale(mu, as_column(y)).col(0)) == c;
  }
  ctx.check(scale_ok, "scaling_invariance");
  human = std::string("class: ") + point_class_name(c) + "\n";
  if (witness) human += "witness: " + format_vector(*witness) + "\n";
  return r;
}

ordered_json cmd_green(Ctx& ctx, const Mat& a, const Mat& b, const std::string& rel,
                       std::string& human) {
  GreenRel relation;
  if (rel == "leqR")
    relation = GreenRel::LeqR;
  else if (rel == "leqL")
    relation = GreenRel::LeqL;
  else if (rel == "R")
    relation = GreenRel::R;
  else if (rel == "L")
    relation = GreenRel::L;
  else if (rel == "H")
    relation = GreenRel::H;
  else
    throw ParseError("unknown Green relation '" + rel + "': expected leqR, leqL, R, L, or H");
  bool holds = green_relation(a, b, relation);
  (void)ctx;
  human = "relation: " + rel + "\nholds: " + (holds ? "yes" : "no") + "\n";
  return ordered_json{{"relation", rel}, {"holds", holds}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tropgroups: exact max-plus matrix algebra"};
  app.set_version_flag("--version", "tropgroups 0.1.0");

  Ctx ctx{};
  app.add_flag("--json", ctx.json, "emit a JSON report instead of text");
  app.add_option("--seed", ctx.seed, "seed for randomized self-checks")->capture_default_str();
  app.add_option("--max-n", ctx.max_n, "size cap for unit-group enumeration")
      ->envname("TROPGROUPS_MAX_N")
      ->capture_default_str();

  std::string file_a, file_b, rel;
  long embed_n = 0;

  CLI::App* mcm = app.add_subcommand("mcm", "maximum cycle mean of a square matrix");
  mcm->add_option("matrix", file_a, "matrix file")->required();
  CLI::App* plus = app.add_subcommand("plus", "Kleene plus A+ (requires mcm <= 0)");
  plus->add_option("matrix", file_a, "matrix file")->required();
  CLI::App* star = app.add_subcommand("star", "Kleene star A* (requires mcm <= 0)");
  star->add_option("matrix", file_a, "matrix file")->required();
  CLI::App* idem = app.add_subcommand("idem", "idempotency profile: rank and critical classes");
  idem->add_option("matrix", file_a, "idempotent matrix file")->required();
  CLI::App* analyze = app.add_subcommand("analyze", "critical structure and eigenspace basis");
  analyze->add_option("matrix", file_a, "matrix file")->required();
  CLI::App* normalize =
      app.add_subcommand("normalize", "zero-diagonal normalization of an idempotent");
  normalize->add_option("matrix", file_a, "idempotent matrix file")->required();
  CLI::App* reduce = app.add_subcommand("reduce", "full-rank reduction of an idempotent");
  reduce->add_option("matrix", file_a, "idempotent matrix file")->required();
  CLI::App* embed = app.add_subcommand("embed", "embed a full-rank idempotent into size n");
  embed->add_option("matrix", file_a, "full-rank idempotent matrix file")->required();
  embed->add_option("n", embed_n, "target size")->required();
  CLI::App* representative =
      app.add_subcommand("representative", "canonical zero-diagonal idempotent of the D-class");
  representative->add_option("matrix", file_a, "idempotent matrix file")->required();
  CLI::App* group =
      app.add_subcommand("group", "maximal subgroup structure H_E ~ R x Sigma of an idempotent");
  group->add_option("matrix", file_a, "idempotent matrix file")->required();
  CLI::App* eigenvector =
      app.add_subcommand("eigenvector", "common eigenvector of H_E for a full-rank idempotent");
  eigenvector->add_option("matrix", file_a, "full-rank idempotent matrix file")->required();
  CLI::App* factor = app.add_subcommand("factor", "factor an H-class element through a unit");
  factor->add_option("idempotent", file_a, "full-rank idempotent matrix file")->required();
  factor->add_option("matrix", file_b, "H-class element matrix file")->required();
  CLI::App* affine =
      app.add_subcommand("affine", "affine action of an H-class element on the column space");
  affine->add_option("idempotent", file_a, "full-rank idempotent matrix file")->required();
  affine->add_option("matrix", file_b, "H-class element matrix file")->required();
  CLI::App* classify =
      app.add_subcommand("classify", "position of a point relative to a column space");
  classify->add_option("idempotent", file_a, "full-rank idempotent matrix file")->required();
  classify->add_option("point", file_b, "vector file")->required();
  CLI::App* green = app.add_subcommand("green", "Green relation between two square matrices");
  green->add_option("a", file_a, "first matrix file")->required();
  green->add_option("b", file_b, "second matrix file")->required();
  green->add_option("relation", rel, "one of leqR, leqL, R, L, H")->required();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("tropgroups");
  for (const std::string& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  ctx.rng.seed(ctx.seed);
  if (ctx.max_n < 1) {
    err << "error: --max-n must be at least 1\n";
    return 2;
  }

  std::string command;
  ordered_json result;
  std::string human;
  try {
    if (mcm->parsed()) {
      command = "mcm";
      result = cmd_mcm(ctx, ctx.matrix(file_a), human);
    } else if (plus->parsed()) {
      command = "plus";
      result = cmd_plus(ctx, ctx.matrix(file_a), human);
    } else if (star->parsed()) {
      command = "star";
      result = cmd_star(ctx, ctx.matrix(file_a), human);
    } else if (idem->parsed()) {
      command = "idem";
      result = cmd_idem(ctx, ctx.matrix(file_a), human);
    } else if (analyze->parsed()) {
      command = "analyze";
      result = cmd_analyze(ctx, ctx.matrix(file_a), human);
    } else if (normalize->parsed()) {
      command = "normalize";
      result = cmd_normalize(ctx, ctx.matrix(file_a), human);
    } else if (reduce->parsed()) {
      command = "reduce";
      result = cmd_reduce(ctx, ctx.matrix(file_a), human);
    } else if (embed->parsed()) {
      command = "embed";
      result = cmd_embed(ctx, ctx.matrix(file_a), embed_n, human);
    } else if (representative->parsed()) {
      command = "representative";
      result = cmd_representative(ctx, ctx.matrix(file_a), human);
    } else if (group->parsed()) {
      command = "group";
      result = cmd_group(ctx, ctx.matrix(file_a), human);
    } else if (eigenvector->parsed()) {
      command = "eigenvector";
      result = cmd_eigenvector(ctx, ctx.matrix(file_a), human);
    } else if (factor->parsed()) {
      command = "factor";
      Mat a = ctx.matrix(file_a);  // read in argument order: the input hash
      Mat b = ctx.matrix(file_b);  // covers the files in the order given
      result = cmd_factor(ctx, a, b, human);
    } else if (affine->parsed()) {
      command = "affine";
      Mat a = ctx.matrix(file_a);
      Mat b = ctx.matrix(file_b);
      result = cmd_affine(ctx, a, b, human);
    } else if (classify->parsed()) {
      command = "classify";
      Mat a = ctx.matrix(file_a);
      Vec y = ctx.vector(file_b);
      result = cmd_classify(ctx, a, y, human);
    } else if (green->parsed()) {
      command = "green";
      Mat a = ctx.matrix(file_a);
      Mat b = ctx.matrix(file_b);
      result = cmd_green(ctx, a, b, rel, human);
    } else {
      err << "error: no subcommand selected\n";
      return 2;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalCheckError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }

  if (ctx.json) {
    ordered_json report;
    report["command"] = command;
    report["input_hash"] = fnv1a_hex(ctx.hash_input);
    report["result"] = result;
    ordered_json checks = ordered_json::array();
    for (const std::string& s : ctx.assertions) checks.push_back(s);
    report["assertions_checked"] = checks;
    out << report.dump(2) << "\n";
  } else {
    out << human;
  }
  return 0;
}

}  // namespace trop::cli
