#include "forge_cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "novikov/io.hpp"

namespace novikov::forge {

namespace {

using Clock = std::chrono::steady_clock;

struct Options {
  bool json = false;
  bool timings = false;
  int jobs = 0;
  std::string checks;
  std::vector<std::string> grid;
  std::string output;
};

struct Input {
  std::string path;
  std::string text;
  std::string digest;
};

Input read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, path + ": cannot open file");
    buf << f.rdbuf();
  }
  Input in{path, buf.str(), {}};
  in.digest = fnv1a_hex(in.text);
  return in;
}

// Rethrow parse errors with the file name in front.
template <typename F>
auto in_file(const std::string& path, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Parse && e.kind() != ErrorKind::SingularForm) throw;
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw Error(e.kind(), path + ": " + msg);
  }
}

AlgebraDocument load_document(const Input& in) {
  return in_file(in.path, [&] { return parse_document(in.text); });
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("NOVIKOV_FORGE_SEED");
  if (!s || !*s) return 0;
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != std::string(s).size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, std::string("NOVIKOV_FORGE_SEED: not an unsigned integer: ") + s);
  }
}

class Timer {
 public:
  void lap(const std::string& name) {
    auto now = Clock::now();
    ms_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  Json json() const {
    Json j = Json::object();
    for (const auto& [k, v] : ms_) j[k] = v;
    return j;
  }

 private:
  Clock::time_point last_ = Clock::now();
  std::map<std::string, double> ms_;
};

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : opt_(o), out_(out), err_(err) {}

  const Options& opt() const { return opt_; }
  Timer& timer() { return timer_; }
  std::ostream& err() { return err_; }

  // Documents always go out as JSON, to --output when given.
  void write_document(const Json& doc) {
    std::string text = emit(doc);
    if (opt_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(opt_.output, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, opt_.output + ": cannot write");
    f << text;
  }

  // Report as JSON with --json, else the text lines.
  void write_report(Json report, const std::string& text) {
    if (opt_.timings) report["timings_ms"] = timer_.json();
    if (opt_.json) {
      out_ << emit(report);
      return;
    }
    out_ << text;
    if (opt_.timings)
      for (const auto& [k, v] : report["timings_ms"].items()) out_ << "time " << k << ": " << v.get<double>() << " ms\n";
  }

 private:
  Options opt_;
  std::ostream& out_;
  std::ostream& err_;
  Timer timer_;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Rational> rationals(const std::string& s, const std::string& what) {
  std::vector<Rational> out;
  for (const auto& t : split_list(s, ',')) {
    try {
      out.push_back(Rational::parse(t));
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, what + ": not a rational: " + t);
    }
  }
  if (out.empty()) throw Error(ErrorKind::Parse, what + ": empty value list");
  return out;
}

std::string verdict(const IdentityReport& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + (r.pass ? r.name : r.summary()) + "\n";
}

// ---- check

using CheckFn = std::function<IdentityReport(const AlgebraDocument&)>;

std::vector<std::pair<std::string, CheckFn>> check_table() {
  auto alg = [](IdentityReport (*f)(const SuperAlgebra&)) { return [f](const AlgebraDocument& d) { return f(d.algebra); }; };
  auto pea = [](IdentityReport (*f)(const PseudoEuclideanAlgebra&)) {
    return [f](const AlgebraDocument& d) { return f(d.pseudo_euclidean()); };
  };
  return {
      {"pseudo_euclidean_novikov", pea(check_pseudo_euclidean_novikov)},
      {"vanishing",
       [](const AlgebraDocument& d) {
         try {
           return check_vanishing_lemma(d.pseudo_euclidean());
         } catch (const Error& e) {
           if (e.kind() != ErrorKind::PreconditionUnverified) throw;
           return IdentityReport::fail("vanishing_lemma", {}, Vec(), e.what());
         }
       }},
      {"star", [](const AlgebraDocument& d) { return check_star_properties(d.pseudo_euclidean()); }},
      {"flat", pea(check_flat)},
      {"form", [](const AlgebraDocument& d) { return check_form_report(d.pseudo_euclidean().form); }},
      {"antisymmetric", pea(check_left_mul_antisymmetric)},
      {"grading", alg(check_grading)},
      {"novikov", alg(check_novikov)},
      {"left_symmetric", alg(check_left_symmetric)},
      {"L", alg(check_L)},
      {"R", alg(check_R)},
      {"LR", alg(check_LR)},
      {"left_leibniz", alg(check_left_leibniz)},
      {"left_ops_commuting", alg(check_left_ops_commuting)},
      {"products_annihilate", alg(check_products_annihilate)},
      {"commutator_jacobi", [](const AlgebraDocument& d) { return check_super_jacobi(commutator(d.algebra)); }},
      {"associative", alg(check_associative)},
      {"supercommutative", alg(check_supercommutative)},
      {"full", pea(full_suite)},
  };
}

const char* kDefaultChecks = "pseudo_euclidean_novikov,vanishing,star,flat";

int cmd_check(Session& s, const std::string& path) {
  Input in = read_input(path);
  auto doc = load_document(in);
  s.timer().lap("parse");
  auto table = check_table();
  std::vector<std::string> names = split_list(s.opt().checks.empty() ? kDefaultChecks : s.opt().checks, ',');
  Json report{{"command", "check"}, {"input_digest", in.digest}, {"checks", Json::array()}};
  std::string text;
  bool pass = true;
  for (const auto& name : names) {
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
    if (it == table.end()) {
      std::string known;
      for (const auto& e : table) known += (known.empty() ? "" : ", ") + e.first;
      throw Error(ErrorKind::Parse, "--checks: unknown check \"" + name + "\" (known: " + known + ")");
    }
    auto r = it->second(doc);
    s.timer().lap(name);
    pass = pass && r.pass;
    report["checks"].push_back(to_json(r));
    text += verdict(r);
  }
  report["pass"] = pass;
  text += std::string("result: ") + (pass ? "pass" : "fail") + "\n";
  s.write_report(report, text);
  return pass ? kPass : kMathFailure;
}

// ---- product-producing commands

int cmd_levi_civita(Session& s, const std::string& path) {
  auto doc = load_document(read_input(path));
  if (!doc.form) throw Error(ErrorKind::Parse, path + ": levi-civita needs a gram");
  auto lc = levi_civita(doc.algebra, *doc.form);
  s.write_document(to_json(make_document(PseudoEuclideanAlgebra(lc, *doc.form))));
  return kPass;
}

int cmd_star(Session& s, const std::string& path) {
  auto doc = load_document(read_input(path));
  s.write_document(to_json(make_document(star_product(doc.pseudo_euclidean()))));
  return kPass;
}

int cmd_milnor(Session& s, const std::string& path) {
  Input in = read_input(path);
  auto p = load_document(in).pseudo_euclidean();
  auto res = milnor_decomposition(p);
  Json report{{"command", "milnor"}, {"input_digest", in.digest}};
  std::ostringstream text;
  bool ok = std::holds_alternative<MilnorDecomposition>(res);
  if (ok) {
    const auto& m = std::get<MilnorDecomposition>(res);
    report["milnor"] = true;
    report["ideal"] = to_json(m.ideal);
    report["complement"] = to_json(m.complement);
    text << "Milnor: ideal A.A of dim " << m.ideal.size() << ", complement of dim " << m.complement.size() << "\n";
  } else {
    const auto& w = std::get<NotMilnor>(res).witness;
    report["milnor"] = false;
    report["witness"] = to_json(w);
    text << "NotMilnor: A.A meets its orthogonal at " << Json(to_json(w)).dump() << "\n";
  }
  s.write_report(report, text.str());
  return ok ? kPass : kMathFailure;
}

int cmd_reduce(Session& s, const std::string& path, const std::string& vector, int chain) {
  Input in = read_input(path);
  auto p = load_document(in).pseudo_euclidean();
  if (chain > 0) {
    auto steps = reduction_chain(p, chain);
    Json report{{"command", "reduce"}, {"input_digest", in.digest}, {"steps", Json::array()}};
    std::ostringstream text;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& q = steps[i];
      report["steps"].push_back(Json{{"sdim", sdim_string(q.space())}, {"trivial", q.algebra.is_trivial()}});
      text << "step " << i << ": " << sdim_string(q.space()) << (q.algebra.is_trivial() ? " zero product" : "") << "\n";
    }
    bool reached = steps.back().algebra.is_trivial();
    report["reached_zero"] = reached;
    s.write_report(report, text.str());
    return reached ? kPass : kMathFailure;
  }
  Vec e;
  if (vector.empty()) {
    auto c = choose_reducing_vector(p);
    if (!c) throw Error(ErrorKind::NotAdmissible, "no reducing vector found");
    e = *c;
  } else {
    auto xs = rationals(vector, "--vector");
    if (static_cast<Index>(xs.size()) != p.dim())
      throw Error(ErrorKind::Parse, "--vector: expected " + std::to_string(p.dim()) + " coordinates");
    e = Vec(p.dim());
    for (Index i = 0; i < p.dim(); ++i) e(i) = xs[static_cast<std::size_t>(i)];
  }
  s.write_document(to_json(make_document(isotropic_reduction(p, e))));
  return kPass;
}

int cmd_extend(Session& s, const std::vector<std::string>& files, int sample, const std::string& kind) {
  if (sample > 0) {
    if (files.size() != 1) throw Error(ErrorKind::Parse, "extend --sample takes only the base document");
    auto base = load_document(read_input(files[0])).pseudo_euclidean();
    auto k = extension_kind_from_string(kind);
    auto seed = seed_from_env();
    Json out{{"seed", seed}, {"data", Json::array()}};
    for (const auto& d : sample_admissible_data(base, k, sample, seed)) out["data"].push_back(to_json(d));
    s.write_document(out);
    return kPass;
  }
  PseudoEuclideanAlgebra base;
  Json data;
  if (files.size() == 1) {
    // a split result: {"base": ..., "data": ...}
    Input in = read_input(files[0]);
    Json j = in_file(in.path, [&] { return parse_json(in.text); });
    if (!j.is_object() || !j.contains("base") || !j.contains("data"))
      throw Error(ErrorKind::Parse, in.path + ": expected {\"base\": ..., \"data\": ...} or two files");
    base = in_file(in.path, [&] { return document_from_json(j["base"]); }).pseudo_euclidean();
    data = j["data"];
  } else if (files.size() == 2) {
    base = load_document(read_input(files[0])).pseudo_euclidean();
    Input in = read_input(files[1]);
    data = in_file(in.path, [&] { return parse_json(in.text); });
  } else {
    throw Error(ErrorKind::Parse, "extend takes BASE DATA or one split result");
  }
  auto d = extension_data_from_json(data, base);
  s.write_document(to_json(make_document(double_extend(d))));
  return kPass;
}

int cmd_split(Session& s, const std::string& path, const std::string& base_out, const std::string& data_out) {
  auto p = load_document(read_input(path)).pseudo_euclidean();
  auto r = split_double_extension(p);
  Json base = to_json(make_document(r.data.base));
  Json data = to_json(r.data);
  auto save = [](const std::string& file, const Json& j) {
    std::ofstream f(file, std::ios::binary);
    if (!f) throw Error(ErrorKind::Parse, file + ": cannot write");
    f << emit(j);
  };
  if (!base_out.empty()) save(base_out, base);
  if (!data_out.empty()) save(data_out, data);
  Json out{{"base", base}, {"data", data}, {"e", to_json(r.e)}, {"d", to_json(r.d)}, {"basis", to_json(Mat(r.basis.transpose()))},
           {"input_in_basis", to_json(make_document(r.input_in_basis))}};
  s.write_document(out);
  return kPass;
}

int cmd_tstar(Session& s, const std::string& path, const std::string& star_path, bool pi) {
  auto doc = load_document(read_input(path));
  SuperAlgebra star = star_path.empty() ? star_product(doc.pseudo_euclidean()) : load_document(read_input(star_path)).algebra;
  auto ext = pi ? pi_tstar_extension(doc.algebra, star) : tstar_extension(doc.algebra, star);
  s.write_document(to_json(make_document(ext)));
  return kPass;
}

int cmd_tensor(Session& s, const std::string& b_path, const std::string& h_path) {
  auto b = load_document(read_input(b_path)).pseudo_euclidean();
  auto h = load_document(read_input(h_path));
  if (!h.form) throw Error(ErrorKind::Parse, h_path + ": H needs a gram (the form Omega)");
  s.write_document(to_json(make_document(tensor_construct(b, h.algebra, *h.form))));
  return kPass;
}

// ---- catalog

// "name=v1,v2" entries; missing parameters fall back to the default grid.
std::map<std::string, std::vector<Rational>> param_values(const FamilySpec& f, const std::vector<std::string>& items) {
  std::map<std::string, std::vector<Rational>> out;
  for (const auto& it : items) {
    auto eq = it.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected name=value[,value...], got \"" + it + "\"");
    std::string name = it.substr(0, eq);
    if (std::none_of(f.params.begin(), f.params.end(), [&](const ParamSpec& p) { return p.name == name; }))
      throw Error(ErrorKind::BadParams, f.id + " has no parameter \"" + name + "\"");
    out[name] = rationals(it.substr(eq + 1), name);
  }
  for (const auto& p : f.params)
    if (!out.count(p.name)) out[p.name] = p.grid;
  return out;
}

const FamilySpec& single_family(const std::string& id) {
  auto fs = lookup_family(id);
  if (fs.size() != 1) {
    std::string ids;
    for (const auto* f : fs) ids += (ids.empty() ? "" : ", ") + f->id;
    throw Error(ErrorKind::UnknownFamily, id + " names several variants: " + ids);
  }
  return *fs.front();
}

Params first_point(const FamilySpec& f, const std::vector<std::string>& items) {
  Params p;
  for (const auto& [k, v] : param_values(f, items)) {
    if (v.size() != 1 && std::any_of(items.begin(), items.end(), [&](const std::string& s) { return s.rfind(k + "=", 0) == 0; }))
      throw Error(ErrorKind::Parse, "--param " + k + ": give a single value");
    p[k] = v.front();
  }
  return p;
}

Json params_json(const Params& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p) j[k] = rational_to_json(v);
  return j;
}

int cmd_catalog_list(Session& s) {
  Json report{{"command", "catalog list"}, {"families", Json::array()}};
  std::ostringstream text;
  for (const auto& f : catalog_families()) {
    Json params = Json::array();
    std::string ps;
    for (const auto& p : f.params) {
      params.push_back(p.name);
      ps += (ps.empty() ? "" : ",") + p.name;
    }
    std::string sd = std::to_string(f.even) + "|" + std::to_string(f.odd);
    report["families"].push_back(Json{{"id", f.id},
                                      {"group", f.group},
                                      {"sdim", sd},
                                      {"form_parity", f.form_parity ? "odd" : "even"},
                                      {"params", params},
                                      {"section", to_string(f.section)},
                                      {"grid_points", default_grid(f).size()}});
    text << f.id << "  (" << sd << ")  " << (f.form_parity ? "odd" : "even") << " form  " << to_string(f.section) << "  ["
         << ps << "]  " << default_grid(f).size() << " grid points\n";
  }
  s.write_report(report, text.str());
  return kPass;
}

int cmd_catalog_show(Session& s, const std::string& id, const std::vector<std::string>& params) {
  const auto& f = single_family(id);
  Params p = first_point(f, params);
  Json meta{{"family", f.id}, {"params", params_json(p)}};
  s.write_document(to_json(make_document(instantiate(f, p), meta)));
  return kPass;
}

int report_verify(Session& s, const std::string& command, const VerifyReport& rep) {
  Json report{{"command", command}, {"results", Json::array()}};
  std::ostringstream text;
  int boundary = 0;
  for (const auto& r : rep.results) {
    Json j{{"family", r.family}, {"params", params_json(r.params)}, {"boundary", r.boundary}, {"pass", r.pass()}};
    if (!r.suite.pass) j["suite"] = to_json(r.suite);
    if (!r.flags_ok) j["flags"] = r.flag_detail;
    report["results"].push_back(j);
    boundary += r.boundary;
    std::string tag = r.boundary ? (r.pass() ? "note " : "NOTE ") : (r.pass() ? "PASS " : "FAIL ");
    text << tag << r.family << " {" << params_string(r.params) << "}";
    if (r.boundary) text << " boundary (not asserted)";
    if (!r.suite.pass) text << ": " << r.suite.summary();
    if (!r.flags_ok) text << ": " << r.flag_detail;
    text << "\n";
  }
  report["asserted"] = rep.asserted();
  report["failures"] = rep.failures();
  report["boundary"] = boundary;
  report["pass"] = rep.pass();
  s.timer().lap("verify");
  text << rep.asserted() << " instances asserted, " << rep.failures() << " failures, " << boundary
       << " boundary points reported\nresult: " << (rep.pass() ? "pass" : "fail") << "\n";
  s.write_report(report, text.str());
  return rep.pass() ? kPass : kMathFailure;
}

int cmd_catalog_verify(Session& s, const std::string& id) {
  auto fs = lookup_family(id);
  if (s.opt().grid.empty()) return report_verify(s, "catalog verify", verify_family(id, {}, s.opt().jobs));
  std::vector<Instance> in;
  for (const auto* f : fs)
    for (auto& p : grid_product(*f, param_values(*f, s.opt().grid))) in.push_back({f, std::move(p), false});
  return report_verify(s, "catalog verify", verify_instances(in, s.opt().jobs));
}

int cmd_catalog_verify_all(Session& s) {
  return report_verify(s, "catalog verify-all", verify_instances(catalog_instances(true), s.opt().jobs));
}

SuperSpace parse_sdim(const std::string& t) {
  auto bar = t.find('|');
  try {
    if (bar == std::string::npos) throw std::invalid_argument(t);
    std::size_t u1 = 0, u2 = 0;
    int e = std::stoi(t.substr(0, bar), &u1), o = std::stoi(t.substr(bar + 1), &u2);
    if (u1 != bar || u2 != t.size() - bar - 1 || e < 0 || o < 0) throw std::invalid_argument(t);
    return SuperSpace::of_sdim(e, o);
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "expected a super dimension like 2|0, got \"" + t + "\"");
  }
}

int cmd_catalog_scan(Session& s, const std::string& sdim, bool odd, long long budget) {
  ScanOptions o;
  o.space = parse_sdim(sdim);
  o.form_parity = odd ? 1 : 0;
  o.budget = budget;
  if (s.opt().grid.size() > 1) throw Error(ErrorKind::Parse, "--grid: scan takes one comma list of coefficients");
  if (!s.opt().grid.empty()) o.grid = rationals(s.opt().grid.front(), "--grid");
  auto rep = nonexistence_scan(o);
  s.timer().lap("scan");
  Json grid = Json::array();
  for (const auto& g : o.grid) grid.push_back(rational_to_json(g));
  Json report{{"command", "catalog scan"},
              {"sdim", sdim_string(o.space)},
              {"form_parity", odd ? "odd" : "even"},
              {"grid", grid},
              {"tensors", rep.tensors},
              {"forms", rep.forms},
              {"novikov_tensors", rep.novikov_tensors},
              {"pseudo_euclidean_pairs", rep.pseudo_euclidean_pairs},
              {"degenerate_hits", Json::array()}};
  for (const auto& h : rep.degenerate_hits) report["degenerate_hits"].push_back(to_json(make_document(h.algebra)));
  std::ostringstream text;
  text << "scan " << sdim_string(o.space) << " " << (odd ? "odd" : "even") << " form: " << rep.tensors << " tensors, " << rep.forms
       << " forms, " << rep.novikov_tensors << " Novikov tensors, " << rep.pseudo_euclidean_pairs
       << " pseudo-Euclidean pairs, " << rep.degenerate_hits.size() << " with degenerate product\n";
  s.write_report(report, text.str());
  return kPass;
}

int cmd_fingerprint(Session& s, const std::string& path, const std::string& family, const std::vector<std::string>& params) {
  PseudoEuclideanAlgebra p;
  Json report{{"command", "fingerprint"}};
  if (!family.empty()) {
    const auto& f = single_family(family);
    Params pt = first_point(f, params);
    p = instantiate(f, pt);
    report["family"] = f.id;
    report["params"] = params_json(pt);
  } else {
    if (path.empty()) throw Error(ErrorKind::Parse, "fingerprint needs a document or --family");
    Input in = read_input(path);
    p = load_document(in).pseudo_euclidean();
    report["input_digest"] = in.digest;
  }
  auto fp = fingerprint(p);
  report["fingerprint"] = to_json(fp);
  s.write_report(report, to_string(fp) + "\n");
  return kPass;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::BadParams:
    case ErrorKind::UnknownFamily:
    case ErrorKind::GridTooLarge:
      return kUsage;
    default:
      return kMathFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of pseudo-Euclidean Novikov superalgebras"};
  app.name("novikov-forge");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  opt.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  app.add_flag("--json", opt.json, "Machine-readable report on stdout");
  app.add_flag("--timings", opt.timings, "Add wall-clock timings to the report");
  app.add_option("--jobs,-j", opt.jobs, "Worker threads for grid verification")->check(CLI::PositiveNumber);
  app.add_option("--checks", opt.checks, "Comma list of checks for `check`");
  app.add_option("--grid", opt.grid, "name=v1,v2 per parameter (catalog verify) or coefficient list (catalog scan)");
  app.add_option("--output,-o", opt.output, "Write the produced document here instead of stdout");

  std::string file, file2, star_file, vector, kind = "even_ext_even_form", base_out, data_out, family, sdim;
  std::vector<std::string> files, params;
  int chain = 0, sample = 0;
  long long budget = ScanOptions{}.budget;
  bool odd = false, even = false;
  std::function<int(Session&)> action;

  auto* check = app.add_subcommand("check", "Run identity checks on a document");
  check->add_option("file", file, "Algebra document (- for stdin)")->required();
  check->callback([&] { action = [&](Session& s) { return cmd_check(s, file); }; });

  auto* lc = app.add_subcommand("levi-civita", "Levi-Civita product of a Lie bracket and form");
  lc->add_option("file", file, "Document whose product is the bracket")->required();
  lc->callback([&] { action = [&](Session& s) { return cmd_levi_civita(s, file); }; });

  auto* star = app.add_subcommand("star", "Metric dual product");
  star->add_option("file", file)->required();
  star->callback([&] { action = [&](Session& s) { return cmd_star(s, file); }; });

  auto* milnor = app.add_subcommand("milnor", "Milnor decomposition or a witness that there is none");
  milnor->add_option("file", file)->required();
  milnor->callback([&] { action = [&](Session& s) { return cmd_milnor(s, file); }; });

  auto* reduce = app.add_subcommand("reduce", "Isotropic reduction");
  reduce->add_option("file", file)->required();
  reduce->add_option("--vector", vector, "Coordinates of e, comma separated (default: chosen automatically)");
  reduce->add_option("--chain", chain, "Iterate up to N steps and report the chain")->check(CLI::NonNegativeNumber);
  reduce->callback([&] { action = [&](Session& s) { return cmd_reduce(s, file, vector, chain); }; });

  auto* extend = app.add_subcommand("extend", "Double extension of a base by admissible data");
  extend->add_option("files", files, "BASE DATA, or one split result")->required()->expected(1, 2);
  extend->add_option("--sample", sample, "Emit N sampled admissible data sets for BASE instead")->check(CLI::NonNegativeNumber);
  extend->add_option("--kind", kind, "Extension kind for --sample");
  extend->callback([&] { action = [&](Session& s) { return cmd_extend(s, files, sample, kind); }; });

  auto* split = app.add_subcommand("split", "Write a degenerate-product algebra as a double extension");
  split->add_option("file", file)->required();
  split->add_option("--base-out", base_out);
  split->add_option("--data-out", data_out);
  split->callback([&] { action = [&](Session& s) { return cmd_split(s, file, base_out, data_out); }; });

  for (bool pi : {false, true}) {
    auto* t = app.add_subcommand(pi ? "pi-tstar" : "tstar", pi ? "Odd-form extension on A + PiA*" : "Even-form extension on A + A*");
    t->add_option("file", file)->required();
    t->add_option("--star", star_file, "Document holding the star product (default: from the document's form)");
    t->callback([&, pi] { action = [&, pi](Session& s) { return cmd_tstar(s, file, star_file, pi); }; });
  }

  auto* tensor = app.add_subcommand("tensor", "B tensor H with the product form");
  tensor->add_option("base", file)->required();
  tensor->add_option("algebra_h", file2, "Supercommutative associative H with its form Omega")->required();
  tensor->callback([&] { action = [&](Session& s) { return cmd_tensor(s, file, file2); }; });

  auto* fp = app.add_subcommand("fingerprint", "Invariants of a document or catalog instance");
  fp->add_option("file", file);
  fp->add_option("--family", family);
  fp->add_option("--param", params, "name=value");
  fp->callback([&] { action = [&](Session& s) { return cmd_fingerprint(s, file, family, params); }; });

  auto* cat = app.add_subcommand("catalog", "Classification catalog");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "Family table")->callback([&] { action = [&](Session& s) { return cmd_catalog_list(s); }; });
  auto* show = cat->add_subcommand("show", "Document for one instance");
  show->add_option("family", family)->required();
  show->add_option("--param", params, "name=value (missing ones use the first grid value)");
  show->callback([&] { action = [&](Session& s) { return cmd_catalog_show(s, family, params); }; });
  auto* verify = cat->add_subcommand("verify", "Full suite over a family grid");
  verify->add_option("family", family)->required();
  verify->callback([&] { action = [&](Session& s) { return cmd_catalog_verify(s, family); }; });
  cat->add_subcommand("verify-all", "Full suite over every default grid")->callback([&] {
    action = [&](Session& s) { return cmd_catalog_verify_all(s); };
  });
  auto* scan = cat->add_subcommand("scan", "Exhaustive small-coefficient search for degenerate products");
  scan->add_option("sdim", sdim, "Super dimension, e.g. 2|0")->required();
  auto* fe = scan->add_flag("--even", even, "Even forms (default)");
  scan->add_flag("--odd", odd, "Odd forms")->excludes(fe);
  scan->add_option("--budget", budget, "Cap on tensors x forms")->check(CLI::PositiveNumber);
  scan->callback([&] { action = [&](Session& s) { return cmd_catalog_scan(s, sdim, odd, budget); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Session session(opt, out, err);
  try {
    return action(session);
  } catch (const Error& e) {
    if (opt.json) out << emit(Json{{"error", to_string(e.kind())}, {"message", e.what()}, {"pass", false}});
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace novikov::forge
