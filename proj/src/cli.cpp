#include "ospnil/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "ospnil/borel.hpp"
#include "ospnil/error.hpp"
#include "ospnil/io.hpp"
#include "ospnil/kappa.hpp"
#include "ospnil/matrices.hpp"
#include "ospnil/order.hpp"

namespace ospnil::cli {

using io::Json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Label parse_label_flag(const std::string& s) {
  if (s.empty()) return Label::None;
  if (s == "I") return Label::I;
  if (s == "II") return Label::II;
  throw UsageError("--label must be I or II");
}

std::string space_name(int m, int N) { return "osp(" + std::to_string(m) + "," + std::to_string(N) + ")"; }

Json kappa_json(const EvenOrbitKey& k) {
  Json j{{"ortho", io::to_json(k.ortho.partition)}, {"symp", io::to_json(k.symp)}};
  j["ortho_label"] = k.ortho.label == Label::None ? "none" : label_name(k.ortho.label);
  return j;
}

Json cmd_enumerate(int m, int N) {
  const auto all = enumerate(m, N);
  Json list = Json::array();
  std::size_t labeled = 0;
  for (const auto& d : all) {
    Json j = io::to_json(d);
    const bool stable = is_stable(d);
    labeled += stable ? 1 : 2;
    auto [d0, d1] = d0d1(d);
    j["stable"] = stable;
    j["orbit_dim"] = orbit_dim(d, m, N);
    j["d0"] = io::to_json(d0);
    j["d1"] = io::to_json(d1);
    list.push_back(std::move(j));
  }
  return Json{{"m", m}, {"N", N}, {"count", all.size()}, {"labeled_count", labeled}, {"diagrams", list}};
}

Json cmd_hasse(int m, int N, const std::string& graph) {
  if (graph == "gamma") {
    Json j = io::hasse_to_json(hasse_gamma(m, N), m, N);
    j["graph"] = "gamma";
    return j;
  }
  SurgeryLog log;
  Json j = io::hasse_to_json(hasse_delta(m, N, &log), m, N);
  j["graph"] = "delta";
  Json removed = Json::array();
  for (const auto& [a, b] : log.removed) removed.push_back(Json::array({a, b}));
  j["removed"] = removed;
  return j;
}

Json cmd_order(int m, int N, const std::string& a, const std::string& b) {
  if (a.empty() || b.empty()) throw UsageError("order needs --diagram and --other");
  const auto d = GradedDiagram::parse(a), e = GradedDiagram::parse(b);
  for (const auto* x : {&d, &e})
    if (!is_valid(*x, m, N)) throw DomainError("diagram " + x->compact() + " is not valid for " + space_name(m, N));
  const int K = std::max(d.max_length(), e.max_length());
  Json prof = Json::array();
  const auto pd = column_profile(d, K), pe = column_profile(e, K);
  for (int k = 0; k <= K; ++k)
    prof.push_back(Json{{"k", k}, {"diagram", {pd[k].first, pd[k].second}}, {"other", {pe[k].first, pe[k].second}}});
  return Json{{"diagram", io::to_json(d)}, {"other", io::to_json(e)}, {"leq", leq(d, e)}, {"geq", leq(e, d)},
              {"profiles", prof}};
}

LabeledPartition lambda_arg(const RunConfig& c) {
  return {io::parse_partition(c.lambda), parse_label_flag(c.label)};
}

Json labeled_list(const std::vector<LabeledDiagram>& v) {
  Json a = Json::array();
  for (const auto& d : v) a.push_back(io::to_json(d));
  return a;
}

Json cmd_fiber(const RunConfig& c, int m, int N) {
  if (c.lambda.empty() || c.mu.empty()) throw UsageError("fiber needs --lambda and --mu (\"-\" for the empty partition)");
  const auto lam = lambda_arg(c);
  const auto mu = io::parse_partition(c.mu);
  const auto fib = fiber(lam, mu, m, N);
  return Json{{"key", EvenOrbitKey{lam, mu}.str()},
              {"predicted_empty", fiber_predicted_empty(lam.partition, mu)},
              {"size", fib.size()},
              {"diagrams", labeled_list(fib)}};
}

Json cmd_maxdiag(const RunConfig& c, int m, int N) {
  if (c.lambda.empty() && c.mu.empty()) {
    const auto top = global_max(m, N);
    Json j = io::to_json(top);
    return Json{{"m", m},
                {"N", N},
                {"global_max", j},
                {"orbit_dim", orbit_dim(top, m, N)},
                {"hook", is_hook(top.diagram)},
                {"case_4a", is_case_4a(m, N)}};
  }
  const auto lam = lambda_arg(c);
  const auto mu = io::parse_partition(c.mu);
  const auto r = max_diagram(lam, mu, m, N);
  Json j{{"key", EvenOrbitKey{lam, mu}.str()},
         {"unique", r.unique},
         {"common_blocks", r.common_blocks},
         {"maximal", labeled_list(r.maximal)}};
  if (r.unique) {
    j["preimage_dim"] = preimage_dim(lam, mu, m, N);
    j["fiber_dim"] = fiber_dim(lam, mu, m, N);
  }
  return j;
}

Json cmd_dims(int m, int N, bool verify) {
  const SuperSpace space(m, N);
  const auto all = enumerate(m, N);
  std::vector<kernels::OracleRecord> oracle;
  if (verify) oracle = kernels::oracle_batch(all, space, ExecPolicy::Parallel);
  Json list = Json::array();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& d = all[i];
    const auto key = kappa_of_diagram({d, Label::None});
    Json j{{"key", d.compact()},
           {"orbit_dim", orbit_dim(d, m, N)},
           {"kappa_dim", even_orbit_dim(key)},
           {"delta", delta_D(d)},
           {"kappa", kappa_json(key)}};
    if (verify) j["oracle_dim"] = oracle[i].oracle_dim;
    list.push_back(std::move(j));
  }
  return Json{{"m", m}, {"N", N}, {"diagrams", list}};
}

Json cmd_classify(const RunConfig& c, std::istream* in, int m, int N) {
  Json doc;
  if (!c.input.empty()) {
    std::ifstream f(c.input);
    if (!f) throw DomainError("cannot open " + c.input);
    doc = Json::parse(f);
  } else {
    if (!in) throw UsageError("classify needs --input or standard input");
    doc = Json::parse(*in);
  }
  const Matrix u = io::matrix_from_json(doc.is_object() ? doc.at("u") : doc);
  const SuperSpace space(m, N);
  if (u.rows() != static_cast<std::size_t>(N) || u.cols() != static_cast<std::size_t>(m))
    throw DomainError("u must be " + std::to_string(N) + " x " + std::to_string(m));
  const OddElement x(space, u);
  if (!is_nilpotent(x.supermatrix())) throw DomainError("element is not nilpotent");
  const auto d = diagram_of(x);
  const EvenElement k = kappa_matrix(x);
  const bool stable = is_stable(d);
  const LabeledDiagram ld{d, stable ? Label::None : Label::I};
  return Json{{"diagram", io::to_json(d)},
              {"orbit_dim", orbit_dim(d, m, N)},
              {"kappa_jordan_types", {{"ortho", io::to_json(jordan_type(k.a))}, {"symp", io::to_json(jordan_type(k.b))}}},
              {"label", stable ? "none" : "I-or-II"},
              {"closure_size", closure_set(ld, m, N).size()}};
}

Json cmd_rep(const RunConfig& c, int m, int N) {
  if (c.diagram.empty()) throw UsageError("rep needs --diagram");
  const auto d = GradedDiagram::parse(c.diagram);
  const SuperSpace space(m, N);
  const auto x = representative(d, space);
  return Json{{"diagram", io::to_json(d)},
              {"u", io::to_json(x.u)},
              {"u_star", io::to_json(u_star(space, x.u))},
              {"member", is_osp_member(space, x.supermatrix(), Parity::Odd)},
              {"recovered", diagram_of(x).compact()}};
}

Json cmd_desing(int m, int N) {
  if (N < 2 || (m != N + 1 && m != N))
    throw DomainError("desingularization is only available for osp(2n+1,2n) and osp(2n,2n) with n >= 1; " +
                      space_name(m, N) + " has even-part ranks that differ");
  const int n = N / 2;
  const auto family = m == N + 1 ? DesingFamily::Odd : DesingFamily::Even;
  const SuperSpace space(m, N);
  const auto top = global_max(m, N);
  const auto x = representative(top.diagram, space);
  const auto mf = flag_from_max_element(x);
  const auto chi = chi_bundle_dims(n, family);
  Json graded = Json::array();
  for (const auto& w : mf.flag.chain) {
    auto [a, b] = graded_dims(w, space);
    graded.push_back(Json::array({a, b}));
  }
  Json j{{"m", m},
         {"N", N},
         {"family", family == DesingFamily::Odd ? "odd" : "even"},
         {"max_diagram", io::to_json(top)},
         {"orbit_dim_max", orbit_dim(top, m, N)},
         {"chi", {{"flag_variety_dim", chi.flag_variety_dim}, {"kernel_rank", chi.kernel_rank}, {"total_dim", chi.total_dim}}},
         {"flag_dims", mf.flag.dims()},
         {"graded_dims", graded},
         {"commuting_square", commuting_square_check(x)}};
  if (mf.alpha) j["alpha"] = io::to_json(*mf.alpha);
  return j;
}

Json cmd_borel(const RunConfig& c, int m, int N) {
  const SuperSpace space(m, N);
  const auto order = c.kac ? kac_order(m, N) : mixed_order(m, N);
  const auto flag = flag_of_order(order, space);
  const auto b1 = odd_part_of_borel(flag, space);
  Json tags = Json::array();
  for (const auto& t : order.sequence) tags.push_back(t.str());
  Json j{{"m", m},
         {"N", N},
         {"order_case", order_case_name(order.order_case)},
         {"order", tags},
         {"flag_dims", flag.dims()},
         {"b1_dim", b1.size()}};
  if (!c.cover) return j;

  Json table = Json::array();
  if (c.kac) {
    const auto realized = realized_diagrams(order, space);
    std::map<GradedDiagram, const kernels::Realization*> by;
    for (const auto& r : realized) by[r.diagram] = &r;
    for (const auto& d : enumerate(m, N)) {
      Json row{{"diagram", d.compact()}, {"found", by.count(d) > 0}};
      if (by.count(d)) row["u"] = io::to_json(by[d]->u);
      table.push_back(std::move(row));
    }
  } else {
    for (const auto& d : enumerate(m, N)) {
      const auto r = meets_orbit_search({d, Label::None}, space, {c.budget, c.seed});
      Json row{{"diagram", d.compact()}, {"found", r.witness.has_value()}, {"examined", r.examined}};
      if (r.witness) row["u"] = io::to_json(r.witness->u);
      table.push_back(std::move(row));
    }
  }
  j["witnesses"] = table;
  return j;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  auto scalar_array = [](const Json& a) {
    for (const auto& v : a)
      if (v.is_structured()) return false;
    return true;
  };
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else if (v.is_array()) {
        out << pad << k << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else if (v.is_array()) {
        out << pad << "- [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "]\n";
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("OSPNIL_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    return used == std::strlen(env) ? v : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

int run(const RunConfig& c, std::istream* in, std::ostream& out, std::ostream& err) {
  try {
    if (c.m < 0 || c.n < 0) throw UsageError("--m and --n must be nonnegative");
    if (c.format == Format::Dot && c.command != Command::Hasse) throw UsageError("--format dot is only valid for hasse");
    if (c.graph != "gamma" && c.graph != "delta") throw UsageError("--graph must be gamma or delta");
    const int m = c.m, N = 2 * c.n;

    if (c.command == Command::Hasse && c.format == Format::Dot) {
      if (c.graph == "gamma")
        out << io::hasse_to_dot(hasse_gamma(m, N), m, N);
      else
        out << io::hasse_to_dot(hasse_delta(m, N), m, N);
      return Ok;
    }

    Json result;
    switch (c.command) {
      case Command::Enumerate: result = cmd_enumerate(m, N); break;
      case Command::Hasse: result = cmd_hasse(m, N, c.graph); break;
      case Command::Order: result = cmd_order(m, N, c.diagram, c.other); break;
      case Command::Fiber: result = cmd_fiber(c, m, N); break;
      case Command::MaxDiag: result = cmd_maxdiag(c, m, N); break;
      case Command::Dims: result = cmd_dims(m, N, c.verify); break;
      case Command::Classify: result = cmd_classify(c, in, m, N); break;
      case Command::Rep: result = cmd_rep(c, m, N); break;
      case Command::Desing: result = cmd_desing(m, N); break;
      case Command::Borel: result = cmd_borel(c, m, N); break;
    }
    if (c.format == Format::Json)
      out << result.dump(2) << "\n";
    else
      render_text(result, out, 0);
    return Ok;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return Domain;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return Domain;
  }
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd nilpotent orbits of orthosymplectic Lie superalgebras osp(m, 2n)"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  c.seed = default_seed();
  std::string format = "json";
  app.add_option("--m", c.m, "dimension of the even space")->required();
  app.add_option("--n", c.n, "half the dimension of the odd space (N = 2n)")->required();
  app.add_option("--format", format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--seed", c.seed, "search seed (default: OSPNIL_SEED or 0)");
  app.add_option("--budget", c.budget, "search budget in candidate elements");

  const std::map<std::string, Command> names{
      {"enumerate", Command::Enumerate}, {"hasse", Command::Hasse},   {"order", Command::Order},
      {"fiber", Command::Fiber},         {"maxdiag", Command::MaxDiag}, {"dims", Command::Dims},
      {"classify", Command::Classify},   {"rep", Command::Rep},       {"desing", Command::Desing},
      {"borel", Command::Borel}};
  const std::map<std::string, std::string> help{
      {"enumerate", "list the graded diagrams of osp(m, 2n)"},
      {"hasse", "Hasse diagram of the closure order"},
      {"order", "compare two diagrams in the closure order"},
      {"fiber", "diagrams over an even orbit (lambda, mu)"},
      {"maxdiag", "maximal diagram of a fiber, or of the whole nilcone"},
      {"dims", "orbit dimensions"},
      {"classify", "classify an odd element read as JSON"},
      {"rep", "matrix representative of a diagram"},
      {"desing", "desingularization dimension certificate"},
      {"borel", "mixed Borel subalgebra data"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, cmd] : names) subs[name] = app.add_subcommand(name, help.at(name));

  subs["order"]->add_option("--diagram", c.diagram, "compact diagram, e.g. 01010")->required();
  subs["order"]->add_option("--other", c.other, "second compact diagram")->required();
  subs["rep"]->add_option("--diagram", c.diagram, "compact diagram")->required();
  for (const char* s : {"fiber", "maxdiag"}) {
    subs[s]->add_option("--lambda", c.lambda, "orthogonal partition, e.g. (3,1)");
    subs[s]->add_option("--label", c.label, "I or II for a very even lambda");
    subs[s]->add_option("--mu", c.mu, "symplectic partition, e.g. (2)");
  }
  subs["classify"]->add_option("--input", c.input, "JSON file with {\"u\": [[...]]}; stdin when omitted");
  subs["hasse"]->add_option("--graph", c.graph, "gamma or delta")->check(CLI::IsMember({"gamma", "delta"}));
  subs["borel"]->add_flag("--cover", c.cover, "search a b1 witness for every diagram");
  subs["borel"]->add_flag("--kac", c.kac, "use the order with all even vectors first");
  subs["dims"]->add_flag("--verify", c.verify, "also compute the rank oracle on representatives");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  }
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) c.command = names.at(name);
  c.format = format == "dot" ? Format::Dot : format == "text" ? Format::Text : Format::Json;
  if (c.command == Command::Fiber && (c.lambda.empty() || c.mu.empty())) {
    err << "usage error: fiber needs --lambda and --mu\n";
    return Usage;
  }
  return run(c, &in, out, err);
}

}  // namespace ospnil::cli
