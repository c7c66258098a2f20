#include "gmunn/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gmunn/io.hpp"
#include "gmunn/munn.hpp"
#include "gmunn/suites.hpp"
#include "json.hpp"

namespace gmunn::cli {

namespace {

constexpr const char* kVersion = "gmunn 0.1.0";

using Json = nlohmann::ordered_json;

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, Json>> results;
  std::string status = "ok";

  void add(const std::string& key, Json value) {
    results.emplace_back(key, std::move(value));
  }
};

Json id_array(const std::vector<Id>& ids) {
  Json arr = Json::array();
  for (Id v : ids) arr.push_back(v);
  return arr;
}

std::string graph_text(const std::vector<Id>& graph) {
  if (graph.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < graph.size(); ++i) {
    if (i) os << ' ';
    if (graph[i] == kNone)
      os << '-';
    else
      os << graph[i];
  }
  return os.str();
}

std::string points_text(uint32_t mask, int m) {
  if (mask == 0) return "-";
  std::ostringstream os;
  bool first = true;
  for (Id p = 0; p < m; ++p)
    if (mask & (1u << p)) {
      if (!first) os << ' ';
      os << p;
      first = false;
    }
  return os.str();
}

void render_text(std::ostream& out, const Report& report, bool banner) {
  if (banner) out << kVersion << '\n';
  out << "command: " << report.command << '\n';
  for (const auto& [path, digest] : report.inputs)
    out << "input: " << path << " fnv1a=" << digest << '\n';
  for (const auto& [key, value] : report.results) {
    if (value.is_string()) {
      std::string text = value.get<std::string>();
      if (text.find('\n') != std::string::npos) {
        out << key << ":\n" << text;
        if (text.empty() || text.back() != '\n') out << '\n';
        continue;
      }
      out << key << " = " << text << '\n';
      continue;
    }
    out << key << " = " << value.dump() << '\n';
  }
  out << "status: " << report.status << '\n';
}

void render_json(std::ostream& out, const Report& report, bool banner) {
  Json j;
  if (banner) j["banner"] = kVersion;
  j["command"] = report.command;
  Json inputs = Json::object();
  for (const auto& [path, digest] : report.inputs) inputs[path] = digest;
  j["inputs"] = inputs;
  Json results = Json::object();
  for (const auto& [key, value] : report.results) results[key] = value;
  j["results"] = results;
  j["status"] = report.status;
  out << j.dump(2) << '\n';
}

struct Options {
  bool json = false;
  bool no_banner = false;
  std::string out_path;
};

std::string load_input(const std::string& path, Report& report) {
  std::string text = io::read_file(path);
  report.inputs.emplace_back(path, io::fnv1a_hex(text));
  return text;
}

void emit_artifact(Report& report, const Options& opt, const std::string& key,
                   const std::string& text) {
  if (opt.out_path.empty()) {
    report.add(key, text);
    return;
  }
  std::string path =
      key == "table" ? opt.out_path : opt.out_path + "." + key;
  io::write_file(path, text);
  report.add(key + "_file", path);
}

std::string munn_table_text(const MunnSemigroup& ms) {
  std::ostringstream os;
  io::write_isg(os, ms.table);
  return os.str();
}

std::string munn_sidecar_text(const MunnSemigroup& ms) {
  std::ostringstream os;
  os << "elements " << ms.elements.size() << '\n';
  for (size_t i = 0; i < ms.elements.size(); ++i) {
    const auto& el = ms.elements[i];
    os << i << " e " << el.e << " f " << el.f << " alpha "
       << graph_text(el.alpha) << " theta " << graph_text(el.theta) << '\n';
  }
  return os.str();
}

void cmd_validate(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  switch (io::sniff(text)) {
    case io::FileKind::isg: {
      auto s = io::read_isg(in);
      report.add("kind", "isg");
      report.add("size", s.n);
      report.add("idempotents", static_cast<int>(s.idem.size()));
      break;
    }
    case io::FileKind::psh: {
      auto p = io::read_psh(in);
      report.add("kind", "psh");
      report.add("carrier", p.m);
      report.add("lattice", p.lattice.size());
      break;
    }
    case io::FileKind::act: {
      auto a = io::read_act(in);
      report.add("kind", "act");
      report.add("carrier", a.m);
      report.add("semigroup", a.s.n);
      report.add("global", a.global);
      break;
    }
    case io::FileKind::top: {
      auto x = io::read_top(in);
      report.add("kind", "top");
      report.add("points", x.m);
      report.add("opens", static_cast<int>(x.opens.size()));
      break;
    }
    case io::FileKind::bun: {
      auto b = io::read_bun(in);
      report.add("kind", "bun");
      report.add("total_points", b.total.m);
      report.add("base_points", b.base.m);
      break;
    }
  }
  report.add("valid", true);
}

void cmd_info(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  switch (io::sniff(text)) {
    case io::FileKind::isg: {
      auto s = io::read_isg(in);
      report.add("size", s.n);
      report.add("idempotents", static_cast<int>(s.idem.size()));
      report.add("fundamental", is_fundamental(s));
      report.add("clifford", centralizer_of_idempotents(s).size() ==
                                 static_cast<size_t>(s.n));
      break;
    }
    case io::FileKind::psh: {
      auto p = io::read_psh(in);
      report.add("carrier", p.m);
      report.add("lattice", p.lattice.size());
      report.add("global_support", p.global_support());
      break;
    }
    case io::FileKind::act: {
      auto a = io::read_act(in);
      report.add("carrier", a.m);
      report.add("semigroup", a.s.n);
      report.add("global", a.global);
      auto rho = characteristic_congruence(a);
      report.add("characteristic_classes", rho.class_count());
      break;
    }
    case io::FileKind::top: {
      auto x = io::read_top(in);
      report.add("points", x.m);
      report.add("opens", static_cast<int>(x.opens.size()));
      report.add("t0", is_T0(x));
      report.add("sober", is_sober(x));
      break;
    }
    case io::FileKind::bun: {
      auto b = io::read_bun(in);
      report.add("total_points", b.total.m);
      report.add("base_points", b.base.m);
      report.add("sections",
                 static_cast<int>(sections_presheaf(b).sections.size()));
      break;
    }
  }
}

void cmd_mu(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto s = io::read_isg(in);
  auto m = mu(s);
  report.add("partition", id_array(m.classof));
  report.add("classes", m.class_count());
  report.add("fundamental", m == equality_congruence(s.n));
}

void cmd_munn(const std::string& path, const Options& opt, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto s = io::read_isg(in);
  auto rep = munn_representation(s);
  report.add("size", rep.target.table.n);
  emit_artifact(report, opt, "table", munn_table_text(rep.target));
  emit_artifact(report, opt, "elements", munn_sidecar_text(rep.target));
}

void cmd_gmunn(const std::string& path, const Options& opt, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto p = io::read_psh(in);
  auto tx = generalized_munn(p);
  report.add("size", tx.table.n);
  emit_artifact(report, opt, "table", munn_table_text(tx));
  emit_artifact(report, opt, "elements", munn_sidecar_text(tx));
}

void cmd_repr(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  if (io::sniff(text) == io::FileKind::isg) {
    auto s = io::read_isg(in);
    auto rep = munn_representation(s);
    report.add("target", "munn");
    report.add("target_size", rep.target.table.n);
    report.add("map", id_array(rep.rep.map));
    report.add("is_hom", rep.rep.report.is_hom);
    report.add("idempotent_separating",
               rep.rep.report.is_idempotent_separating);
    report.add("wide", rep.rep.report.image_is_wide);
    report.add("kernel", id_array(rep.rep.report.kernel->classof));
  } else {
    auto a = io::read_act(in);
    auto rep = generalized_munn_representation(a);
    report.add("target", "generalized_munn");
    report.add("target_size", rep.target.table.n);
    report.add("map", id_array(rep.rep.map));
    report.add("is_hom", rep.rep.report.is_hom);
    report.add("idempotent_separating",
               rep.rep.report.is_idempotent_separating);
    report.add("wide", rep.rep.report.image_is_wide);
    report.add("kernel", id_array(rep.rep.report.kernel->classof));
  }
}

void cmd_char_cong(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto a = io::read_act(in);
  auto rho = characteristic_congruence(a);
  report.add("partition", id_array(rho.classof));
  report.add("classes", rho.class_count());
  report.add("idempotent_separating", is_idempotent_separating(a.s, rho));
  report.add("equality", rho == equality_congruence(a.s.n));
}

void cmd_theorem_c(Report& report) {
  auto suite = suites::representation_suite();
  for (const auto& item : suite.items)
    report.add(item.name, item.ok() ? "pass" : "fail");
  report.add("actions_checked", static_cast<int>(suite.items.size()));
  report.add("all_ok", suite.ok());
  if (!suite.ok()) report.status = "error";
}

void cmd_theorem_d(Report& report) {
  auto suite = suites::roundtrip_suite();
  for (const auto& item : suite.items) {
    std::ostringstream os;
    os << (item.report.ok() ? "pass" : "fail") << " (homs="
       << item.report.homs_checked << ")";
    report.add(item.name, os.str());
  }
  report.add("pairs_checked", static_cast<int>(suite.items.size()));
  report.add("all_ok", suite.ok());
  if (!suite.ok()) report.status = "error";
}

void cmd_topo(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto x = io::read_top(in);
  auto sober = sober_report(x);
  report.add("points", x.m);
  report.add("opens", static_cast<int>(x.opens.size()));
  report.add("t0", sober.t0);
  report.add("sober", sober.sober);
  Json filters = Json::array();
  for (uint32_t f : sober.filters) filters.push_back(points_text(f, x.m));
  report.add("prime_filter_minima", filters);
  Json nonpoint = Json::array();
  for (uint32_t f : sober.nonpoint_filters)
    nonpoint.push_back(points_text(f, x.m));
  report.add("nonpoint_filters", nonpoint);
  auto hs = partial_homeo_semigroup(x);
  report.add("partial_homeos", hs.table.n);
  report.add("fundamental", is_fundamental(hs.table));
  if (sober.sober) {
    auto prop = prop_e_check(x);
    report.add("munn_of_opens", prop.munn_size);
    report.add("direct_image_iso", prop.iso);
  }
}

void cmd_bundle(const std::string& path, Report& report) {
  std::string text = load_input(path, report);
  std::istringstream in(text);
  auto b = io::read_bun(in);
  auto gamma = sections_presheaf(b);
  report.add("sections", static_cast<int>(gamma.sections.size()));
  bool global = false;
  for (const auto& sigma : gamma.sections)
    if (sigma.domain == b.base.full()) global = true;
  report.add("global_section", global);
  auto la = la_action(b);
  report.add("la_size", la.la.table.n);
  auto rho = characteristic_congruence(la.action);
  report.add("characteristic_separating",
             is_idempotent_separating(la.la.table, rho));
  if (is_sober(b.base)) {
    auto f = theorem_f_check(b);
    report.add("munn_of_sections", f.munn_size);
    report.add("sections_munn_iso", f.iso);
    report.add("reconstruction", f.reconstruction_ok);
    report.add("characteristic_equality", f.char_cong_equality);
  } else {
    report.add("base_sober", false);
  }
}

void cmd_gen(const std::string& name, int n, const Options& opt,
             Report& report) {
  auto s = standard_example(name, n);
  report.add("name", name);
  report.add("n", n);
  report.add("size", s.n);
  std::ostringstream os;
  io::write_isg(os, s);
  emit_artifact(report, opt, "table", os.str());
}

struct ConfigGuard {
  int saved_max = max_size();
  ~ConfigGuard() { set_max_size(saved_max); }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"finite inverse semigroups, presheaves and generalised Munn "
               "semigroups"};
  app.name("gmunn");

  Options opt;
  int max_size_flag = -1;
  app.add_flag("--json", opt.json, "emit the report as JSON");
  app.add_flag("--no-banner", opt.no_banner, "suppress the version banner");
  app.add_option("--max-size", max_size_flag,
                 "cap for exhaustive enumerations");
  app.add_option("--out", opt.out_path, "write emitted tables to this file");

  std::string file;
  std::string gen_name;
  int gen_n = 0;

  auto* validate = app.add_subcommand("validate", "check any input file");
  validate->add_option("file", file)->required();
  auto* info = app.add_subcommand("info", "basic facts about an input file");
  info->add_option("file", file)->required();
  auto* mu_cmd = app.add_subcommand(
      "mu", "maximum idempotent-separating congruence of an isg file");
  mu_cmd->add_option("file", file)->required();
  auto* munn = app.add_subcommand(
      "munn", "Munn semigroup of the idempotents of an isg file");
  munn->add_option("file", file)->required();
  auto* gmunn_cmd = app.add_subcommand(
      "gmunn", "generalised Munn semigroup of a psh file");
  gmunn_cmd->add_option("file", file)->required();
  auto* repr = app.add_subcommand(
      "repr", "Munn representation of an isg or act file");
  repr->add_option("file", file)->required();
  auto* charcong = app.add_subcommand(
      "char-cong", "characteristic congruence of an act file");
  charcong->add_option("file", file)->required();
  auto* thc = app.add_subcommand(
      "theorem-c", "representation checks over the action corpus");
  auto* thd = app.add_subcommand(
      "theorem-d", "hom/action round trips over the pair corpus");
  auto* topo = app.add_subcommand("topo", "analyse a top file");
  topo->add_option("file", file)->required();
  auto* bundle = app.add_subcommand("bundle", "analyse a bun file");
  bundle->add_option("file", file)->required();
  auto* gen = app.add_subcommand("gen", "write a named standard example");
  gen->add_option("name", gen_name)->required();
  gen->add_option("n", gen_n)->required();

  app.require_subcommand(1);

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> raw;
    raw.push_back("gmunn");
    for (const auto& a : argv) raw.push_back(a.c_str());
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 1;
  }

  ConfigGuard guard;
  if (max_size_flag > 0) {
    set_max_size(max_size_flag);
  } else if (const char* env = std::getenv("GMUNN_MAX_SIZE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) set_max_size(static_cast<int>(v));
  }

  Report report;
  int exit_code = 0;
  try {
    if (*validate) {
      report.command = "validate";
      cmd_validate(file, report);
    } else if (*info) {
      report.command = "info";
      cmd_info(file, report);
    } else if (*mu_cmd) {
      report.command = "mu";
      cmd_mu(file, report);
    } else if (*munn) {
      report.command = "munn";
      cmd_munn(file, opt, report);
    } else if (*gmunn_cmd) {
      report.command = "gmunn";
      cmd_gmunn(file, opt, report);
    } else if (*repr) {
      report.command = "repr";
      cmd_repr(file, report);
    } else if (*charcong) {
      report.command = "char-cong";
      cmd_char_cong(file, report);
    } else if (*thc) {
      report.command = "theorem-c";
      cmd_theorem_c(report);
    } else if (*thd) {
      report.command = "theorem-d";
      cmd_theorem_d(report);
    } else if (*topo) {
      report.command = "topo";
      cmd_topo(file, report);
    } else if (*bundle) {
      report.command = "bundle";
      cmd_bundle(file, report);
    } else if (*gen) {
      report.command = "gen";
      cmd_gen(gen_name, gen_n, opt, report);
    }
  } catch (const Error& e) {
    report.status = "error";
    report.add("error", errc_name(e.code()));
    report.add("detail", e.what());
    if (!e.witness().empty()) report.add("witness", id_array(e.witness()));
    switch (e.code()) {
      case Errc::parse_error:
        exit_code = 1;
        break;
      case Errc::size_cap_exceeded:
        exit_code = 3;
        break;
      default:
        exit_code = 2;
        break;
    }
  }

  if (report.status == "error" && exit_code == 0) exit_code = 2;
  if (opt.json)
    render_json(out, report, !opt.no_banner);
  else
    render_text(out, report, !opt.no_banner);
  return exit_code;
}

}  // namespace gmunn::cli
