// lsa: command-line front end for the Lie superalgebra invariant engine.
//
// Exit codes: 0 success (every check holds), 1 user error, 2 a verification
// check failed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lsa/catalog.hpp"
#include "lsa/derivations.hpp"
#include "lsa/invariants.hpp"
#include "lsa/io.hpp"
#include "lsa/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kMismatch = 2;

struct UserError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

lsa::LieSuperalgebra load(const std::string& path, bool check_laws = true) {
  return lsa::io::parse_algebra(read_file(path), check_laws);
}

lsa::SuperDim parse_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used = 0;
    const auto a = std::stoul(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("trailing");
    const std::string rest = text.substr(comma + 1);
    const auto b = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("trailing");
    return {a, b};
  } catch (const std::exception&) {
    throw UserError(flag + " expects two non-negative integers 'A,B', got '" + text + "'");
  }
}

std::string sd(lsa::SuperDim d) { return lsa::to_string(d); }
const char* yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::string& path, bool json) {
  const auto L = load(path, false);
  const auto report = lsa::validate(L);
  if (json) {
    std::cout << lsa::report::emit(lsa::report::to_json(L, report));
  } else {
    std::cout << L.name() << " sdim " << sd(L.sdim()) << "\n";
    for (const auto& c : report.checks) {
      std::cout << "  " << c.law << ": " << (c.passed ? "pass" : "FAIL");
      if (!c.passed) std::cout << " (" << c.detail << ")";
      std::cout << "\n";
    }
  }
  return report.ok() ? kOk : kMismatch;
}

void print_invariants(const lsa::InvariantReport& r) {
  std::cout << r.name << "\n";
  std::cout << "  sdim L          " << sd(r.sdim) << "\n";
  std::cout << "  sdim L^2        " << sd(r.sdim_derived) << "\n";
  std::cout << "  sdim Z(L)       " << sd(r.sdim_center) << "\n";
  std::cout << "  sdim L/Z(L)     " << sd(r.sdim_mod_center) << "\n";
  std::cout << "  central series ";
  for (auto d : r.central_series) std::cout << " " << sd(d);
  std::cout << "\n  class           "
            << (r.nilpotency_class ? std::to_string(*r.nilpotency_class) : std::string("not nilpotent")) << "\n";
  std::cout << "  stem            " << yes_no(r.is_stem) << "\n";
  if (r.st) {
    std::cout << "  sd(L/Z(L))      " << sd(*r.generator_pair) << "\n";
    std::cout << "  lambda          " << sd(*r.lambda) << "\n";
    std::cout << "  st              " << sd(*r.st) << "  (t = " << *r.t_scalar << ")\n";
  }
}

int cmd_invariants(const std::string& path, bool json) {
  const auto r = lsa::invariant_report(load(path));
  if (json)
    std::cout << lsa::report::emit(lsa::report::to_json(r));
  else
    print_invariants(r);
  return kOk;
}

int cmd_derivations(const std::string& path, bool json) {
  const auto L = load(path);
  const auto der = lsa::derivation_space(L);
  const auto ad = lsa::inner_derivations(L);
  const auto ids = lsa::id_star(L);
  if (json) {
    lsa::report::Json j;
    j["algebra"] = L.name();
    j["der"] = lsa::report::to_json(der);
    j["ad"] = lsa::report::to_json(ad);
    j["id"] = lsa::report::to_json(ids.id);
    j["id_star"] = lsa::report::to_json(ids.id_star);
    std::cout << lsa::report::emit(j);
  } else {
    std::cout << L.name() << "\n";
    std::cout << "  sdim Der  " << sd(der.sdim()) << "\n";
    std::cout << "  sdim ID   " << sd(ids.id.sdim()) << "\n";
    std::cout << "  sdim ID*  " << sd(ids.id_star.sdim()) << "\n";
    std::cout << "  sdim ad   " << sd(ad.sdim()) << "\n";
  }
  return kOk;
}

int cmd_bounds(const std::string& path, bool json) {
  const auto L = load(path);
  const auto schur = lsa::schur_bound_check(L);
  const auto idstar = lsa::idstar_bound_check(L);
  const auto audit = lsa::proposition_audit(L);
  const auto j = lsa::report::bounds_json(L, schur, idstar, audit);
  if (json) {
    std::cout << lsa::report::emit(j);
  } else {
    std::cout << L.name() << "\n";
    std::cout << "  sdim L/Z(L) " << sd(schur.sdim_mod_center) << " <= lambda " << sd(schur.lambda) << ": "
              << yes_no(schur.holds) << "\n";
    std::cout << "  sdim ID* " << sd(idstar.sdim_id_star) << " <= lambda " << sd(idstar.lambda) << ": "
              << yes_no(idstar.bound_holds) << "\n";
    std::cout << "  ad " << sd(idstar.sdim_ad) << " <= ID* " << sd(idstar.sdim_id_star) << " <= ID "
              << sd(idstar.sdim_id) << " <= Der " << sd(idstar.sdim_der) << ": " << yes_no(idstar.chain_holds) << "\n";
    std::cout << "  dim L^2 = " << audit.derived_dim << ", t = " << audit.t << ", ladder: " << yes_no(audit.ok())
              << "\n";
  }
  return j["all_hold"].get<bool>() ? kOk : kMismatch;
}

int cmd_catalog_show(const std::string& name, bool json) {
  const auto& entry = lsa::catalog::get(name);
  if (json) {
    std::cout << lsa::report::emit(lsa::report::to_json(lsa::invariant_report(entry.algebra)));
  } else {
    std::cout << lsa::io::export_algebra(entry.algebra);
  }
  return kOk;
}

int cmd_catalog_verify(bool table1, bool classification, bool json) {
  if (!table1 && !classification) table1 = classification = true;
  bool ok = true;
  lsa::report::Json j;
  if (table1) {
    const auto r = lsa::catalog::verify_table1();
    ok = ok && r.ok();
    if (json) {
      j["table1"] = lsa::report::to_json(r);
    } else {
      for (const auto& res : r.results) {
        std::cout << (res.matches ? "match    " : "MISMATCH ") << res.name << "  " << sd(res.computed.sdim_mod_center)
                  << " " << sd(res.computed.generator_pair) << " " << sd(res.computed.sdim_derived);
        if (!res.matches)
          std::cout << "  stored " << sd(res.stored.sdim_mod_center) << " " << sd(res.stored.generator_pair) << " "
                    << sd(res.stored.sdim_derived) << (res.error.empty() ? "" : "  " + res.error);
        std::cout << "\n";
      }
      std::cout << "table1: " << (r.ok() ? "all rows match" : "mismatches found") << "\n";
    }
  }
  if (classification) {
    const auto r = lsa::catalog::verify_classification();
    ok = ok && r.ok();
    if (json) {
      j["classification"] = lsa::report::to_json(r);
    } else {
      std::size_t failed = 0;
      for (const auto& c : r.checks) {
        if (c.passed) continue;
        ++failed;
        std::cout << "FAIL " << c.subject << " st " << sd(c.computed) << (c.listed ? " expected " + sd(c.expected) : "")
                  << (c.note.empty() ? "" : "  " + c.note) << "\n";
      }
      std::cout << "classification: " << r.checks.size() - failed << "/" << r.checks.size() << " checks hold\n";
    }
  }
  if (json) std::cout << lsa::report::emit(j);
  return ok ? kOk : kMismatch;
}

int cmd_classify(const std::string& st_text, const std::string& sdim_text, bool json) {
  const auto st_value = parse_pair(st_text, "--st");
  const auto sdim = parse_pair(sdim_text, "--sdim");
  const auto instances = lsa::classify_by_st(st_value, sdim);
  if (json) {
    std::cout << lsa::report::emit(lsa::report::to_json(instances));
  } else {
    if (instances.empty()) std::cout << "no nilpotent Lie superalgebra of sdim " << sd(sdim) << " has st " << sd(st_value) << "\n";
    for (const auto& inst : instances) std::cout << inst.algebra.name() << "    [" << inst.family << "]\n";
  }
  return kOk;
}

int cmd_make(const lsa::LieSuperalgebra& L, const std::string& out_path) {
  const std::string text = lsa::io::export_algebra(L);
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UserError("cannot write " + out_path);
  out << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants, superderivations and st classification of finite-dimensional Lie superalgebras"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  auto add_file_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", file, "algebra file")->required();
    sub->add_flag("--json", json, "emit JSON");
    return sub;
  };
  auto* validate_cmd = add_file_command("validate", "check grading, super-skew-symmetry and super-Jacobi");
  auto* invariants_cmd = add_file_command("invariants", "L^2, Z(L), central series, generator pair, st");
  auto* derivations_cmd = add_file_command("derivations", "Der(L), ad(L), ID(L), ID*(L)");
  auto* bounds_cmd = add_file_command("bounds", "Schur-type and ID* bounds, inclusion chain, st ladder");

  auto* catalog_cmd = app.add_subcommand("catalog", "built-in stem nilpotent superalgebras");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list entry names");
  std::string entry_name;
  auto* show_cmd = catalog_cmd->add_subcommand("show", "print an entry in the algebra file format");
  show_cmd->add_option("NAME", entry_name, "entry name, e.g. (4|0)_2")->required();
  show_cmd->add_flag("--json", json, "print its invariant report as JSON");
  bool table1 = false;
  bool classification = false;
  auto* verify_cmd = catalog_cmd->add_subcommand("verify", "recompute stored invariants and st families");
  verify_cmd->add_flag("--table1", table1, "check the stored invariant triples");
  verify_cmd->add_flag("--classification", classification, "check st of every classified family");
  verify_cmd->add_flag("--json", json, "emit JSON");

  std::string st_text;
  std::string sdim_text;
  auto* classify_cmd = app.add_subcommand("classify", "list the algebras with a given st and superdimension");
  classify_cmd->add_option("--st", st_text, "st value R,S")->required();
  classify_cmd->add_option("--sdim", sdim_text, "superdimension K,L")->required();
  classify_cmd->add_flag("--json", json, "emit JSON");

  auto* make_cmd = app.add_subcommand("make", "write a standard family member in the algebra file format");
  make_cmd->require_subcommand(1);
  std::string out_path;
  std::size_t m = 0;
  std::size_t n = 0;
  auto* make_he = make_cmd->add_subcommand("heisenberg-even", "H(m,n) with even center");
  make_he->add_option("M", m)->required();
  make_he->add_option("N", n)->required();
  auto* make_ho = make_cmd->add_subcommand("heisenberg-odd", "H_m with odd center");
  make_ho->add_option("M", m)->required();
  auto* make_tower = make_cmd->add_subcommand("tower", "filiform tower of dimension T+3");
  make_tower->add_option("T", m)->required();
  auto* make_ab = make_cmd->add_subcommand("abelian", "abelian A(K|L)");
  make_ab->add_option("K", m)->required();
  make_ab->add_option("L", n)->required();
  for (auto* leaf : {make_he, make_ho, make_tower, make_ab})
    leaf->add_option("--out", out_path, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUserError;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, json);
    if (*invariants_cmd) return cmd_invariants(file, json);
    if (*derivations_cmd) return cmd_derivations(file, json);
    if (*bounds_cmd) return cmd_bounds(file, json);
    if (*list_cmd) {
      for (const auto& name : lsa::catalog::list()) std::cout << name << "\n";
      return kOk;
    }
    if (*show_cmd) return cmd_catalog_show(entry_name, json);
    if (*verify_cmd) return cmd_catalog_verify(table1, classification, json);
    if (*classify_cmd) return cmd_classify(st_text, sdim_text, json);
    if (*make_he) return cmd_make(lsa::heisenberg_even(m, n), out_path);
    if (*make_ho) return cmd_make(lsa::heisenberg_odd(m), out_path);
    if (*make_tower) return cmd_make(lsa::tower(m), out_path);
    if (*make_ab) return cmd_make(lsa::abelian(m, n), out_path);
  } catch (const lsa::io::ParseError& e) {
    std::cerr << "error: " << file << ":" << e.what() << "\n";
    return kUserError;
  } catch (const lsa::InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const lsa::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUserError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUserError;
  }
  return kUserError;
}
