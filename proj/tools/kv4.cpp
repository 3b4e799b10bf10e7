// kv4: command-line front end for modules over kV4 in characteristic 2.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "kv4/census.hpp"
#include "kv4/classify.hpp"
#include "kv4/conformance.hpp"
#include "kv4/diagram.hpp"
#include "kv4/error.hpp"
#include "kv4/serialize.hpp"

using namespace kv4;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

KModule load(const std::string& path) { return parse_module(read_input(path)); }

void emit(const std::string& text, const std::string& out_path = "") {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
  out << text;
}

Field field_of(unsigned m) {
  if (m < 1 || m > 8) throw Error(ErrorCode::InvalidField, "--field must be in 1..8");
  return m == 1 ? Field::gf2() : Field::standard(m);
}

Json info(const KModule& m) {
  Json j;
  j["field"] = to_json(m.field());
  j["dim"] = m.dim();
  j["free_rank"] = free_rank(m);
  j["socle_dim"] = socle(m).dim();
  j["radical_dim"] = radical(m).dim();
  j["radical_quotient_dim"] = radical_quotient_dim(m);
  // The pencil of the projective-free part.
  const QuiverRep r = to_quiver(omega(m, 0)).rep;
  Json p;
  p["d1"] = r.d1;
  p["d2"] = r.d2;
  if (r.d1 == r.d2) {
    Json bits = Json::array();
    for (auto b : to_bits(pencil_determinant(r))) bits.push_back(b);
    p["determinant"] = bits;
    p["determinant_text"] = to_string(pencil_determinant(r), "λ");
  } else {
    p["determinant"] = nullptr;
  }
  j["pencil"] = p;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modules over the group algebra of the Klein four group in characteristic 2"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "Seed for randomized paths")->capture_default_str();

  std::string file, file2, out_path;
  auto* validate = app.add_subcommand("validate", "Check a module document");
  validate->add_option("FILE", file, "Module file (stdin when omitted or -)");

  auto* info_cmd = app.add_subcommand("info", "Dimension, invariants and pencil determinant");
  info_cmd->add_option("FILE", file);

  bool witness = false;
  auto* decompose_cmd = app.add_subcommand("decompose", "Indecomposable summands with labels");
  decompose_cmd->add_option("FILE", file);
  decompose_cmd->add_flag("--witness", witness, "Include the basis-change witness");

  int shift = 1;
  auto* omega_cmd = app.add_subcommand("omega", "Heller shift Omega^n");
  omega_cmd->add_option("FILE", file);
  omega_cmd->add_option("-n", shift, "Shift (any integer)")->required();

  auto* dual_cmd = app.add_subcommand("dual", "Dual module");
  dual_cmd->add_option("FILE", file);

  auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
  iso_cmd->add_option("FILE1", file)->required();
  iso_cmd->add_option("FILE2", file2)->required();

  unsigned field_degree = 1;
  auto* make = app.add_subcommand("make", "Canonical module of a label");
  make->require_subcommand(1);
  make->add_option("-o", out_path, "Output file");
  make->add_option("--field", field_degree, "Work over GF(2^M)")->capture_default_str();
  std::string poly_text;
  unsigned power = 1, index = 1;
  auto* make_free = make->add_subcommand("free", "The free module kV4");
  auto* make_trivial = make->add_subcommand("trivial", "The trivial module k");
  auto* make_band = make->add_subcommand("band", "Band(f, l)");
  make_band->add_option("--poly", poly_text, "Monic irreducible f, e.g. x^2+x+1 or x2+x+1")->required();
  make_band->add_option("--power", power, "l")->capture_default_str();
  auto* make_zero = make->add_subcommand("zeroband", "ZeroBand(n)");
  make_zero->add_option("-n", index)->required();
  auto* make_syz = make->add_subcommand("syzygy", "Omega^n(k)");
  make_syz->add_option("-n", index)->required();
  auto* make_cosyz = make->add_subcommand("cosyzygy", "Omega^-n(k)");
  make_cosyz->add_option("-n", index)->required();
  for (auto* sub : make->get_subcommands({})) sub->fallthrough();

  std::size_t census_dim = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Brute-force census of indecomposables");
  enumerate_cmd->add_option("--dim", census_dim)->required();
  enumerate_cmd->add_option("--field", field_degree)->capture_default_str();

  std::string format = "ascii";
  auto* diagram_cmd = app.add_subcommand("diagram", "Zig-zag diagram");
  diagram_cmd->add_option("FILE", file);
  diagram_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "dot"}))->capture_default_str();

  int ar_index = 0;
  auto* ar_cmd = app.add_subcommand("ar", "Almost split sequence ending in Omega^l(k)");
  ar_cmd->add_option("-l", ar_index)->required();
  ar_cmd->add_option("--field", field_degree)->capture_default_str();

  ConformanceOptions check_opts;
  auto* check_cmd = app.add_subcommand("check", "Run the conformance suite");
  check_cmd->add_option("--max-dim", check_opts.max_dim)->capture_default_str();
  check_cmd->add_option("--census-max-dim", check_opts.census_max_dim)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*validate) {
      const KModule m = load(file);
      Json j;
      j["valid"] = true;
      j["dim"] = m.dim();
      emit(dump(j));
    } else if (*info_cmd) {
      emit(dump(info(load(file))));
    } else if (*decompose_cmd) {
      emit(dump(to_json(decompose(load(file)), witness)));
    } else if (*omega_cmd) {
      emit(dump(to_json(omega(load(file), shift))));
    } else if (*dual_cmd) {
      emit(dump(to_json(dual(load(file)))));
    } else if (*iso_cmd) {
      const KModule a = load(file), b = load(file2);
      IsoOptions opts;
      opts.seed = seed;
      const auto x = iso(a, b, opts);
      Json j;
      j["isomorphic"] = x.has_value();
      if (x) j["witness"] = to_json(*x);
      emit(dump(j));
    } else if (*make) {
      const Field f = field_of(field_degree);
      Label l;
      if (*make_free) l = Label::free_module();
      if (*make_trivial) l = Label::trivial();
      if (*make_band) l = Label::band(parse_poly(f, poly_text), power);
      if (*make_zero) l = Label::zero_band(index);
      if (*make_syz) l = Label::syzygy_pos(index);
      if (*make_cosyz) l = Label::syzygy_neg(index);
      emit(dump(to_json(canonical(f, l))), out_path);
    } else if (*enumerate_cmd) {
      const Field f = field_of(field_degree);
      const Census c = enumerate(f, census_dim);
      Json j;
      j["field"] = to_json(f);
      j["dim"] = c.dim;
      j["pruned"] = c.pruned;
      j["candidates"] = c.candidates;
      j["valid"] = c.valid;
      j["indecomposable"] = c.indecomposable;
      j["classes"] = c.classes.size();
      Json labels = Json::array();
      for (const auto& cl : c.classes) {
        Json e;
        e["label"] = cl.label ? to_json(*cl.label) : Json(nullptr);
        e["members"] = cl.members;
        e["representative"] = to_json(cl.representative);
        labels.push_back(e);
      }
      j["labels"] = labels;
      emit(dump(j));
    } else if (*diagram_cmd) {
      const DiagramLayout d = layout_zigzag(load(file));
      emit(format == "dot" ? render_dot(d) : render_ascii(d));
    } else if (*ar_cmd) {
      emit(dump(to_json(ar_sequence(field_of(field_degree), ar_index))));
    } else if (*check_cmd) {
      check_opts.seed = seed;
      bool ok = true;
      run_conformance(check_opts, [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.pass;
      });
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(e.name());
    j["message"] = e.what();
    std::cerr << dump(j);
    return is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "InternalError";
    j["message"] = e.what();
    std::cerr << dump(j);
    return 2;
  }
  return 0;
}
