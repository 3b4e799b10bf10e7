#include "kv4/serialize.hpp"

#include "kv4/error.hpp"

namespace kv4 {

namespace {

Json poly_bits(const Poly& p) {
  Json out = Json::array();
  for (auto b : to_bits(p)) out.push_back(b);
  return out;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t as_uint(const Json& j, const std::string& what) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) throw Error(ErrorCode::ParseError, what + " must be an integer");
  if (j.is_number_integer() && j.get<std::int64_t>() < 0) throw Error(ErrorCode::ParseError, what + " must be nonnegative");
  return j.get<std::uint64_t>();
}

}  // namespace

Json to_json(const Field& f) {
  Json j;
  j["degree"] = f.degree();
  if (f.degree() > 1) {
    Json bits = Json::array();
    for (unsigned i = 0; i <= f.degree(); ++i) bits.push_back((f.modulus() >> i) & 1u);
    j["modulus"] = bits;
  }
  return j;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const KModule& m) {
  Json j;
  j["field"] = to_json(m.field());
  j["dim"] = m.dim();
  j["A"] = to_json(m.a());
  j["B"] = to_json(m.b());
  return j;
}

Json to_json(const Label& l) {
  Json j;
  j["kind"] = kind_name(l.kind);
  if (l.kind == Label::Kind::Band) {
    j["poly"] = poly_bits(*l.poly);
    j["power"] = l.power;
  } else if (l.kind != Label::Kind::Free && l.kind != Label::Kind::Trivial) {
    j["n"] = l.n;
  }
  return j;
}

Json to_json(const Decomposition& d, bool with_witness) {
  Json j;
  Json summands = Json::array();
  for (const auto& s : d.summands) {
    Json e;
    e["label"] = to_json(s.label);
    e["dim"] = dim_of(s.label);
    summands.push_back(std::move(e));
  }
  j["summands"] = std::move(summands);
  if (with_witness) j["witness"] = to_json(d.witness);
  return j;
}

Json to_json(const QuiverRep& r) {
  Json j;
  j["d1"] = r.d1;
  j["d2"] = r.d2;
  j["psi1"] = to_json(r.psi1);
  j["psi2"] = to_json(r.psi2);
  return j;
}

Json to_json(const ShortExactSequence& s) {
  Json j;
  j["left"] = to_json(s.left);
  j["middle"] = to_json(s.middle);
  j["right"] = to_json(s.right);
  j["inject"] = to_json(s.inject);
  j["surject"] = to_json(s.surject);
  return j;
}

Field field_from_json(const Json& j) {
  const std::uint64_t m = as_uint(member(j, "degree"), "field degree");
  if (m < 1 || m > Field::kMaxDegree) throw Error(ErrorCode::InvalidField, "degree " + std::to_string(m) + " outside 1..16");
  if (m == 1) return Field::gf2();
  if (!j.contains("modulus")) {
    if (m > 8) throw Error(ErrorCode::InvalidField, "no built-in modulus for degree " + std::to_string(m));
    return Field::standard(static_cast<unsigned>(m));
  }
  const Json& bits = j.at("modulus");
  if (!bits.is_array()) throw Error(ErrorCode::ParseError, "modulus must be a coefficient list");
  std::uint32_t mod = 0;
  if (bits.size() > 32) throw Error(ErrorCode::InvalidField, "modulus too long");
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const auto b = as_uint(bits[i], "modulus coefficient");
    if (b > 1) throw Error(ErrorCode::InvalidField, "modulus coefficients must be 0 or 1");
    mod |= static_cast<std::uint32_t>(b) << i;
  }
  return Field::with_modulus(static_cast<unsigned>(m), mod);
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(rows) + " rows");
  std::vector<Elem> e;
  e.reserve(rows * cols);
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(cols) + " columns");
    for (const Json& x : row) {
      const auto v = as_uint(x, "matrix entry");
      if (!f.contains(v)) throw Error(ErrorCode::InvalidField, "entry " + std::to_string(v) + " not in " + to_string(f));
      e.push_back(static_cast<Elem>(v));
    }
  }
  return Matrix(f, rows, cols, std::move(e));
}

KModule module_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "module document must be an object");
  const Field f = field_from_json(member(j, "field"));
  const auto n = static_cast<std::size_t>(as_uint(member(j, "dim"), "dim"));
  if (j.contains("sigma") || j.contains("tau"))
    return from_group_action(matrix_from_json(f, member(j, "sigma"), n, n), matrix_from_json(f, member(j, "tau"), n, n));
  return KModule::validate(matrix_from_json(f, member(j, "A"), n, n), matrix_from_json(f, member(j, "B"), n, n));
}

Label label_from_json(const Field& f, const Json& j) {
  const std::string kind = member(j, "kind").get<std::string>();
  auto index = [&] { return static_cast<unsigned>(as_uint(member(j, "n"), "n")); };
  if (kind == "Free") return Label::free_module();
  if (kind == "Trivial") return Label::trivial();
  if (kind == "ZeroBand") return Label::zero_band(index());
  if (kind == "SyzygyPos") return Label::syzygy_pos(index());
  if (kind == "SyzygyNeg") return Label::syzygy_neg(index());
  if (kind == "Band") {
    std::vector<std::uint64_t> bits;
    for (const Json& b : member(j, "poly")) bits.push_back(as_uint(b, "poly coefficient"));
    return Label::band(from_bits(f, bits), static_cast<unsigned>(as_uint(member(j, "power"), "power")));
  }
  throw Error(ErrorCode::InvalidLabel, "unknown kind \"" + kind + "\"");
}

KModule parse_module(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    return module_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

}  // namespace kv4
